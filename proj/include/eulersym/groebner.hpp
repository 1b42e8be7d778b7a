#pragma once

#include <span>
#include <vector>

#include "eulersym/error.hpp"
#include "eulersym/form_space.hpp"
#include "eulersym/polynomial.hpp"

namespace eulersym {

struct GroebnerOptions {
  /// Hard ceiling on the degree of S-pair lcms; exceeding it throws DegreeCapExceeded.
  int degree_cap = 30;
};

class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(int degree)
      : Error("Groebner computation exceeded the S-polynomial degree cap (" + std::to_string(degree) + ")") {}
};

/// Reduced, monic Groebner basis, generators sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> generators)
      : ctx_(std::move(ctx)), order_(order), gens_(std::move(generators)) {}

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  Polynomial reduce(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& other) const {
    return same_context(ctx_, other.ctx_) && order_ == other.order_ && gens_ == other.gens_;
  }

 private:
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Scalar leading_coefficient(const Polynomial& p, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Full normal form of P modulo `divisors` (any list, not necessarily a Groebner basis).
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors, const MonomialOrder& order);

/// Buchberger's algorithm with normal pair selection and the coprime and chain criteria.
/// Zero inputs are ignored; an empty input yields the zero ideal.
GroebnerBasis buchberger(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// True iff the ideal generated by S cuts out only the origin of W, i.e. Bs(S) is empty
/// in PW. The zero space gives false. Requires degree >= 1.
bool is_zero_dimensional(const FormSpace& space, const GroebnerOptions& options = {});

/// I : x_i^infinity via an auxiliary variable y and elimination of y from I + <1 - y x_i>.
GroebnerBasis colon_by_variable(const ContextPtr& ctx, std::span<const Polynomial> gens, std::size_t var,
                                const GroebnerOptions& options = {});

/// I intersect J via elimination of t from t I + (1 - t) J.
GroebnerBasis intersect_ideals(const ContextPtr& ctx, std::span<const Polynomial> i_gens,
                               std::span<const Polynomial> j_gens, const GroebnerOptions& options = {});

/// Saturation I : (x_1, ..., x_n)^infinity of a homogeneous ideal, as the intersection of the
/// n colon ideals I : x_i^infinity. Returned as the reduced grevlex basis.
GroebnerBasis saturate_ideal(const ContextPtr& ctx, std::span<const Polynomial> gens,
                             const GroebnerOptions& options = {});

/// Degree-d forms of a homogeneous ideal: span of g*m over generators g and monomials m.
FormSpace graded_component(const GroebnerBasis& basis, int degree);

}  // namespace eulersym
