#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulersym/form_space.hpp"
#include "eulersym/groebner.hpp"

namespace eulersym {

/// One reason a graded candidate fails to be a symbol system.
struct Violation {
  enum class Kind { structure, closure };

  Kind kind = Kind::structure;
  int degree = 0;
  /// closure only: basis direction e_i, offending basis form phi of F^k and iota_{e_i} phi.
  std::optional<std::size_t> direction;
  std::optional<Polynomial> form;
  std::optional<Polynomial> image;
  std::string message;
};

struct ValidationResult;

/// Graded subspaces F^0, ..., F^r of Sym^k W* with F^0 = constants, F^1 = W*, F^r != 0,
/// closed under every contraction iota_w. Components above the rank are zero.
/// Instances only come out of validate(), so every value satisfies the axioms.
class SymbolSystem {
 public:
  /// Checks structure and the closure axiom iota_{e_i} F^k in F^{k-1} for all basis
  /// vectors e_i (enough by linearity in w). components[k] must have degree k.
  static ValidationResult validate(const ContextPtr& ctx, std::vector<FormSpace> components);

  const ContextPtr& context() const { return ctx_; }
  std::size_t dimension() const { return ctx_->size(); }
  int rank() const { return static_cast<int>(components_.size()) - 1; }
  /// F^k; the zero space of degree k for k > rank.
  FormSpace component(int k) const;
  const std::vector<FormSpace>& components() const { return components_; }
  std::vector<std::size_t> dimensions() const;

  bool operator==(const SymbolSystem& other) const { return components_ == other.components_; }

 private:
  SymbolSystem(ContextPtr ctx, std::vector<FormSpace> components)
      : ctx_(std::move(ctx)), components_(std::move(components)) {}

  ContextPtr ctx_;
  std::vector<FormSpace> components_;
};

struct ValidationResult {
  std::optional<SymbolSystem> system;
  std::vector<Violation> violations;
  bool ok() const { return system.has_value(); }
};

/// validate() that throws Error listing the violations.
SymbolSystem certify(const ContextPtr& ctx, std::vector<FormSpace> components);

std::string describe(const Violation& v);

/// prolong(S) = { phi of degree k+1 : iota_{e_i} phi in S for all i }. Requires degree >= 1.
FormSpace prolong(const FormSpace& space);

/// F_P: F^r = <P>, F^{r-j} spanned by all j-fold basis contractions of P.
SymbolSystem from_polynomial(const Polynomial& p);

/// F^k = Sym^k W* for 0 <= k <= r.
SymbolSystem full_system(const ContextPtr& ctx, int rank);
SymbolSystem full_system(std::size_t n, int rank);

/// Largest m with Bs(F^m) empty in PW. 1 <= order <= rank.
int order(const SymbolSystem& system, const GroebnerOptions& options = {});

/// F^{m+1} for m = order: the forms cutting out the base locus Bs(F). Zero space when m = r.
FormSpace base_locus_forms(const SymbolSystem& system, const GroebnerOptions& options = {});

/// A prolongation step k with F^{k+1} != prolong(F^k).
struct ProlongationGap {
  int degree = 0;
  FormSpace prolongation;
  FormSpace next;
};

struct SaturationReport {
  bool saturated = false;
  /// Degree-2 part of the saturated ideal of Bs(F) equals F^2.
  bool quadric_clause = false;
  /// F^{k+1} = prolong(F^k) for every 2 <= k <= r (with F^{r+1} = 0).
  bool prolongation_clause = false;
  GroebnerBasis saturated_ideal;
  FormSpace quadrics;
  std::vector<ProlongationGap> gaps;
  /// Set when base-locus points were supplied: degree-2 forms vanishing at them.
  std::optional<FormSpace> interpolated_quadrics;
  std::vector<std::string> diagnostics;
};

/// Saturation test for an order-1 system. The quadric clause uses the scheme-theoretic
/// saturation of <F^2>; optional rational points on Bs(F) give an interpolation cross-check.
/// Throws Error when the order is not 1 or a supplied point is off the base locus.
SaturationReport is_saturated(const SymbolSystem& system, std::span<const Vector> base_points = {},
                              const GroebnerOptions& options = {});

}  // namespace eulersym
