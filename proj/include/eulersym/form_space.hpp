#pragma once

#include <map>
#include <span>
#include <vector>

#include "eulersym/polynomial.hpp"

namespace eulersym {

/// A linear subspace of the degree-k forms Sym^k W*, stored as a reduced row-echelon
/// basis over the grevlex-descending monomial basis: leading monomials strictly
/// decrease, each leading coefficient is 1 and no leading monomial appears in another
/// row. Two spaces are equal iff their stored bases are identical.
class FormSpace {
 public:
  static FormSpace zero(ContextPtr ctx, int degree);
  static FormSpace full(ContextPtr ctx, int degree);

  /// Span of homogeneous degree-k polynomials (zero polynomials allowed).
  /// Throws Error on mixed degrees or contexts.
  static FormSpace span(ContextPtr ctx, int degree, std::span<const Polynomial> polys);

  const ContextPtr& context() const { return ctx_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const;
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  /// Remainder of P after eliminating every leading monomial; zero iff P is in the span.
  Polynomial reduce(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool contains(const FormSpace& other) const;

  /// Coordinates of P against basis(); throws Error when P is not in the space.
  std::vector<Scalar> coordinates(const Polynomial& p) const;

  bool operator==(const FormSpace& other) const;

  std::string to_string() const;

 private:
  FormSpace(ContextPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}
  void check_compatible(const Polynomial& p) const;

  ContextPtr ctx_;
  int degree_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
};

FormSpace sum(const FormSpace& a, const FormSpace& b);
FormSpace intersect(const FormSpace& a, const FormSpace& b);
bool equal(const FormSpace& a, const FormSpace& b);

/// A linear map out of Sym^d W*, described by the image of every degree-d monomial as a
/// list of coordinate vectors. All lists must have the same shape.
using LinearImages = std::map<Monomial, std::vector<std::vector<Scalar>>>;

/// Degree-d forms killed by the map described by `images`.
FormSpace kernel(const ContextPtr& ctx, int degree, const LinearImages& images);

/// Degree-d forms vanishing at every given point.
FormSpace vanishing_forms(const ContextPtr& ctx, int degree, std::span<const Vector> points);

/// Coefficient vector of P over monomials_of_degree(n, degree).
std::vector<Scalar> monomial_coordinates(const Polynomial& p, int degree);

}  // namespace eulersym
