#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulersym/context.hpp"
#include "eulersym/monomial.hpp"
#include "eulersym/scalar.hpp"

namespace eulersym {

/// A point of W: rational coordinates against the context's basis.
class Vector {
 public:
  explicit Vector(ContextPtr ctx);  // zero vector
  Vector(ContextPtr ctx, std::vector<Scalar> coords);

  static Vector basis(ContextPtr ctx, std::size_t i);

  const ContextPtr& context() const { return ctx_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator*(const Scalar& c) const;
  friend Vector operator*(const Scalar& c, const Vector& v) { return v * c; }
  bool operator==(const Vector& other) const;

 private:
  ContextPtr ctx_;
  std::vector<Scalar> coords_;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero coefficients
/// are never stored, so structural equality is mathematical equality. A homogeneous
/// polynomial of degree k stands for the symmetric k-form phi with phi(w,...,w) = P(w).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit Polynomial(ContextPtr ctx);
  Polynomial(ContextPtr ctx, TermMap terms);

  static Polynomial constant(ContextPtr ctx, const Scalar& c);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Scalar& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  /// Common degree of all terms; nullopt for the zero polynomial and for mixed degrees.
  std::optional<int> homogeneous_degree() const;
  /// True for the zero polynomial and for polynomials whose terms share one degree.
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int d) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Scalar& c) const;
  friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }
  Polynomial pow(int e) const;
  bool operator==(const Polynomial& other) const;

  Polynomial derivative(std::size_t i) const;

  /// Composition P(images[0], ..., images[n-1]); the images share a (possibly different) context.
  Polynomial substitute(std::span<const Polynomial> images, const ContextPtr& target) const;

  /// Re-expresses the polynomial in `target`, sending variable i to variable var_map[i].
  Polynomial embed(const ContextPtr& target, std::span<const std::size_t> var_map) const;

  std::string to_string() const;

 private:
  void prune();

  ContextPtr ctx_;
  TermMap terms_;
};

/// Exact value P(w).
Scalar evaluate(const Polynomial& p, const Vector& w);

/// D_v P = sum_i v_i dP/dx_i.
Polynomial directional_derivative(const Polynomial& p, const Vector& v);

/// j-fold contraction iota_v^j P of a homogeneous P of degree k, with the normalization
/// iota_v P = (1/k) D_v P, so that iota_w^k P = P(w). Contraction of a constant (and any
/// j > k) gives 0. Throws Error on non-homogeneous input.
Polynomial contract(const Polynomial& p, const Vector& v, int j = 1);

/// Symmetric multilinear value phi(w_1, ..., w_k) of a homogeneous P of degree k.
/// Throws Error unless exactly k vectors are given.
Scalar polarize(const Polynomial& p, std::span<const Vector> ws);

/// x -> P(x + a).
Polynomial translate(const Polynomial& p, const Vector& a);

/// Parses `[coeff*]var[^exp][*var[^exp]]...` terms joined by + and -. Integer or a/b
/// coefficients; a bare number is a constant term. Columns in ParseError are 1-based.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

}  // namespace eulersym
