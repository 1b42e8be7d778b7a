#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace eulersym {

/// Exponent vector x1^a1 ... xn^an. The built-in comparison is plain lexicographic on
/// exponents and is only used for container keys; use MonomialOrder for algebra.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, int exponent = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Strict total orders compatible with multiplication.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Variables [0, split) form a block that is eliminated: compared by grevlex on that
  /// block first, ties broken by grevlex on the remaining variables.
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::elimination, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

/// All degree-d monomials in n variables, sorted descending in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

/// Number of degree-d monomials in n variables, binom(n+d-1, d).
std::size_t count_monomials(std::size_t n, int d);

}  // namespace eulersym
