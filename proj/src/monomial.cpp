#include "eulersym/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "eulersym/error.hpp"

namespace eulersym {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw Error("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t n, std::size_t i, int exponent) {
  std::vector<int> e(n, 0);
  e.at(i) = exponent;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(size() == other.size());
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw Error("monomial division is not exact");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(e));
}

namespace {

// grevlex restricted to the index range [lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0;
  int db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.size() == b.size());
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::elimination: {
      auto head = grevlex_range(a, b, 0, split_);
      if (head != 0) return head;
      return grevlex_range(a, b, split_, a.size());
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || n == 0) return out;
  std::vector<int> e(n, 0);
  // Enumerate compositions of d into n parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::size_t count_monomials(std::size_t n, int d) {
  if (d < 0) return 0;
  // binom(n+d-1, d), small arguments only.
  unsigned long long num = 1;
  for (int i = 1; i <= d; ++i) num = num * (n - 1 + static_cast<std::size_t>(i)) / static_cast<unsigned long long>(i);
  return static_cast<std::size_t>(num);
}

}  // namespace eulersym
