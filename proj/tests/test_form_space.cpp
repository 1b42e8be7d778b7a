#include <doctest.h>

#include "eulersym/matrix.hpp"
#include "eulersym/random.hpp"
#include "support.hpp"

using namespace eulersym;
using eulersym::testing::poly;
using eulersym::testing::span_of;

namespace {

// Membership by solving B^T c = p over monomial coordinates, using any spanning set.
bool in_span_oracle(const std::vector<Polynomial>& gens, const Polynomial& p, int degree) {
  const auto target = monomial_coordinates(p, degree);
  Matrix m(target.size(), gens.size() + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto c = monomial_coordinates(gens[j], degree);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  Matrix a = m;
  for (std::size_t i = 0; i < target.size(); ++i) m(i, gens.size()) = target[i];
  return a.rank() == m.rank();
}

FormSpace random_space(RationalSampler& rng, const ContextPtr& ctx, int degree, int gens) {
  std::vector<Polynomial> ps;
  for (int i = 0; i < gens; ++i) ps.push_back(rng.homogeneous(ctx, degree));
  return FormSpace::span(ctx, degree, ps);
}

}  // namespace

TEST_CASE("span reduces to a canonical basis") {
  auto c3 = standard_context(3);
  CHECK(span_of(c3, 2, {"x1^2", "2*x1^2"}).dimension() == 1);
  CHECK(span_of(c3, 2, {"x1^2", "2*x1^2"}).basis()[0] == poly("x1^2", c3));
  CHECK(FormSpace::span(c3, 2, {}).is_zero());
  CHECK(span_of(c3, 2, {"x1^2", "x1*x2", "x1*x3"}).dimension() == 3);
  CHECK(FormSpace::full(c3, 3).dimension() == 10);
  CHECK(FormSpace::full(c3, 3).is_full());
}

TEST_CASE("echelon invariants hold on random spaces") {
  RationalSampler rng(3);
  auto ctx = standard_context(3);
  const auto order = MonomialOrder::grevlex();
  for (int trial = 0; trial < 20; ++trial) {
    FormSpace s = random_space(rng, ctx, 2 + trial % 2, 1 + trial % 5);
    const auto& leads = s.leading_monomials();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      CHECK(s.basis()[i].coefficient(leads[i]) == 1);
      if (i + 1 < s.dimension()) CHECK(order.greater(leads[i], leads[i + 1]));
      for (std::size_t j = 0; j < s.dimension(); ++j)
        if (i != j) CHECK(s.basis()[j].coefficient(leads[i]) == 0);
    }
    CHECK(FormSpace::span(ctx, s.degree(), s.basis()) == s);
  }
}

TEST_CASE("membership") {
  auto c3 = standard_context(3);
  FormSpace f2 = span_of(c3, 2, {"x1^2", "x1*x2", "x1*x3"});
  CHECK(f2.contains(poly("x1*x3", c3)));
  CHECK(f2.contains(poly("3*x1^2 - x1*x3", c3)));
  CHECK_FALSE(span_of(c3, 2, {"x1^2"}).contains(poly("x2^2", c3)));
  CHECK(FormSpace::zero(c3, 2).contains(Polynomial(c3)));
  CHECK(f2.coordinates(poly("3*x1^2 - x1*x3", c3)) == std::vector<Scalar>{3, 0, -1});
  CHECK_THROWS_AS(f2.coordinates(poly("x2^2", c3)), Error);
}

TEST_CASE("membership agrees with a linear-system oracle") {
  RationalSampler rng(5);
  auto ctx = standard_context(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rng.homogeneous(ctx, 2));
    FormSpace s = FormSpace::span(ctx, 2, gens);
    Polynomial inside = rng.next() * gens[0] + rng.next() * gens[2];
    Polynomial probe = rng.homogeneous(ctx, 2);
    CHECK(s.contains(inside));
    CHECK(s.contains(probe) == in_span_oracle(gens, probe, 2));
  }
}

TEST_CASE("sum, intersection and equality") {
  auto c2 = standard_context(2);
  CHECK(sum(span_of(c2, 2, {"x1^2"}), span_of(c2, 2, {"x1*x2"})).dimension() == 2);
  CHECK(intersect(span_of(c2, 2, {"x1^2", "x1*x2"}), span_of(c2, 2, {"x1*x2", "x2^2"})) ==
        span_of(c2, 2, {"x1*x2"}));
  FormSpace s = span_of(c2, 2, {"x1^2 + x2^2", "x1*x2"});
  CHECK(equal(s, s));
  CHECK_FALSE(equal(s, span_of(c2, 2, {"x1^2"})));
}

TEST_CASE("dimension formula for sum and intersection") {
  RationalSampler rng(23);
  auto ctx = standard_context(3);
  for (int trial = 0; trial < 30; ++trial) {
    FormSpace a = random_space(rng, ctx, 2, 1 + trial % 5);
    FormSpace b = random_space(rng, ctx, 2, 1 + (trial * 7) % 5);
    // Force a nontrivial overlap half of the time.
    if (trial % 2 == 0) b = sum(b, span_of(ctx, 2, {}));
    if (trial % 2 == 0 && !a.is_zero()) b = sum(b, FormSpace::span(ctx, 2, std::vector{a.basis()[0]}));
    FormSpace s = sum(a, b), i = intersect(a, b);
    CHECK(s.dimension() + i.dimension() == a.dimension() + b.dimension());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("kernel of linear maps on monomials") {
  auto c2 = standard_context(2);
  LinearImages zero_map;
  for (const auto& m : monomials_of_degree(2, 3)) zero_map[m] = {{0, 0}};
  CHECK(kernel(c2, 3, zero_map).is_full());

  LinearImages injective;
  std::size_t idx = 0;
  const auto monos = monomials_of_degree(2, 2);
  for (const auto& m : monos) {
    std::vector<Scalar> e(monos.size(), 0);
    e[idx++] = 1;
    injective[m] = {e};
  }
  CHECK(kernel(c2, 2, injective).is_zero());

  // Prolongation of <x1^2, x1*x2>: a cubic monomial's derivatives modulo that span.
  FormSpace s = span_of(c2, 2, {"x1^2", "x1*x2"});
  LinearImages prolong_map;
  for (const auto& m : monomials_of_degree(2, 3)) {
    Polynomial mono = Polynomial::term(c2, m);
    for (std::size_t i = 0; i < 2; ++i)
      prolong_map[m].push_back(monomial_coordinates(s.reduce(mono.derivative(i)), 2));
  }
  CHECK(kernel(c2, 3, prolong_map) == span_of(c2, 3, {"x1^3", "x1^2*x2"}));
}

TEST_CASE("vanishing forms through points") {
  auto c2 = standard_context(2);
  std::vector<Vector> points{Vector::basis(c2, 0), Vector::basis(c2, 1)};
  CHECK(vanishing_forms(c2, 2, points) == span_of(c2, 2, {"x1*x2"}));
}

TEST_CASE("degree and context mismatches throw") {
  auto c2 = standard_context(2);
  CHECK_THROWS_AS(span_of(c2, 2, {"x1^3"}), Error);
  CHECK_THROWS(sum(span_of(c2, 2, {"x1^2"}), span_of(c2, 3, {"x1^3"})));
  CHECK_THROWS_AS(sum(span_of(c2, 2, {"x1^2"}), FormSpace::full(standard_context(3), 2)), ContextMismatch);
}
