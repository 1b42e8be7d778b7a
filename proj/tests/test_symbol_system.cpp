#include <doctest.h>

#include <algorithm>
#include <set>

#include "eulersym/random.hpp"
#include "eulersym/symbol_system.hpp"
#include "support.hpp"

using namespace eulersym;
using eulersym::testing::poly;
using eulersym::testing::span_of;

namespace {

SymbolSystem epr() {
  auto ctx = standard_context(3);
  return certify(ctx, {FormSpace::full(ctx, 0), FormSpace::full(ctx, 1),
                       span_of(ctx, 2, {"x1^2", "x1*x2", "x1*x3"}), span_of(ctx, 3, {"x1^3"})});
}

// For a space spanned by monomials, a monomial m lies in the prolongation iff every m / x_i
// (over the variables dividing m) lies in the space; prolongations of monomial spaces are
// spanned by monomials because the defining conditions separate by monomial.
std::set<Monomial> monomial_prolongation(const std::set<Monomial>& space, std::size_t n, int degree) {
  std::set<Monomial> out;
  for (const auto& m : monomials_of_degree(n, degree + 1)) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) ok = ok && space.count(m / Monomial::variable(n, i));
    if (ok) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("validation accepts genuine systems") {
  CHECK(epr().dimensions() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(full_system(2, 3).dimensions() == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(full_system(2, 2).dimensions() == std::vector<std::size_t>{1, 2, 3});
  for (std::size_t n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) CHECK(full_system(n, r).rank() == r);
}

TEST_CASE("validation pinpoints closure failures") {
  auto c2 = standard_context(2);
  auto result = SymbolSystem::validate(c2, {FormSpace::full(c2, 0), FormSpace::full(c2, 1), span_of(c2, 2, {"x2^2"}),
                                            span_of(c2, 3, {"x1^3"})});
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.violations.size() == 1);
  const auto& v = result.violations[0];
  CHECK(v.kind == Violation::Kind::closure);
  CHECK(v.degree == 3);
  CHECK(v.direction == 0u);
  CHECK(*v.image == poly("x1^2", c2));
  CHECK(describe(v).find("x1^2") != std::string::npos);
}

TEST_CASE("validation rejects malformed components") {
  auto c2 = standard_context(2);
  CHECK_FALSE(SymbolSystem::validate(c2, {FormSpace::full(c2, 0), span_of(c2, 1, {"x1"})}).ok());
  CHECK_FALSE(SymbolSystem::validate(c2, {FormSpace::full(c2, 0), FormSpace::full(c2, 1), FormSpace::zero(c2, 2)}).ok());
  CHECK_FALSE(SymbolSystem::validate(c2, {FormSpace::full(c2, 0), FormSpace::full(c2, 2)}).ok());
  CHECK_THROWS_AS(certify(c2, {FormSpace::full(c2, 0)}), Error);
  // A vanishing top component is not a rank-3 system.
  auto gap = SymbolSystem::validate(
      c2, {FormSpace::full(c2, 0), FormSpace::full(c2, 1), FormSpace::zero(c2, 2), FormSpace::zero(c2, 3)});
  CHECK_FALSE(gap.ok());
}

TEST_CASE("prolongation examples") {
  auto c2 = standard_context(2);
  CHECK(prolong(span_of(c2, 2, {"x1^2", "x1*x2"})) == span_of(c2, 3, {"x1^3", "x1^2*x2"}));
  CHECK(prolong(span_of(c2, 2, {"x1*x2"})).is_zero());
  CHECK(prolong(FormSpace::full(c2, 1)) == FormSpace::full(c2, 2));

  FormSpace pro = prolong(epr().component(2));
  for (auto text : {"x1^3", "x1^2*x2", "x1^2*x3"}) CHECK(pro.contains(poly(text, epr().context())));
  CHECK(pro == span_of(epr().context(), 3, {"x1^3", "x1^2*x2", "x1^2*x3"}));
}

TEST_CASE("prolongation of monomial spaces matches the divisibility oracle") {
  RationalSampler rng(59);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto ctx = standard_context(n);
    for (int trial = 0; trial < 15; ++trial) {
      const int degree = 1 + trial % 3;
      std::set<Monomial> chosen;
      std::vector<Polynomial> gens;
      for (const auto& m : monomials_of_degree(n, degree))
        if (rng.next_int(0, 2) > 0) {
          chosen.insert(m);
          gens.push_back(Polynomial::term(ctx, m));
        }
      std::vector<Polynomial> expected;
      for (const auto& m : monomial_prolongation(chosen, n, degree)) expected.push_back(Polynomial::term(ctx, m));
      CHECK(prolong(FormSpace::span(ctx, degree, gens)) == FormSpace::span(ctx, degree + 1, expected));
    }
  }
}

TEST_CASE("prolongation is sound and monotone on random spaces") {
  RationalSampler rng(61);
  auto ctx = standard_context(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(rng.homogeneous(ctx, 2));
    FormSpace small = FormSpace::span(ctx, 2, std::span(gens).first(2));
    FormSpace big = FormSpace::span(ctx, 2, gens);
    FormSpace pro_small = prolong(small), pro_big = prolong(big);
    CHECK(pro_big.contains(pro_small));
    for (const auto& phi : pro_big.basis())
      for (std::size_t i = 0; i < 3; ++i) CHECK(big.contains(contract(phi, Vector::basis(ctx, i))));
  }
}

TEST_CASE("systems generated by one polynomial") {
  auto c3 = standard_context(3);
  auto triple = from_polynomial(poly("x1*x2*x3", c3));
  CHECK(triple.component(2) == span_of(c3, 2, {"x2*x3", "x1*x3", "x1*x2"}));
  CHECK(triple.component(3) == span_of(c3, 3, {"x1*x2*x3"}));

  auto c1 = make_context({"x"});
  auto rnc = from_polynomial(poly("x^4", c1));
  CHECK(rnc == full_system(c1, 4));

  auto quadric = from_polynomial(poly("x1^2 + x2^2 - x3^2", c3));
  CHECK(quadric.rank() == 2);
  CHECK(quadric.component(2) == span_of(c3, 2, {"x1^2 + x2^2 - x3^2"}));

  RationalSampler rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    auto sys = from_polynomial(rng.homogeneous(c3, 2 + trial % 3));
    CHECK(SymbolSystem::validate(c3, sys.components()).ok());
    for (int k = 1; k <= sys.rank(); ++k) CHECK(prolong(sys.component(k)).contains(sys.component(k + 1)));
  }
}

TEST_CASE("order") {
  CHECK(order(epr()) == 1);
  CHECK(order(full_system(2, 3)) == 3);
  CHECK(order(full_system(1, 4)) == 4);
  auto c3 = standard_context(3);
  CHECK(order(from_polynomial(poly("x1*x2*x3", c3))) == 1);
  CHECK(base_locus_forms(epr()) == epr().component(2));

  RationalSampler rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    auto sys = from_polynomial(rng.homogeneous(c3, 2 + trial % 3));
    const int m = order(sys);
    CHECK(m >= 1);
    CHECK(m <= sys.rank());
  }
}

TEST_CASE("saturation of symbol systems") {
  auto report = is_saturated(epr());
  CHECK_FALSE(report.saturated);
  CHECK(report.quadric_clause);
  CHECK_FALSE(report.prolongation_clause);
  REQUIRE_FALSE(report.gaps.empty());
  CHECK(report.gaps[0].degree == 2);
  CHECK(report.gaps[0].prolongation.contains(poly("x1^2*x2", epr().context())));
  CHECK(report.diagnostics[0].find("strictly contains") != std::string::npos);

  auto c2 = standard_context(2);
  auto quadric = certify(c2, {FormSpace::full(c2, 0), FormSpace::full(c2, 1), span_of(c2, 2, {"x1*x2"})});
  auto q = is_saturated(quadric);
  CHECK(q.saturated);
  CHECK(q.quadrics == span_of(c2, 2, {"x1*x2"}));

  std::vector<Vector> points{Vector::basis(c2, 0), Vector::basis(c2, 1)};
  auto with_points = is_saturated(quadric, points);
  REQUIRE(with_points.interpolated_quadrics.has_value());
  CHECK(*with_points.interpolated_quadrics == q.quadrics);

  CHECK_THROWS_AS(is_saturated(full_system(2, 2)), Error);
}
