#include <doctest.h>

#include "eulersym/fundamental_forms.hpp"
#include "eulersym/model.hpp"
#include "support.hpp"

using namespace eulersym;
using eulersym::testing::poly;
using eulersym::testing::polys;
using eulersym::testing::span_of;
using eulersym::testing::vec;

namespace {

Parametrization param(std::vector<std::string> vars, std::initializer_list<std::string_view> coords) {
  auto ctx = make_context(std::move(vars));
  return Parametrization{ctx, polys(ctx, coords), 0, std::nullopt};
}

SymbolSystem epr() {
  auto ctx = standard_context(3);
  return certify(ctx, {FormSpace::full(ctx, 0), FormSpace::full(ctx, 1),
                       span_of(ctx, 2, {"x1^2", "x1*x2", "x1*x3"}), span_of(ctx, 3, {"x1^3"})});
}

using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("jet filtration dimensions") {
  auto quad = param({"z1", "z2"}, {"z1", "z2", "z1^2 + z2^2"});
  CHECK(jet_filtration(quad, Vector(quad.context)).dims == Dims{1, 2, 1});

  auto rnc = param({"z"}, {"z", "z^2", "z^3"});
  CHECK(jet_filtration(rnc, Vector(rnc.context)).dims == Dims{1, 1, 1, 1});

  auto plane = param({"z1", "z2"}, {"z1", "z2"});
  auto ff = extract_fundamental_forms(plane, Vector(plane.context));
  CHECK(ff.dimensions() == Dims{1, 2});
  CHECK(ff.rank() == 1);
}

TEST_CASE("fundamental forms of graphs") {
  auto quad = param({"z1", "z2"}, {"z1", "z2", "z1*z2"});
  auto ff = extract_fundamental_forms(quad, Vector(quad.context));
  CHECK(ff.components[2] == span_of(quad.context, 2, {"z1*z2"}));
  CHECK(ff.as_symbol_system().ok());

  auto cubic = param({"z"}, {"z", "z^3"});
  auto special = extract_fundamental_forms(cubic, Vector(cubic.context));
  CHECK(special.components[2].is_zero());
  CHECK(special.components[3] == span_of(cubic.context, 3, {"z^3"}));
  CHECK(special.gaps() == std::vector<int>{2});
  auto validation = special.as_symbol_system();
  REQUIRE_FALSE(validation.ok());
  CHECK(*validation.violations[0].image == poly("z^2", cubic.context));
}

TEST_CASE("the chart change normalizes linear parts") {
  // Linear parts (z1 + z2, z1 - z2) at 0: G^2 is the quadric written in the new chart.
  auto p = param({"z1", "z2"}, {"z1 + z2", "z1 - z2", "z1^2 - z2^2"});
  auto ff = extract_fundamental_forms(p, Vector(p.context));
  CHECK(ff.dimensions() == Dims{1, 2, 1});
  CHECK(ff.components[2] == span_of(p.context, 2, {"z1*z2"}));
}

TEST_CASE("recentering at other base points") {
  auto cubic = param({"z"}, {"z", "z^3"});
  auto ff = extract_fundamental_forms(cubic, Vector(cubic.context, {Scalar(2)}));
  CHECK(ff.dimensions() == Dims{1, 1, 1});
  CHECK(ff.as_symbol_system().ok());
}

TEST_CASE("immersion and truncation failures") {
  auto cusp = param({"z"}, {"z^2", "z^3"});
  CHECK_THROWS_AS(extract_fundamental_forms(cusp, Vector(cusp.context)), ImmersionError);

  auto truncated = param({"z"}, {"z", "z^3"});
  truncated.truncation_degree = 2;
  CHECK_THROWS_AS(extract_fundamental_forms(truncated, Vector(truncated.context)), TruncationError);
}

TEST_CASE("fundamental forms of a model chart reproduce the system") {
  auto c3 = standard_context(3);
  for (const auto& sys : {epr(), from_polynomial(poly("x1*x2*x3", c3)), full_system(2, 3), full_system(1, 3)}) {
    EulerModel m(sys);
    Parametrization chart{sys.context(), m.chart_functions(), 0, std::nullopt};
    auto ff = extract_fundamental_forms(chart, Vector(sys.context()));
    CHECK(ff.components == sys.components());
    CHECK(ff.components == recover_symbols(m).components());
  }
}

TEST_CASE("Cartan check at random points") {
  auto cubic = param({"z"}, {"z", "z^3"});
  auto report = cartan_check(cubic, 5, 0);
  CHECK(report.trials.size() == 5);
  CHECK(report.all_pass());
  CHECK(report.generic_dims() == Dims{1, 1, 1});

  EulerModel m(epr());
  Parametrization chart{m.system().context(), m.chart_functions(), 0, std::nullopt};
  auto model_report = cartan_check(chart, 5, 3);
  CHECK(model_report.all_pass());
  CHECK(model_report.generic_dims() == Dims{1, 3, 3, 1});

  auto plane = param({"z1", "z2"}, {"z1", "z2"});
  auto linear = cartan_check(plane, 3, 1);
  CHECK(linear.all_pass());
  CHECK(linear.generic_dims() == Dims{1, 2});

  // Deterministic under a fixed seed.
  CHECK(cartan_check(cubic, 5, 0).trials[3].point == report.trials[3].point);
}
