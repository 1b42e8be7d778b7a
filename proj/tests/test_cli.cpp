#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulersym/cli/commands.hpp"
#include "eulersym/cli/input_files.hpp"
#include "support.hpp"

using namespace eulersym;
using namespace eulersym::cli;
using eulersym::testing::poly;
using eulersym::testing::span_of;

namespace {

const std::string kData = EULERSYM_DATA_DIR;

const char* kEpr = R"(# comment line
vars: x1 x2 x3
rank: 3
F2: x1^2, x1*x2, x1*x3   # trailing comment
F3: x1^3
)";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eulersym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_failure(std::string_view text) {
  try {
    (void)parse_symbol_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("symbol files parse into systems") {
  auto file = parse_symbol_file(kEpr);
  CHECK(file.rank == 3);
  auto result = file.validate();
  REQUIRE(result.ok());
  CHECK(result.system->dimensions() == std::vector<std::size_t>{1, 3, 3, 1});

  auto gap = parse_symbol_file("vars: x\nrank: 3\nF3: x^3\n");
  CHECK(gap.components()[2].is_zero());
  CHECK_FALSE(gap.validate().ok());
}

TEST_CASE("symbol file errors are positioned") {
  auto undeclared = parse_failure("vars: x1 x2\nrank: 2\nF2: x1^2 + y\n");
  CHECK(undeclared.line() == 3);
  CHECK(undeclared.column() == 12);

  auto mismatch = parse_failure("vars: x1 x2\nrank: 2\nF2: x1^2, x1^3\n");
  CHECK(mismatch.line() == 3);
  CHECK(std::string(mismatch.what()).find("degree") != std::string::npos);

  CHECK(parse_failure("vars: x1\nrank: 2\nF1: x1\n").line() == 3);
  CHECK(parse_failure("vars: x1\nrank: 2\nF2: x1^2\nF2: x1^2\n").line() == 4);
  CHECK(parse_failure("vars: x1\nrank: 2\nF3: x1^3\n").line() == 3);
  CHECK(parse_failure("vars: x1\nbogus: 1\n").line() == 2);
  CHECK_THROWS_AS(parse_symbol_file("rank: 2\n"), ParseError);
  CHECK_THROWS_AS(parse_symbol_file("vars: x1 x1\nrank: 1\n"), ParseError);
}

TEST_CASE("formatting round-trips") {
  for (const char* name : {"rnc", "veronese", "quadric", "epr", "triple"}) {
    std::ifstream in(kData + "/" + name + ".sys");
    std::stringstream ss;
    ss << in.rdbuf();
    auto first = parse_symbol_file(ss.str()).validate();
    REQUIRE(first.ok());
    auto second = parse_symbol_file(format_symbol_file(*first.system)).validate();
    REQUIRE(second.ok());
    CHECK(*second.system == *first.system);
  }
}

TEST_CASE("parametrization files") {
  auto p = parse_param_file("vars: z1 z2\ncoords: z1, z2, z1*z2\n");
  CHECK(p.coords.size() == 3);
  CHECK(p.coords[2] == poly("z1*z2", p.context));
  CHECK_FALSE(p.base_point.has_value());

  auto at = parse_param_file("vars: z1 z2\ncoords: z1, z2\nat: 1, 2/3\n");
  REQUIRE(at.base_point.has_value());
  CHECK((*at.base_point)[1] == Scalar(2, 3));

  CHECK_THROWS_AS(parse_param_file("vars: z1\ncoords:\n"), ParseError);
  CHECK_THROWS_AS(parse_param_file("vars: z1 z2\ncoords: z1\nat: 1\n"), ParseError);
}

TEST_CASE("points files") {
  auto ctx = standard_context(2);
  auto pts = parse_points("1, 0\n# second\n0, 1/2\n", ctx);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1][1] == Scalar(1, 2));
  CHECK_THROWS_AS(parse_points("1, 2, 3\n", ctx), ParseError);
}

TEST_CASE("commands and exit codes") {
  auto validate = run_cli({"validate", kData + "/epr.sys"});
  CHECK(validate.code == kSuccess);
  CHECK(validate.out.find("[PASS] symbol-system.closure-axiom") != std::string::npos);
  CHECK(validate.out.find("system.dimensions: [1, 3, 3, 1]") != std::string::npos);

  auto saturated = run_cli({"saturated", kData + "/epr.sys"});
  CHECK(saturated.code == kSuccess);
  CHECK(saturated.out.find("saturation.saturated: FALSE") != std::string::npos);
  CHECK(saturated.out.find("prolong(F^2) strictly contains F^3") != std::string::npos);

  auto acts = run_cli({"act-check", kData + "/epr.sys", "--trials", "100", "--seed", "7"});
  CHECK(acts.code == kSuccess);
  for (auto tag : {"model.group-law", "model.equivariance", "model.euler-compatibility"})
    CHECK(acts.out.find(std::string("[PASS] ") + tag + ": ") != std::string::npos);
  CHECK(acts.out.find("100/100") != std::string::npos);

  CHECK(run_cli({"saturated", kData + "/veronese.sys"}).code == kPropertyFailure);
  CHECK(run_cli({"ff", kData + "/cubiccurve.par"}).code == kPropertyFailure);
  CHECK(run_cli({"cartan", kData + "/cubiccurve.par"}).code == kSuccess);
  CHECK(run_cli({"frobnicate", kData + "/epr.sys"}).code == kUsageError);
  CHECK(run_cli({"validate"}).code == kUsageError);
  CHECK(run_cli({"validate", kData + "/missing.sys"}).code == kUsageError);
  CHECK(run_cli({"validate", kData + "/quadric.par"}).code == kUsageError);
}

TEST_CASE("the saturation cross-check uses supplied points") {
  auto path = std::filesystem::temp_directory_path() / "eulersym_points.txt";
  std::ofstream(path) << "1, 0\n0, 1\n";
  auto r = run_cli({"saturated", kData + "/quadric.sys", "--points", path.string(), "--json"});
  CHECK(r.code == kSuccess);
  auto doc = Json::parse(r.out);
  CHECK(doc["results"]["saturation"]["saturated"] == "TRUE");
  CHECK(doc["results"]["saturation"]["interpolated_quadrics"]["basis"][0] == "x1*x2");
  std::filesystem::remove(path);
}

TEST_CASE("structured reports are deterministic and tagged") {
  auto a = run_cli({"report", kData + "/triple.sys", "--seed", "5", "--json"});
  auto b = run_cli({"report", kData + "/triple.sys", "--seed", "5", "--json"});
  REQUIRE(a.code == kSuccess);
  CHECK(a.out == b.out);
  auto doc = Json::parse(a.out);
  CHECK(doc["command"] == "report");
  CHECK(doc["seed"] == 5);
  CHECK(doc["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  for (const auto& check : doc["checks"]) {
    CHECK_FALSE(check["property"].get<std::string>().empty());
    CHECK(check["status"] == "PASS");
  }
  for (auto section : {"prolongations", "order", "base_locus", "saturation", "model", "actions", "orbit_curves",
                       "implicitization", "round_trip"})
    CHECK(doc["results"].contains(section));

  auto c = run_cli({"report", kData + "/triple.sys", "--seed", "6", "--json"});
  CHECK(c.out != a.out);
}

TEST_CASE("input digest") {
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
}
