#include "eulersym/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "eulersym/cli/input_files.hpp"
#include "eulersym/model.hpp"

namespace eulersym::cli {

namespace {

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

Json components_json(const std::vector<FormSpace>& comps) {
  Json out = Json::array();
  for (const auto& c : comps) out.push_back(to_json(c));
  return out;
}

std::optional<SymbolSystem> load_system(Report& report, const Request& req) {
  auto file = parse_symbol_file(req.input_text);
  auto result = file.validate();
  Json& section = report.results()["system"];
  section["variables"] = file.context->names();
  section["rank"] = file.rank;
  section["valid"] = result.ok();
  if (result.ok()) {
    section["dimensions"] = to_json(result.system->dimensions());
    section["components"] = components_json(result.system->components());
  }
  std::string detail = result.ok() ? "iota_{e_i} F^k lies in F^{k-1} for all i, k" : "";
  for (const auto& v : result.violations) report.add_diagnostic(describe(v));
  report.add_check("symbol-system.closure-axiom", result.ok(),
                   result.ok() ? detail : std::to_string(result.violations.size()) + " violation(s)");
  return std::move(result.system);
}

void section_prolong(Report& report, const SymbolSystem& sys) {
  Json rows = Json::array();
  bool all_contained = true;
  for (int k = 1; k <= sys.rank(); ++k) {
    FormSpace pro = prolong(sys.component(k));
    FormSpace next = sys.component(k + 1);
    bool contained = pro.contains(next);
    all_contained = all_contained && contained;
    rows.push_back({{"k", k},
                    {"prolong_dimension", pro.dimension()},
                    {"prolong_basis", strings(pro.basis())},
                    {"next_dimension", next.dimension()},
                    {"contains_next", contained},
                    {"equals_next", pro == next}});
  }
  report.results()["prolongations"] = std::move(rows);
  report.add_check("prolongation.contains-next-component", all_contained, "F^{k+1} within prolong(F^k) for 1 <= k <= r");
}

int section_order(Report& report, const SymbolSystem& sys) {
  Json empty_loci = Json::array();
  int m = order(sys);
  for (int k = 1; k <= std::min(m + 1, sys.rank()); ++k)
    empty_loci.push_back({{"k", k}, {"base_locus_empty", is_zero_dimensional(sys.component(k))}});
  Json& out = report.results()["order"];
  out["order"] = m;
  out["rank"] = sys.rank();
  out["order_equals_rank"] = m == sys.rank();
  out["scan"] = std::move(empty_loci);
  report.add_check("base-locus.order-bounds", 1 <= m && m <= sys.rank(), "1 <= order <= rank");
  return m;
}

void section_baselocus(Report& report, const SymbolSystem& sys) {
  const int m = order(sys);
  FormSpace forms = sys.component(m + 1);
  Json& out = report.results()["base_locus"];
  out["order"] = m;
  out["defining_component"] = m + 1;
  out["forms"] = strings(forms.basis());
  if (forms.is_zero()) {
    out["locus"] = "all of PW";
    return;
  }
  auto sat = saturate_ideal(sys.context(), forms.basis());
  out["saturated_ideal"] = strings(sat.generators());
  out["saturated_quadrics"] = to_json(graded_component(sat, 2));
}

void section_saturated(Report& report, const SymbolSystem& sys, const Request& req) {
  std::vector<Vector> points;
  if (req.points_text) points = parse_points(*req.points_text, sys.context());
  Json& out = report.results()["saturation"];
  SaturationReport sat = [&] {
    try {
      return is_saturated(sys, points);
    } catch (const Error& e) {
      out["defined"] = false;
      throw;
    }
  }();
  out["defined"] = true;
  out["saturated"] = sat.saturated ? "TRUE" : "FALSE";
  out["quadric_clause"] = sat.quadric_clause;
  out["prolongation_clause"] = sat.prolongation_clause;
  out["saturated_ideal"] = strings(sat.saturated_ideal.generators());
  out["ideal_quadrics"] = to_json(sat.quadrics);
  out["interpretation"] = "scheme-theoretic saturation of <F^2>";
  Json gaps = Json::array();
  for (const auto& g : sat.gaps)
    gaps.push_back({{"k", g.degree},
                    {"prolong_dimension", g.prolongation.dimension()},
                    {"next_dimension", g.next.dimension()},
                    {"prolong_basis", strings(g.prolongation.basis())}});
  out["prolongation_gaps"] = std::move(gaps);
  if (sat.interpolated_quadrics) {
    out["interpolated_quadrics"] = to_json(*sat.interpolated_quadrics);
    report.add_check("saturation.interpolation-agrees", *sat.interpolated_quadrics == sat.quadrics,
                     "quadrics through supplied base-locus points vs saturated ideal");
  }
  for (const auto& d : sat.diagnostics) report.add_diagnostic(d);
}

void section_model(Report& report, const EulerModel& model) {
  Json& out = report.results()["model"];
  out["ambient_dimension"] = model.ambient_dimension();
  Json blocks = Json::array();
  for (int k = 0; k <= model.rank(); ++k)
    blocks.push_back({{"k", k},
                      {"offset", model.block_offset(k)},
                      {"size", model.block_size(k)},
                      {"basis", strings(model.system().component(k).basis())}});
  out["blocks"] = std::move(blocks);
  Json origin = Json::array();
  const ProjectivePoint o = model.phi(1, Vector(model.system().context()));
  for (const auto& c : o.coords()) origin.push_back(to_string(c));
  out["base_point"] = std::move(origin);
}

void section_act_check(Report& report, const EulerModel& model, int trials, std::uint64_t seed) {
  RationalSampler sampler(seed);
  const auto& ctx = model.system().context();
  int group_law = 0, identity = 0, equivariance = 0, euler = 0, commute = 0;
  for (int i = 0; i < trials; ++i) {
    Vector u = sampler.vector(ctx);
    Vector v = sampler.vector(ctx);
    Vector w = sampler.vector(ctx);
    Scalar t = sampler.next_nonzero();
    Scalar lambda = sampler.next_nonzero();
    ProjectivePoint z(sampler.nonzero_vector(model.ambient_context()).coords());
    ProjectivePoint image = model.phi(t, w);

    if (model.act(u + v, z) == model.act(u, model.act(v, z))) ++group_law;
    if (model.act(Vector(ctx), z) == z) ++identity;
    if (model.act(v, image) == model.phi(t, w + t * v)) ++equivariance;
    if (model.euler(lambda, image) == model.phi(t, lambda * w)) ++euler;
    if (model.act(lambda * v, model.euler(lambda, image)) == model.euler(lambda, model.act(v, image))) ++commute;
  }
  auto tally = [&](int passes) { return std::to_string(passes) + "/" + std::to_string(trials); };
  Json& out = report.results()["actions"];
  out["trials"] = trials;
  out["group_law"] = tally(group_law);
  out["identity"] = tally(identity);
  out["equivariance"] = tally(equivariance);
  out["euler_compatibility"] = tally(euler);
  out["actions_commute"] = tally(commute);
  report.add_check("model.group-law", group_law == trials, "g_{u+v} z = g_u (g_v z) on arbitrary z: " + tally(group_law));
  report.add_check("model.identity", identity == trials, "g_0 z = z: " + tally(identity));
  report.add_check("model.equivariance", equivariance == trials,
                   "g_v phi([t:w]) = phi([t:w+tv]): " + tally(equivariance));
  report.add_check("model.euler-compatibility", euler == trials, "lambda phi([t:w]) = phi([t:lambda w]): " + tally(euler));
  report.add_check("model.actions-commute", commute == trials,
                   "g_{lambda v} lambda = lambda g_v on image points: " + tally(commute));
}

void section_curve_degrees(Report& report, const EulerModel& model, int trials, std::uint64_t seed) {
  RationalSampler sampler(seed);
  const auto& ctx = model.system().context();
  const int m = order(model.system());
  const int r = model.rank();
  std::map<int, int> generic_hist;
  std::map<int, int> sparse_hist;
  for (int i = 0; i < trials; ++i) ++generic_hist[model.orbit_curve_degree(sampler.generic_vector(ctx))];
  for (int i = 0; i < trials; ++i) ++sparse_hist[model.orbit_curve_degree(sampler.sparse_vector(ctx))];
  auto hist_json = [](const std::map<int, int>& h) {
    Json out = Json::object();
    for (auto [d, c] : h) out[std::to_string(d)] = c;
    return out;
  };
  const int generic_max = generic_hist.rbegin()->first;
  const int overall_min = std::min(generic_hist.begin()->first, sparse_hist.begin()->first);
  Json& out = report.results()["orbit_curves"];
  out["order"] = m;
  out["rank"] = r;
  out["generic_degrees"] = hist_json(generic_hist);
  out["sparse_degrees"] = hist_json(sparse_hist);
  out["max_degree"] = generic_max;
  out["min_degree"] = overall_min;
  report.add_check("orbit-curves.max-equals-rank", generic_max == r,
                   "max over generic directions " + std::to_string(generic_max) + ", rank " + std::to_string(r));
  report.add_check("orbit-curves.min-equals-order", overall_min == m,
                   "min over sampled directions " + std::to_string(overall_min) + ", order " + std::to_string(m));
}

void section_implicitize(Report& report, const EulerModel& model, int degree, std::size_t samples,
                         std::uint64_t seed) {
  Json& out = report.results()["implicitization"][std::to_string(degree)];
  ImplicitizationOptions options;
  options.degree = degree;
  options.samples = samples;
  options.seed = seed;
  try {
    FormSpace forms = implicitize(model, options);
    out["dimension"] = forms.dimension();
    out["equations"] = strings(forms.basis());
    report.add_check("implicitization.verified", true,
                     "degree " + std::to_string(degree) + ": " + std::to_string(forms.dimension()) +
                         " equation(s) vanish at fresh image points");
    if (degree == 1)
      report.add_check("model.nondegenerate", forms.is_zero(), "no linear equations on the image");
  } catch (const Error& e) {
    out["error"] = e.what();
    report.add_check("implicitization.verified", false, e.what());
  }
}

void section_round_trip(Report& report, const EulerModel& model) {
  const auto& sys = model.system();
  bool recovered = recover_symbols(model) == sys;
  Parametrization chart{sys.context(), model.chart_functions(), 0, std::nullopt};
  FFSystem ff = extract_fundamental_forms(chart, Vector(sys.context()));
  bool ff_match = ff.components == sys.components();
  Json& out = report.results()["round_trip"];
  out["recovered_symbols_match"] = recovered;
  out["fundamental_forms_at_base_point"] = to_json(ff.dimensions());
  out["fundamental_forms_match"] = ff_match;
  report.add_check("round-trip.recover-symbols", recovered, "symbols re-read from the t = 1 chart");
  report.add_check("round-trip.fundamental-forms", ff_match, "jet filtration of M(F) at o reproduces F");
}

Json ff_json(const FFSystem& ff) {
  Json out;
  out["dimensions"] = to_json(ff.dimensions());
  out["rank"] = ff.rank();
  out["components"] = components_json(ff.components);
  Json gaps = Json::array();
  for (int g : ff.gaps()) gaps.push_back(g);
  out["gaps"] = std::move(gaps);
  Json chart = Json::array();
  for (std::size_t r = 0; r < ff.chart.rows(); ++r) {
    Json row = Json::array();
    for (const auto& c : ff.chart.row(r)) row.push_back(to_string(c));
    chart.push_back(std::move(row));
  }
  out["chart_matrix"] = std::move(chart);
  return out;
}

Outcome run_ff(const Request& req) {
  Report report("ff", req.input_text, req.seed);
  Parametrization param = parse_param_file(req.input_text);
  Vector base = param.base_point.value_or(Vector(param.context));
  report.results()["base_point"] = vector_json(base);
  try {
    FFSystem ff = extract_fundamental_forms(param, base);
    report.results()["fundamental_forms"] = ff_json(ff);
    auto validation = ff.as_symbol_system();
    report.results()["is_symbol_system"] = validation.ok();
    for (const auto& v : validation.violations) report.add_diagnostic(describe(v));
    if (!ff.gaps().empty()) report.add_diagnostic("gaps in the fundamental forms: the base point is not general");
    report.add_check("fundamental-forms.immersion", true);
    report.add_check("fundamental-forms.closure-axiom", validation.ok(),
                     validation.ok() ? "the extracted forms form a symbol system"
                                     : "closure fails at this base point; try a general point");
  } catch (const ImmersionError& e) {
    report.add_check("fundamental-forms.immersion", false, e.what());
    return {std::move(report), kPropertyFailure};
  } catch (const TruncationError& e) {
    report.add_check("fundamental-forms.truncation", false, e.what());
    return {std::move(report), kPropertyFailure};
  }
  const int code = report.all_checks_passed() ? kSuccess : kPropertyFailure;
  return {std::move(report), code};
}

Outcome run_cartan(const Request& req) {
  Report report("cartan", req.input_text, req.seed);
  Parametrization param = parse_param_file(req.input_text);
  const int trials = req.trials.value_or(5);
  CartanReport cartan = cartan_check(param, trials, req.seed);
  Json rows = Json::array();
  int passes = 0;
  for (const auto& t : cartan.trials) {
    bool ok = t.extracted && t.closure_holds;
    passes += ok ? 1 : 0;
    rows.push_back({{"point", vector_json(t.point)},
                    {"extracted", t.extracted},
                    {"closure_holds", t.closure_holds},
                    {"dimensions", to_json(t.dims)},
                    {"diagnostics", t.diagnostics}});
  }
  report.results()["trials"] = std::move(rows);
  report.results()["generic_dimensions"] = to_json(cartan.generic_dims());
  report.add_check("cartan.closure-at-random-points", cartan.all_pass(),
                   std::to_string(passes) + "/" + std::to_string(trials) + " base points give a symbol system");
  return {std::move(report), cartan.all_pass() ? kSuccess : kPropertyFailure};
}

Outcome run_symbol_command(const Request& req) {
  Report report(req.command, req.input_text, req.seed);
  auto sys = load_system(report, req);
  if (!sys) return {std::move(report), kPropertyFailure};

  const std::string& cmd = req.command;
  try {
    if (cmd == "validate") {
      // nothing beyond the system section
    } else if (cmd == "prolong") {
      section_prolong(report, *sys);
    } else if (cmd == "order") {
      section_order(report, *sys);
    } else if (cmd == "baselocus") {
      section_baselocus(report, *sys);
    } else if (cmd == "saturated") {
      section_saturated(report, *sys, req);
    } else if (cmd == "model") {
      section_model(report, build_model(*sys));
    } else if (cmd == "act-check") {
      section_act_check(report, build_model(*sys), req.trials.value_or(100), req.seed);
    } else if (cmd == "curve-degrees") {
      section_curve_degrees(report, build_model(*sys), req.trials.value_or(50), req.seed);
    } else if (cmd == "implicitize") {
      section_implicitize(report, build_model(*sys), req.degree, req.samples, req.seed);
    } else if (cmd == "report") {
      EulerModel model = build_model(*sys);
      section_prolong(report, *sys);
      int m = section_order(report, *sys);
      section_baselocus(report, *sys);
      if (m == 1) section_saturated(report, *sys, req);
      else report.results()["saturation"] = {{"defined", false}, {"reason", "order is not 1"}};
      section_model(report, model);
      section_act_check(report, model, req.trials.value_or(100), req.seed);
      section_curve_degrees(report, model, req.trials.value_or(50), req.seed);
      section_implicitize(report, model, 1, 0, req.seed);
      section_implicitize(report, model, req.degree, req.samples, req.seed);
      section_round_trip(report, model);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    report.add_diagnostic(e.what());
    report.add_check("command." + cmd, false, e.what());
    return {std::move(report), kPropertyFailure};
  }
  const int code = report.all_checks_passed() ? kSuccess : kPropertyFailure;
  return {std::move(report), code};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "prolong",   "order",         "baselocus",
                                              "saturated", "model",    "act-check",     "curve-degrees",
                                              "implicitize", "ff",     "cartan",        "report"};
  return names;
}

Outcome execute(const Request& request) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), request.command) == names.end())
    throw Error("unknown command '" + request.command + "'");
  if (request.command == "ff") return run_ff(request);
  if (request.command == "cartan") return run_cartan(request);
  return run_symbol_command(request);
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbol systems and their Euler-symmetric models"};
  std::string command;
  std::string path;
  std::string points_path;
  bool json = false;
  Request req;
  int trials = 0;
  app.add_option("command", command, "validate | prolong | order | baselocus | saturated | model | act-check | "
                                     "curve-degrees | implicitize | ff | cartan | report")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("file", path, "symbol-system file (.sys) or parametrization file (.par)")->required();
  app.add_option("--seed", req.seed, "random seed")->default_val(0);
  auto* trials_opt = app.add_option("--trials", trials, "number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--degree", req.degree, "implicitization degree")->default_val(2)->check(CLI::PositiveNumber);
  app.add_option("--samples", req.samples, "implicitization sample count (0 = automatic)")->default_val(0);
  app.add_option("--points", points_path, "base-locus points for the saturation cross-check");
  app.add_flag("--json", json, "emit the structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  req.command = command;
  if (*trials_opt) req.trials = trials;
  auto text = read_file(path);
  if (!text) {
    err << "error: cannot read '" << path << "'\n";
    return kUsageError;
  }
  req.input_text = *text;
  if (!points_path.empty()) {
    req.points_text = read_file(points_path);
    if (!req.points_text) {
      err << "error: cannot read '" << points_path << "'\n";
      return kUsageError;
    }
  }

  try {
    Outcome outcome = execute(req);
    out << (json ? outcome.report.to_json_text() : outcome.report.to_text());
    return outcome.exit_code;
  } catch (const ParseError& e) {
    err << path << ": parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
}

}  // namespace eulersym::cli
