#include "eulersym/fundamental_forms.hpp"

#include <algorithm>

namespace eulersym {

namespace {

struct Column {
  Monomial mono;
  int degree;
};

// Monomials of degree 0..max_degree, ascending degree, grevlex-descending within a degree.
std::vector<Column> jet_columns(std::size_t n, int max_degree) {
  std::vector<Column> cols;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : monomials_of_degree(n, d)) cols.push_back({std::move(m), d});
  return cols;
}

Matrix coefficient_matrix(const std::vector<Polynomial>& funcs, const std::vector<Column>& cols) {
  Matrix m(funcs.size(), cols.size());
  for (std::size_t r = 0; r < funcs.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = funcs[r].coefficient(cols[c].mono);
  return m;
}

}  // namespace

JetFiltration jet_filtration(const Parametrization& param, const Vector& base_point) {
  const auto& ctx = param.context;
  require_same_context(ctx, base_point.context());
  const std::size_t n = ctx->size();
  if (param.coords.size() < n)
    throw ImmersionError("an immersion needs at least as many coordinates as parameters", {});

  std::vector<Polynomial> recentered;
  for (const auto& f : param.coords) {
    require_same_context(ctx, f.context());
    recentered.push_back(translate(f, base_point));
  }

  // Linear parts of the first n coordinates; row j, column i = coefficient of s_i in g_j.
  Matrix linear(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) linear(j, i) = recentered[j].coefficient(Monomial::variable(n, i));
  if (linear.rank() < n) {
    std::vector<Vector> dirs;
    for (auto& v : linear.nullspace()) dirs.emplace_back(ctx, std::move(v));
    std::string msg = "not an immersion at the base point: the first " + std::to_string(n) +
                      " coordinates have dependent linear parts; degenerate directions:";
    for (const auto& d : dirs) {
      msg += " (";
      for (std::size_t i = 0; i < d.size(); ++i) msg += (i ? ", " : "") + to_string(d[i]);
      msg += ")";
    }
    throw ImmersionError(msg, std::move(dirs));
  }

  // Chart coordinates u = A s, so s = A^{-1} u and the first n functions start with u_j.
  Matrix chart = linear.inverse();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial s(ctx);
    for (std::size_t l = 0; l < n; ++l)
      if (chart(i, l) != 0) s += Polynomial::variable(ctx, l) * chart(i, l);
    images.push_back(std::move(s));
  }
  std::vector<Polynomial> funcs{Polynomial::constant(ctx, 1)};
  int max_degree = 1;
  for (const auto& g : recentered) {
    funcs.push_back(g.substitute(images, ctx));
    max_degree = std::max(max_degree, funcs.back().total_degree());
  }
  const int truncation = param.truncation_degree > 0 ? param.truncation_degree : max_degree;

  const auto cols = jet_columns(n, std::min(truncation, max_degree));
  Matrix reduced = coefficient_matrix(funcs, cols);
  auto pivots = reduced.rref();
  if (truncation < max_degree) {
    const std::size_t full_rank = coefficient_matrix(funcs, jet_columns(n, max_degree)).rank();
    if (pivots.size() < full_rank)
      throw TruncationError("jets truncated at degree " + std::to_string(truncation) +
                            " lose part of the coordinate span; use a truncation degree of at least " +
                            std::to_string(max_degree));
  }

  int top = 0;
  for (auto p : pivots) top = std::max(top, cols[p].degree);
  std::vector<std::vector<Polynomial>> leading(static_cast<std::size_t>(top + 1));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const int k = cols[pivots[r]].degree;
    Polynomial::TermMap t;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (cols[c].degree == k && reduced(r, c) != 0) t.emplace(cols[c].mono, reduced(r, c));
    leading[static_cast<std::size_t>(k)].emplace_back(ctx, std::move(t));
  }

  JetFiltration out{{}, {}, std::move(chart)};
  for (int k = 0; k <= top; ++k) {
    out.graded.push_back(FormSpace::span(ctx, k, leading[static_cast<std::size_t>(k)]));
    out.dims.push_back(out.graded.back().dimension());
  }
  return out;
}

std::vector<std::size_t> FFSystem::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& c : components) out.push_back(c.dimension());
  return out;
}

std::vector<int> FFSystem::gaps() const {
  std::vector<int> out;
  for (int k = 2; k < rank(); ++k)
    if (components[static_cast<std::size_t>(k)].is_zero()) out.push_back(k);
  return out;
}

ValidationResult FFSystem::as_symbol_system() const { return SymbolSystem::validate(context, components); }

FFSystem extract_fundamental_forms(const Parametrization& param, const Vector& base_point) {
  auto filtration = jet_filtration(param, base_point);
  while (filtration.graded.size() > 2 && filtration.graded.back().is_zero()) filtration.graded.pop_back();
  return FFSystem{param.context, std::move(filtration.graded), std::move(filtration.chart)};
}

bool CartanReport::all_pass() const {
  return !trials.empty() &&
         std::all_of(trials.begin(), trials.end(), [](const CartanTrial& t) { return t.extracted && t.closure_holds; });
}

std::vector<std::size_t> CartanReport::generic_dims() const {
  std::optional<std::vector<std::size_t>> dims;
  for (const auto& t : trials) {
    if (!t.extracted || !t.closure_holds) continue;
    if (!dims) dims = t.dims;
    else if (*dims != t.dims) return {};
  }
  return dims.value_or(std::vector<std::size_t>{});
}

CartanReport cartan_check(const Parametrization& param, int trials, std::uint64_t seed, Height height) {
  if (trials < 1) throw Error("cartan check needs at least one trial");
  RationalSampler sampler(seed, height);
  CartanReport report;
  report.seed = seed;
  bool any_extracted = false;
  for (int i = 0; i < trials; ++i) {
    CartanTrial trial{sampler.generic_vector(param.context), false, false, {}, {}};
    try {
      FFSystem ff = extract_fundamental_forms(param, trial.point);
      trial.extracted = true;
      any_extracted = true;
      trial.dims = ff.dimensions();
      auto validation = ff.as_symbol_system();
      trial.closure_holds = validation.ok();
      for (const auto& v : validation.violations) trial.diagnostics.push_back(describe(v));
    } catch (const ImmersionError& e) {
      trial.diagnostics.push_back(e.what());
    } catch (const TruncationError& e) {
      trial.diagnostics.push_back(e.what());
    }
    report.trials.push_back(std::move(trial));
  }
  if (!any_extracted) throw Error("cartan check: extraction failed at every sampled base point");
  return report;
}

}  // namespace eulersym
