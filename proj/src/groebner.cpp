#include "eulersym/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace eulersym {

namespace {

// Terms sorted strictly descending under one monomial order; head is the leading term.
using Term = std::pair<Monomial, Scalar>;
using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  return out;
}

Polynomial from_ordered(const ContextPtr& ctx, const OrderedPoly& p) {
  return Polynomial(ctx, Polynomial::TermMap(p.begin(), p.end()));
}

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.front().second == 1) return;
  Scalar inv = Scalar(1) / p.front().second;
  for (auto& [m, c] : p) c *= inv;
}

// h - c * m * g, merging two descending term lists.
OrderedPoly sub_scaled(const OrderedPoly& h, const Scalar& c, const Monomial& m, const OrderedPoly& g,
                       const MonomialOrder& order) {
  OrderedPoly out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].first * m;
    if (i == h.size()) {
      out.emplace_back(std::move(gm), -c * g[j].second);
      ++j;
      continue;
    }
    auto cmp = order.compare(h[i].first, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.emplace_back(std::move(gm), -c * g[j].second);
      ++j;
    } else {
      Scalar v = h[i].second - c * g[j].second;
      if (v != 0) out.emplace_back(h[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

OrderedPoly reduce_ordered(OrderedPoly h, const std::vector<const OrderedPoly*>& divisors,
                           const MonomialOrder& order) {
  OrderedPoly rem;
  while (!h.empty()) {
    const auto& [lm, lc] = h.front();
    const OrderedPoly* hit = nullptr;
    for (const auto* d : divisors)
      if (!d->empty() && d->front().first.divides(lm)) {
        hit = d;
        break;
      }
    if (hit == nullptr) {
      rem.push_back(h.front());
      h.erase(h.begin());
      continue;
    }
    Scalar c = lc / hit->front().second;
    Monomial q = lm / hit->front().first;
    h = sub_scaled(h, c, q, *hit, order);
  }
  return rem;
}

OrderedPoly spoly_ordered(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  Monomial l = f.front().first.lcm(g.front().first);
  OrderedPoly scaled_f;
  Monomial qf = l / f.front().first;
  Scalar inv_f = Scalar(1) / f.front().second;
  for (const auto& [m, c] : f) scaled_f.emplace_back(m * qf, c * inv_f);
  return sub_scaled(scaled_f, Scalar(1) / g.front().second, l / g.front().first, g, order);
}

std::vector<OrderedPoly> reduced_basis(std::vector<OrderedPoly> g, const MonomialOrder& order) {
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].front().first;
      const auto& lj = g[j].front().first;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (auto& p : minimal) make_monic(p);
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    OrderedPoly tail(minimal[i].begin() + 1, minimal[i].end());
    OrderedPoly reduced_tail = reduce_ordered(std::move(tail), others, order);
    OrderedPoly rebuilt{minimal[i].front()};
    rebuilt.insert(rebuilt.end(), reduced_tail.begin(), reduced_tail.end());
    minimal[i] = std::move(rebuilt);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.compare(a.front().first, b.front().first) < 0; });
  return minimal;
}

// Embeds polynomials over ctx into aux_ctx = (aux, ctx...).
std::pair<ContextPtr, std::vector<std::size_t>> with_aux_variable(const ContextPtr& ctx) {
  std::string name = "_aux";
  while (ctx->index_of(name)) name += "_";
  std::vector<std::string> names{name};
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  std::vector<std::size_t> var_map(ctx->size());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i + 1;
  return {make_context(std::move(names)), std::move(var_map)};
}

// Keeps the basis elements free of the auxiliary variable and maps them back to ctx.
std::vector<Polynomial> eliminate_aux(const ContextPtr& ctx, const ContextPtr& aux_ctx,
                                      std::span<const Polynomial> aux_gens, const GroebnerOptions& options) {
  auto g = buchberger(aux_ctx, aux_gens, MonomialOrder::elimination(1), options);
  std::vector<Polynomial> out;
  for (const auto& p : g.generators()) {
    bool free_of_aux = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return kv.first[0] == 0; });
    if (!free_of_aux) continue;
    Polynomial::TermMap t;
    for (const auto& [m, c] : p.terms()) {
      auto e = m.exponents();
      t.emplace(Monomial(std::vector<int>(e.begin() + 1, e.end())), c);
    }
    out.emplace_back(ctx, std::move(t));
  }
  return out;
}

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || order.greater(m, *best)) best = &m;
  return *best;
}

Scalar leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_context(f.context(), g.context());
  if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of a zero polynomial");
  return from_ordered(f.context(), spoly_ordered(to_ordered(f, order), to_ordered(g, order), order));
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  std::vector<OrderedPoly> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) {
    require_same_context(p.context(), d.context());
    ds.push_back(to_ordered(d, order));
  }
  std::vector<const OrderedPoly*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  return from_ordered(p.context(), reduce_ordered(to_ordered(p, order), ptrs, order));
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const { return normal_form(p, gens_, order_); }

bool GroebnerBasis::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) {
    return leading_monomial(g, order_).is_one();
  });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(leading_monomial(g, order_));
  return out;
}

GroebnerBasis buchberger(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  std::vector<OrderedPoly> g;
  for (const auto& p : gens) {
    require_same_context(ctx, p.context());
    if (p.is_zero()) continue;
    g.push_back(to_ordered(p, order));
    make_monic(g.back());
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  while (!pending.empty()) {
    // Normal selection: smallest lcm degree, then smallest lcm, then indices.
    auto best = pending.begin();
    Monomial best_lcm = g[best->first].front().first.lcm(g[best->second].front().first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = g[it->first].front().first.lcm(g[it->second].front().first);
      int dl = l.degree();
      int db = best_lcm.degree();
      if (dl < db || (dl == db && order.compare(l, best_lcm) < 0)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const auto& li = g[i].front().first;
    const auto& lj = g[j].front().first;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].front().first.divides(best_lcm) && !pending.count(key(i, k)) && !pending.count(key(j, k)))
        chain = true;
    }
    if (chain) continue;
    if (best_lcm.degree() > options.degree_cap) throw DegreeCapExceeded(options.degree_cap);

    std::vector<const OrderedPoly*> ptrs;
    for (const auto& p : g) ptrs.push_back(&p);
    OrderedPoly r = reduce_ordered(spoly_ordered(g[i], g[j], order), ptrs, order);
    if (r.empty()) continue;
    make_monic(r);
    g.push_back(std::move(r));
    std::size_t k = g.size() - 1;
    for (std::size_t a = 0; a < k; ++a) pending.emplace(a, k);
  }

  std::vector<Polynomial> out;
  for (const auto& p : reduced_basis(std::move(g), order)) out.push_back(from_ordered(ctx, p));
  return GroebnerBasis(ctx, order, std::move(out));
}

bool is_zero_dimensional(const FormSpace& space, const GroebnerOptions& options) {
  if (space.degree() < 1) throw Error("base loci are defined for forms of degree >= 1");
  if (space.is_zero()) return false;
  auto g = buchberger(space.context(), space.basis(), MonomialOrder::grevlex(), options);
  auto leads = g.leading_monomials();
  const std::size_t n = space.context()->size();
  for (const auto& m : leads)
    if (m.is_one()) return true;
  for (std::size_t v = 0; v < n; ++v) {
    bool found = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m[v] == m.degree() && m[v] > 0;
    });
    if (!found) return false;
  }
  return true;
}

GroebnerBasis colon_by_variable(const ContextPtr& ctx, std::span<const Polynomial> gens, std::size_t var,
                                const GroebnerOptions& options) {
  if (var >= ctx->size()) throw Error("colon variable out of range");
  auto [aux_ctx, var_map] = with_aux_variable(ctx);
  std::vector<Polynomial> aux_gens;
  for (const auto& p : gens) {
    require_same_context(ctx, p.context());
    aux_gens.push_back(p.embed(aux_ctx, var_map));
  }
  // 1 - y * x_var
  std::vector<int> e(aux_ctx->size(), 0);
  e[0] = 1;
  e[var + 1] = 1;
  aux_gens.push_back(Polynomial::constant(aux_ctx, 1) - Polynomial::term(aux_ctx, Monomial(std::move(e))));
  auto kept = eliminate_aux(ctx, aux_ctx, aux_gens, options);
  return buchberger(ctx, kept, MonomialOrder::grevlex(), options);
}

GroebnerBasis intersect_ideals(const ContextPtr& ctx, std::span<const Polynomial> i_gens,
                               std::span<const Polynomial> j_gens, const GroebnerOptions& options) {
  auto [aux_ctx, var_map] = with_aux_variable(ctx);
  Polynomial t = Polynomial::variable(aux_ctx, 0);
  Polynomial one_minus_t = Polynomial::constant(aux_ctx, 1) - t;
  std::vector<Polynomial> aux_gens;
  for (const auto& p : i_gens) {
    require_same_context(ctx, p.context());
    aux_gens.push_back(t * p.embed(aux_ctx, var_map));
  }
  for (const auto& p : j_gens) {
    require_same_context(ctx, p.context());
    aux_gens.push_back(one_minus_t * p.embed(aux_ctx, var_map));
  }
  auto kept = eliminate_aux(ctx, aux_ctx, aux_gens, options);
  return buchberger(ctx, kept, MonomialOrder::grevlex(), options);
}

GroebnerBasis saturate_ideal(const ContextPtr& ctx, std::span<const Polynomial> gens, const GroebnerOptions& options) {
  for (const auto& p : gens) {
    require_same_context(ctx, p.context());
    if (!p.is_homogeneous()) throw Error("saturation expects homogeneous generators");
  }
  std::vector<Polynomial> acc;
  for (std::size_t v = 0; v < ctx->size(); ++v) {
    auto colon = colon_by_variable(ctx, gens, v, options);
    if (v == 0) {
      acc = colon.generators();
    } else {
      acc = intersect_ideals(ctx, acc, colon.generators(), options).generators();
    }
  }
  return buchberger(ctx, acc, MonomialOrder::grevlex(), options);
}

FormSpace graded_component(const GroebnerBasis& basis, int degree) {
  if (degree < 0) throw Error("negative degree");
  const auto& ctx = basis.context();
  std::vector<Polynomial> spanning;
  for (const auto& g : basis.generators()) {
    auto d = g.homogeneous_degree();
    if (!d) throw Error("graded components need a homogeneous ideal basis");
    if (*d > degree) continue;
    for (const auto& m : monomials_of_degree(ctx->size(), degree - *d))
      spanning.push_back(g * Polynomial::term(ctx, m));
  }
  return FormSpace::span(ctx, degree, spanning);
}

}  // namespace eulersym
