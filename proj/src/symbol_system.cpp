#include "eulersym/symbol_system.hpp"

#include "eulersym/error.hpp"

namespace eulersym {

ValidationResult SymbolSystem::validate(const ContextPtr& ctx, std::vector<FormSpace> components) {
  ValidationResult result;
  auto structural = [&](int degree, std::string msg) {
    Violation v;
    v.kind = Violation::Kind::structure;
    v.degree = degree;
    v.message = std::move(msg);
    result.violations.push_back(std::move(v));
  };

  if (components.size() < 2) {
    structural(0, "a symbol system needs components F^0 and F^1 (rank >= 1)");
    return result;
  }
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!same_context(components[k].context(), ctx)) structural(static_cast<int>(k), "component uses a different variable list");
    if (components[k].degree() != static_cast<int>(k))
      structural(static_cast<int>(k), "component " + std::to_string(k) + " has degree " +
                                          std::to_string(components[k].degree()));
  }
  if (!result.violations.empty()) return result;

  if (!components[0].is_full()) structural(0, "F^0 must be the constants");
  if (!components[1].is_full()) structural(1, "F^1 must be all of W*");
  const int r = static_cast<int>(components.size()) - 1;
  if (components.back().is_zero()) structural(r, "top component F^" + std::to_string(r) + " is zero");

  for (int k = 1; k <= r; ++k) {
    const auto& lower = components[static_cast<std::size_t>(k - 1)];
    for (const auto& phi : components[static_cast<std::size_t>(k)].basis()) {
      for (std::size_t i = 0; i < ctx->size(); ++i) {
        Polynomial img = contract(phi, Vector::basis(ctx, i), 1);
        if (lower.contains(img)) continue;
        Violation v;
        v.kind = Violation::Kind::closure;
        v.degree = k;
        v.direction = i;
        v.form = phi;
        v.image = img;
        v.message = "contraction by e" + std::to_string(i + 1) + " leaves F^" + std::to_string(k - 1);
        result.violations.push_back(std::move(v));
      }
    }
  }
  if (result.violations.empty()) result.system = SymbolSystem(ctx, std::move(components));
  return result;
}

FormSpace SymbolSystem::component(int k) const {
  if (k < 0) throw Error("negative component index");
  if (k <= rank()) return components_[static_cast<std::size_t>(k)];
  return FormSpace::zero(ctx_, k);
}

std::vector<std::size_t> SymbolSystem::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& c : components_) out.push_back(c.dimension());
  return out;
}

std::string describe(const Violation& v) {
  std::string out = "F^" + std::to_string(v.degree) + ": " + v.message;
  if (v.form && v.image) out += " (iota " + v.form->to_string() + " = " + v.image->to_string() + ")";
  return out;
}

SymbolSystem certify(const ContextPtr& ctx, std::vector<FormSpace> components) {
  auto result = SymbolSystem::validate(ctx, std::move(components));
  if (result.ok()) return *std::move(result.system);
  std::string msg = "not a symbol system:";
  for (const auto& v : result.violations) msg += "\n  " + describe(v);
  throw Error(msg);
}

FormSpace prolong(const FormSpace& space) {
  if (space.degree() < 1) throw Error("prolongation is only taken from degree >= 1");
  const auto& ctx = space.context();
  const int k = space.degree();
  LinearImages images;
  for (const auto& m : monomials_of_degree(ctx->size(), k + 1)) {
    Polynomial mono = Polynomial::term(ctx, m);
    std::vector<std::vector<Scalar>> blocks;
    for (std::size_t i = 0; i < ctx->size(); ++i)
      blocks.push_back(monomial_coordinates(space.reduce(contract(mono, Vector::basis(ctx, i), 1)), k));
    images.emplace(m, std::move(blocks));
  }
  return kernel(ctx, k + 1, images);
}

SymbolSystem from_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw Error("F_P needs a nonzero polynomial");
  auto r = p.homogeneous_degree();
  if (!r) throw Error("F_P needs a homogeneous polynomial");
  if (*r < 2) throw Error("F_P needs degree >= 2");
  const auto& ctx = p.context();
  std::vector<FormSpace> comps(static_cast<std::size_t>(*r + 1), FormSpace::zero(ctx, 0));
  comps[static_cast<std::size_t>(*r)] = FormSpace::span(ctx, *r, std::vector<Polynomial>{p});
  for (int k = *r - 1; k >= 2; --k) {
    std::vector<Polynomial> gens;
    for (const auto& phi : comps[static_cast<std::size_t>(k + 1)].basis())
      for (std::size_t i = 0; i < ctx->size(); ++i) gens.push_back(contract(phi, Vector::basis(ctx, i), 1));
    comps[static_cast<std::size_t>(k)] = FormSpace::span(ctx, k, gens);
  }
  comps[0] = FormSpace::full(ctx, 0);
  comps[1] = FormSpace::full(ctx, 1);
  return certify(ctx, std::move(comps));
}

SymbolSystem full_system(const ContextPtr& ctx, int rank) {
  if (rank < 1) throw Error("rank must be >= 1");
  std::vector<FormSpace> comps;
  for (int k = 0; k <= rank; ++k) comps.push_back(FormSpace::full(ctx, k));
  return certify(ctx, std::move(comps));
}

SymbolSystem full_system(std::size_t n, int rank) { return full_system(standard_context(n), rank); }

int order(const SymbolSystem& system, const GroebnerOptions& options) {
  // Bs(F^k) grows with k, so the first nonempty base locus ends the scan.
  for (int k = 1; k <= system.rank(); ++k)
    if (!is_zero_dimensional(system.component(k), options)) return k - 1;
  return system.rank();
}

FormSpace base_locus_forms(const SymbolSystem& system, const GroebnerOptions& options) {
  return system.component(order(system, options) + 1);
}

SaturationReport is_saturated(const SymbolSystem& system, std::span<const Vector> base_points,
                              const GroebnerOptions& options) {
  const int m = order(system, options);
  if (m != 1)
    throw Error("saturation is defined for symbol systems of rank r and of order 1; this system has order " +
                std::to_string(m));
  const auto& ctx = system.context();
  const FormSpace f2 = system.component(2);

  auto ideal = saturate_ideal(ctx, f2.basis(), options);
  auto quadrics = graded_component(ideal, 2);
  std::vector<std::string> diagnostics;
  bool quadric_clause = quadrics == f2;
  if (!quadric_clause)
    diagnostics.push_back("degree-2 part of the saturated base-locus ideal " + quadrics.to_string() +
                          " differs from F^2 " + f2.to_string());

  std::vector<ProlongationGap> gaps;
  for (int k = 2; k <= system.rank(); ++k) {
    FormSpace pro = prolong(system.component(k));
    FormSpace next = system.component(k + 1);
    if (pro == next) continue;
    diagnostics.push_back("prolong(F^" + std::to_string(k) + ") strictly contains F^" + std::to_string(k + 1) +
                          ": dim " + std::to_string(pro.dimension()) + " vs " + std::to_string(next.dimension()));
    gaps.push_back(ProlongationGap{k, std::move(pro), std::move(next)});
  }

  std::optional<FormSpace> interpolated;
  if (!base_points.empty()) {
    for (const auto& p : base_points) {
      require_same_context(ctx, p.context());
      if (p.is_zero()) throw Error("base-locus point must be nonzero");
      for (const auto& phi : f2.basis())
        if (evaluate(phi, p) != 0) throw Error("supplied point is not on the base locus Bs(F)");
    }
    interpolated = vanishing_forms(ctx, 2, base_points);
    if (!(*interpolated == quadrics))
      diagnostics.push_back("quadrics through the supplied base-locus points " + interpolated->to_string() +
                            " differ from the saturated-ideal quadrics " + quadrics.to_string());
  }

  bool prolongation_clause = gaps.empty();
  return SaturationReport{quadric_clause && prolongation_clause,
                          quadric_clause,
                          prolongation_clause,
                          std::move(ideal),
                          std::move(quadrics),
                          std::move(gaps),
                          std::move(interpolated),
                          std::move(diagnostics)};
}

}  // namespace eulersym
