#pragma once

#include <cstdint>
#include <vector>

#include "eulersym/matrix.hpp"
#include "eulersym/random.hpp"
#include "eulersym/symbol_system.hpp"

namespace eulersym {

/// A point of a projective space, compared up to nonzero scaling.
class ProjectivePoint {
 public:
  /// Throws Error when every coordinate is zero.
  explicit ProjectivePoint(std::vector<Scalar> coords);

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  /// Proportionality test.
  bool operator==(const ProjectivePoint& other) const;

  /// Representative scaled so the first nonzero coordinate is 1.
  ProjectivePoint normalized() const;

 private:
  std::vector<Scalar> coords_;
};

/// The ambient space V_F = C + W + (F^2)* + ... + (F^r)* of a symbol system, blocked as
/// (t | w | f^2 | ... | f^r). Block k is coordinatized against the canonical basis
/// b^k_1..b^k_{d_k} of F^k, so iota_w^k has coordinates (b^k_i(w))_i. The t-block and
/// w-block are the degree-0 and degree-1 blocks of the same scheme.
class EulerModel {
 public:
  explicit EulerModel(SymbolSystem system);

  const SymbolSystem& system() const { return system_; }
  int rank() const { return system_.rank(); }
  std::size_t ambient_dimension() const { return offsets_.back(); }
  std::size_t block_offset(int k) const { return offsets_.at(static_cast<std::size_t>(k)); }
  std::size_t block_size(int k) const { return system_.component(k).dimension(); }

  /// Coordinates z0 .. z<N-1> of V_F.
  const ContextPtr& ambient_context() const { return ambient_ctx_; }

  /// phi_F([t : w]) = [t^r : t^{r-1} w : t^{r-2} iota_w^2 : ... : iota_w^r].
  ProjectivePoint phi(const Scalar& t, const Vector& w) const;

  /// g_v . z for an arbitrary point z of P(V_F). Block k becomes
  /// sum_{l=0}^{k} binom(k, l) f^l o iota_v^{k-l}, with f^0 = t and f^1 = w, which is
  /// sum_{l>=2} binom(k,l) f^l o iota_v^{k-l} + k iota_w o iota_v^{k-1} + t iota_v^k.
  ProjectivePoint act(const Vector& v, const ProjectivePoint& z) const;

  /// lambda . z scales block k by lambda^k. Throws Error for lambda = 0.
  ProjectivePoint euler(const Scalar& lambda, const ProjectivePoint& z) const;

  /// Degree of the closure of the torus orbit [1 : s w : s^2 iota_w^2 : ...]: the top k
  /// with iota_w^k nonzero on F^k. Throws Error for w = 0.
  int orbit_curve_degree(const Vector& w) const;

  /// Matrix of iota_v^j : F^k -> F^{k-j} in the chosen bases; row i holds the
  /// coordinates of iota_v^j b^k_i.
  Matrix contraction_matrix(const Vector& v, int k, int j) const;

  /// Affine chart t = 1 as polynomial functions of w: the w-block coordinates followed by
  /// the coordinates of every higher block, in ambient order (the t-coordinate is omitted).
  std::vector<Polynomial> chart_functions() const;

 private:
  SymbolSystem system_;
  std::vector<std::size_t> offsets_;  // rank + 2 entries; offsets_[k] starts block k
  ContextPtr ambient_ctx_;
};

EulerModel build_model(const SymbolSystem& system);

/// Re-reads the symbols off the t = 1 chart: groups the chart functions by degree and
/// spans each group.
SymbolSystem recover_symbols(const EulerModel& model);

struct ImplicitizationOptions {
  int degree = 2;
  std::size_t samples = 0;  // 0: number of degree-d monomials plus 10
  std::uint64_t seed = 0;
  Height height{};
};

/// Degree-d forms on V_F vanishing at `samples` random image points, re-verified at twice
/// as many fresh points. Throws Error when samples are too few or verification fails.
FormSpace implicitize(const EulerModel& model, const ImplicitizationOptions& options);

}  // namespace eulersym
