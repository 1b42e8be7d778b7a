#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulersym/error.hpp"
#include "eulersym/matrix.hpp"
#include "eulersym/random.hpp"
#include "eulersym/symbol_system.hpp"

namespace eulersym {

/// Affine polynomial embedding z -> (f_1(z), ..., f_N(z)); the constant 1 is implicit.
struct Parametrization {
  ContextPtr context;
  std::vector<Polynomial> coords;
  /// Jet truncation degree D; 0 means the largest total degree of the coordinates.
  int truncation_degree = 0;
  std::optional<Vector> base_point;
};

/// Raised when the first n coordinates do not have independent linear parts at the base point.
class ImmersionError : public Error {
 public:
  ImmersionError(std::string message, std::vector<Vector> directions)
      : Error(std::move(message)), directions_(std::move(directions)) {}
  /// Spanning set of the tangent directions annihilated by those linear parts.
  const std::vector<Vector>& directions() const { return directions_; }

 private:
  std::vector<Vector> directions_;
};

/// Raised when the jet truncation hides part of the span of the coordinate functions.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Graded pieces of the filtration of span{1, f_1, ..., f_N} by vanishing order at the
/// base point, expressed in chart coordinates u with u_i = linear part of f_i, i <= n.
struct JetFiltration {
  /// graded[k]: lowest-order terms of degree k of elements vanishing to order exactly k.
  std::vector<FormSpace> graded;
  /// dims[k] = graded[k].dimension(); the entries sum to dim span{1, f_j}.
  std::vector<std::size_t> dims;
  /// Maps chart coordinates back to recentered parameters: s = chart * u.
  Matrix chart;
};

JetFiltration jet_filtration(const Parametrization& param, const Vector& base_point);

/// System of fundamental forms G^0, ..., G^r at a point (r = top nonzero degree). At special
/// points this may have gaps and fail the closure axiom.
struct FFSystem {
  ContextPtr context;
  std::vector<FormSpace> components;
  Matrix chart;

  int rank() const { return static_cast<int>(components.size()) - 1; }
  std::vector<std::size_t> dimensions() const;
  /// Degrees 2 <= k < r with G^k = 0.
  std::vector<int> gaps() const;
  ValidationResult as_symbol_system() const;
};

FFSystem extract_fundamental_forms(const Parametrization& param, const Vector& base_point);

struct CartanTrial {
  Vector point;
  bool extracted = false;
  bool closure_holds = false;
  std::vector<std::size_t> dims;
  std::vector<std::string> diagnostics;
};

struct CartanReport {
  std::uint64_t seed = 0;
  std::vector<CartanTrial> trials;
  /// Every trial extracted and satisfied the closure axiom.
  bool all_pass() const;
  /// Dimension vector shared by the passing trials, empty if they disagree.
  std::vector<std::size_t> generic_dims() const;
};

/// Extracts and validates fundamental forms at `trials` random base points with nonzero
/// coordinates. Throws Error when no trial point admits extraction.
CartanReport cartan_check(const Parametrization& param, int trials, std::uint64_t seed, Height height = {});

}  // namespace eulersym
