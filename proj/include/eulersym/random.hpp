#pragma once

#include <cstdint>
#include <random>

#include "eulersym/polynomial.hpp"

namespace eulersym {

/// Bounds on sampled rationals: numerator in [-numerator_bound, numerator_bound],
/// denominator in [1, denominator_bound].
struct Height {
  int numerator_bound = 20;
  int denominator_bound = 10;
};

/// Seeded source of random rationals. Draws use mt19937_64 with modulo reduction so the
/// stream is identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, Height height = {}) : engine_(seed), height_(height) {}

  Scalar next();
  Scalar next_nonzero();
  /// Uniform integer in [lo, hi].
  long long next_int(long long lo, long long hi);

  Vector vector(const ContextPtr& ctx);
  Vector nonzero_vector(const ContextPtr& ctx);
  /// Every coordinate nonzero.
  Vector generic_vector(const ContextPtr& ctx);
  /// Each coordinate is zero with probability 1/2, otherwise a nonzero rational; never all zero.
  Vector sparse_vector(const ContextPtr& ctx);

  /// Random homogeneous polynomial of the given degree, each monomial kept with probability ~2/3.
  Polynomial homogeneous(const ContextPtr& ctx, int degree);

 private:
  std::mt19937_64 engine_;
  Height height_;
};

}  // namespace eulersym
