#include "eulersym/random.hpp"

namespace eulersym {

long long RationalSampler::next_int(long long lo, long long hi) {
  auto span = static_cast<unsigned long long>(hi - lo) + 1ULL;
  return lo + static_cast<long long>(engine_() % span);
}

Scalar RationalSampler::next() {
  const long num = static_cast<long>(next_int(-height_.numerator_bound, height_.numerator_bound));
  const long den = static_cast<long>(next_int(1, height_.denominator_bound));
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar RationalSampler::next_nonzero() {
  while (true) {
    Scalar q = next();
    if (q != 0) return q;
  }
}

Vector RationalSampler::vector(const ContextPtr& ctx) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < ctx->size(); ++i) c.push_back(next());
  return Vector(ctx, std::move(c));
}

Vector RationalSampler::nonzero_vector(const ContextPtr& ctx) {
  while (true) {
    Vector v = vector(ctx);
    if (!v.is_zero()) return v;
  }
}

Vector RationalSampler::generic_vector(const ContextPtr& ctx) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < ctx->size(); ++i) c.push_back(next_nonzero());
  return Vector(ctx, std::move(c));
}

Vector RationalSampler::sparse_vector(const ContextPtr& ctx) {
  while (true) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < ctx->size(); ++i) c.push_back(next_int(0, 1) == 0 ? Scalar(0) : next_nonzero());
    Vector v(ctx, std::move(c));
    if (!v.is_zero()) return v;
  }
}

Polynomial RationalSampler::homogeneous(const ContextPtr& ctx, int degree) {
  Polynomial::TermMap t;
  for (const auto& m : monomials_of_degree(ctx->size(), degree))
    if (next_int(0, 2) != 0) t.emplace(m, next());
  return Polynomial(ctx, std::move(t));
}

}  // namespace eulersym
