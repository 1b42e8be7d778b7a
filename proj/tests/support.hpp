#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "eulersym/error.hpp"
#include "eulersym/form_space.hpp"
#include "eulersym/polynomial.hpp"

namespace eulersym::testing {

inline Polynomial poly(std::string_view text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }

inline Vector vec(const ContextPtr& ctx, std::initializer_list<long> coords) {
  std::vector<Scalar> out;
  for (long c : coords) out.emplace_back(c);
  return Vector(ctx, std::move(out));
}

inline std::vector<Polynomial> polys(const ContextPtr& ctx, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

inline FormSpace span_of(const ContextPtr& ctx, int degree, std::initializer_list<std::string_view> texts) {
  return FormSpace::span(ctx, degree, polys(ctx, texts));
}

}  // namespace eulersym::testing
