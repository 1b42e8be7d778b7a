#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulersym {

/// Exact rational scalar. GMP keeps values in canonical form (den > 0, coprime).
using Scalar = mpq_class;

/// Parses "a" or "a/b" with an optional leading sign. Throws Error on bad input or b = 0.
Scalar parse_scalar(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Scalar& value);

Scalar binomial(int n, int k);

Scalar power(const Scalar& base, int exponent);

}  // namespace eulersym
