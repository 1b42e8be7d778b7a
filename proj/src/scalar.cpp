#include "eulersym/scalar.hpp"

#include <cctype>

#include "eulersym/error.hpp"

namespace eulersym {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(out);
}

Scalar power(const Scalar& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("zero raised to a negative power");
    return power(Scalar(1) / base, -exponent);
  }
  Scalar out(1);
  Scalar b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) out *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return out;
}

}  // namespace eulersym
