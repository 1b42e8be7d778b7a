#include "eulersym/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "eulersym/error.hpp"

namespace eulersym {

// ---- Vector ---------------------------------------------------------------

Vector::Vector(ContextPtr ctx) : ctx_(std::move(ctx)), coords_(ctx_->size()) {}

Vector::Vector(ContextPtr ctx, std::vector<Scalar> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_->size())
    throw Error("vector has " + std::to_string(coords_.size()) + " coordinates, context has " +
                std::to_string(ctx_->size()) + " variables");
}

Vector Vector::basis(ContextPtr ctx, std::size_t i) {
  Vector v(std::move(ctx));
  v.coords_.at(i) = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
}

Vector Vector::operator+(const Vector& other) const {
  require_same_context(ctx_, other.ctx_);
  Vector out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

Vector Vector::operator-(const Vector& other) const {
  require_same_context(ctx_, other.ctx_);
  Vector out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

Vector Vector::operator*(const Scalar& c) const {
  Vector out(*this);
  for (auto& x : out.coords_) x *= c;
  return out;
}

bool Vector::operator==(const Vector& other) const {
  return same_context(ctx_, other.ctx_) && coords_ == other.coords_;
}

// ---- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Polynomial::Polynomial(ContextPtr ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  for (const auto& [m, c] : terms_)
    if (m.size() != ctx_->size()) throw Error("monomial arity does not match the variable context");
  prune();
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& c) {
  auto n = ctx->size();
  return term(std::move(ctx), Monomial::one(n), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  auto n = ctx->size();
  if (i >= n) throw Error("variable index out of range");
  return term(std::move(ctx), Monomial::variable(n, i), 1);
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Scalar& c) {
  TermMap t;
  if (c != 0) t.emplace(m, c);
  return Polynomial(std::move(ctx), std::move(t));
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

Polynomial Polynomial::homogeneous_part(int d) const {
  TermMap t;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) t.emplace(m, c);
  return Polynomial(ctx_, std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out(*this);
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial out(*this);
  out *= c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  TermMap t;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) {
      auto [it, inserted] = t.try_emplace(m1 * m2, c1 * c2);
      if (!inserted) it->second += c1 * c2;
    }
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Polynomial out = constant(ctx_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= ctx_->size()) throw Error("variable index out of range");
  TermMap t;
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    t.emplace(m / Monomial::variable(m.size(), i), c * e);
  }
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, const ContextPtr& target) const {
  if (images.size() != ctx_->size()) throw Error("substitution needs one image per variable");
  for (const auto& img : images) require_same_context(img.context(), target);
  // Cache powers per variable; degrees are small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term_value = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term_value = term_value * power_of(i, m[i]);
    out += term_value;
  }
  return out;
}

Polynomial Polynomial::embed(const ContextPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ctx_->size()) throw Error("embedding needs one target index per variable");
  TermMap t;
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) e.at(var_map[i]) += m[i];
    t.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(target, std::move(t));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  auto order = MonomialOrder::grevlex();
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_->name(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += eulersym::to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += eulersym::to_string(mag) + "*" + vars;
    }
  }
  return out;
}

// ---- contraction calculus -------------------------------------------------

Scalar evaluate(const Polynomial& p, const Vector& w) {
  require_same_context(p.context(), w.context());
  Scalar total = 0;
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= power(w[i], m[i]);
    total += t;
  }
  return total;
}

Polynomial directional_derivative(const Polynomial& p, const Vector& v) {
  require_same_context(p.context(), v.context());
  Polynomial out(p.context());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out += p.derivative(i) * v[i];
  return out;
}

Polynomial contract(const Polynomial& p, const Vector& v, int j) {
  require_same_context(p.context(), v.context());
  if (j < 0) throw Error("contraction count must be nonnegative");
  if (p.is_zero()) return p;
  auto k = p.homogeneous_degree();
  if (!k) throw Error("contraction is defined only on homogeneous polynomials");
  if (j > *k) return Polynomial(p.context());
  Polynomial out = p;
  for (int step = 0; step < j; ++step) {
    int deg = *k - step;
    out = directional_derivative(out, v) * Scalar(1, deg);
  }
  return out;
}

Scalar polarize(const Polynomial& p, std::span<const Vector> ws) {
  if (!p.is_homogeneous()) throw Error("polarization needs a homogeneous polynomial");
  if (p.is_zero()) return 0;
  auto k = static_cast<std::size_t>(*p.homogeneous_degree());
  if (ws.size() != k)
    throw Error("polarization of a degree-" + std::to_string(k) + " form needs " + std::to_string(k) +
                " vectors, got " + std::to_string(ws.size()));
  Polynomial out = p;
  for (const auto& w : ws) out = contract(out, w, 1);
  return out.coefficient(Monomial::one(p.context()->size()));
}

Polynomial translate(const Polynomial& p, const Vector& a) {
  require_same_context(p.context(), a.context());
  const auto& ctx = p.context();
  std::vector<Polynomial> images;
  images.reserve(ctx->size());
  for (std::size_t i = 0; i < ctx->size(); ++i)
    images.push_back(Polynomial::variable(ctx, i) + Polynomial::constant(ctx, a[i]));
  return p.substitute(images, ctx);
}

// ---- parsing --------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const ContextPtr& ctx) : s_(text), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial out = parse_sum();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return out;
  }

 private:
  // sum := ['+'|'-'] term (('+'|'-') term)*, stopping at ')' or the end of input.
  Polynomial parse_sum() {
    Polynomial out(ctx_);
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = parse_term();
      if (negate) out -= t;
      else out += t;
      skip_ws();
      if (at_end() || peek() == ')') break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      negate = c == '-';
      ++pos_;
    }
    return out;
  }

  // term := factor ('*' factor)*, factor := number | variable ['^' n] | '(' sum ')' ['^' n]
  Polynomial parse_term() {
    Scalar coeff = 1;
    std::vector<int> exps(ctx_->size(), 0);
    Polynomial groups = Polynomial::constant(ctx_, 1);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto idx = ctx_->index_of(name);
        if (!idx) fail_at(start, "unknown variable '" + name + "'");
        exps[*idx] += parse_exponent();
      } else if (c == '(') {
        ++pos_;
        Polynomial inner = parse_sum();
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
        groups = groups * inner.pow(parse_exponent());
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return groups * Polynomial::term(ctx_, Monomial(std::move(exps)), coeff);
  }

  int parse_exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t estart = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (estart == pos_) fail("expected an exponent after '^'");
    if (pos_ - estart > 4) fail_at(estart, "exponent too large");
    return std::stoi(std::string(s_.substr(estart, pos_ - estart)));
  }

  Scalar parse_number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(s_.substr(start, pos_ - start));
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected a denominator after '/'");
      std::string den(s_.substr(dstart, pos_ - dstart));
      if (mpz_class(den, 10) == 0) fail_at(dstart, "zero denominator");
      return parse_scalar(num + "/" + den);
    }
    return parse_scalar(num);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, 0, static_cast<int>(pos) + 1);
  }

  std::string_view s_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) { return PolyParser(text, ctx).parse(); }

}  // namespace eulersym
