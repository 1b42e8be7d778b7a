#include "eulersym/form_space.hpp"

#include "eulersym/error.hpp"
#include "eulersym/matrix.hpp"

namespace eulersym {

namespace {

Polynomial from_coordinates(const ContextPtr& ctx, const std::vector<Monomial>& monos,
                            const std::vector<Scalar>& coords) {
  Polynomial::TermMap t;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (coords[i] != 0) t.emplace(monos[i], coords[i]);
  return Polynomial(ctx, std::move(t));
}

void check_degree(const Polynomial& p, int degree) {
  if (p.is_zero()) return;
  auto d = p.homogeneous_degree();
  if (!d) throw Error("form is not homogeneous: " + p.to_string());
  if (*d != degree)
    throw Error("degree mismatch: expected a degree-" + std::to_string(degree) + " form, got " + p.to_string());
}

void check_same_space(const FormSpace& a, const FormSpace& b) {
  require_same_context(a.context(), b.context());
  if (a.degree() != b.degree()) throw Error("form spaces of different degrees");
}

}  // namespace

std::vector<Scalar> monomial_coordinates(const Polynomial& p, int degree) {
  check_degree(p, degree);
  auto monos = monomials_of_degree(p.context()->size(), degree);
  std::vector<Scalar> out(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) out[i] = p.coefficient(monos[i]);
  return out;
}

FormSpace FormSpace::zero(ContextPtr ctx, int degree) {
  if (degree < 0) throw Error("negative form degree");
  return FormSpace(std::move(ctx), degree);
}

FormSpace FormSpace::full(ContextPtr ctx, int degree) {
  FormSpace s = zero(std::move(ctx), degree);
  for (const auto& m : monomials_of_degree(s.ctx_->size(), degree)) {
    s.basis_.push_back(Polynomial::term(s.ctx_, m));
    s.leads_.push_back(m);
  }
  return s;
}

FormSpace FormSpace::span(ContextPtr ctx, int degree, std::span<const Polynomial> polys) {
  FormSpace s = zero(std::move(ctx), degree);
  auto monos = monomials_of_degree(s.ctx_->size(), degree);
  Matrix m(0, monos.size());
  for (const auto& p : polys) {
    require_same_context(p.context(), s.ctx_);
    m.append_row(monomial_coordinates(p, degree));
  }
  auto pivots = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.basis_.push_back(from_coordinates(s.ctx_, monos, m.row(r)));
    s.leads_.push_back(monos[pivots[r]]);
  }
  return s;
}

bool FormSpace::is_full() const { return dimension() == count_monomials(ctx_->size(), degree_); }

void FormSpace::check_compatible(const Polynomial& p) const {
  require_same_context(p.context(), ctx_);
  check_degree(p, degree_);
}

Polynomial FormSpace::reduce(const Polynomial& p) const {
  check_compatible(p);
  Polynomial r = p;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r.coefficient(leads_[i]);
    if (c != 0) r -= basis_[i] * c;
  }
  return r;
}

bool FormSpace::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

bool FormSpace::contains(const FormSpace& other) const {
  check_same_space(*this, other);
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::vector<Scalar> FormSpace::coordinates(const Polynomial& p) const {
  check_compatible(p);
  std::vector<Scalar> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = p.coefficient(leads_[i]);
  Polynomial rebuilt(ctx_);
  for (std::size_t i = 0; i < basis_.size(); ++i) rebuilt += basis_[i] * out[i];
  if (!(rebuilt == p)) throw Error("form " + p.to_string() + " is not in the space");
  return out;
}

bool FormSpace::operator==(const FormSpace& other) const {
  return same_context(ctx_, other.ctx_) && degree_ == other.degree_ && basis_ == other.basis_;
}

std::string FormSpace::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += basis_[i].to_string();
  }
  return out + ">";
}

FormSpace sum(const FormSpace& a, const FormSpace& b) {
  check_same_space(a, b);
  std::vector<Polynomial> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return FormSpace::span(a.context(), a.degree(), all);
}

FormSpace intersect(const FormSpace& a, const FormSpace& b) {
  check_same_space(a, b);
  // Columns: a-basis then b-basis; rows: monomial coordinates. A kernel vector (x, y)
  // gives sum x_i a_i = -sum y_j b_j, a point of the intersection.
  auto monos = monomials_of_degree(a.context()->size(), a.degree());
  const std::size_t da = a.dimension();
  const std::size_t db = b.dimension();
  Matrix m(monos.size(), da + db);
  for (std::size_t j = 0; j < da; ++j) {
    auto c = monomial_coordinates(a.basis()[j], a.degree());
    for (std::size_t r = 0; r < monos.size(); ++r) m(r, j) = c[r];
  }
  for (std::size_t j = 0; j < db; ++j) {
    auto c = monomial_coordinates(b.basis()[j], b.degree());
    for (std::size_t r = 0; r < monos.size(); ++r) m(r, da + j) = c[r];
  }
  std::vector<Polynomial> gens;
  for (const auto& v : m.nullspace()) {
    Polynomial p(a.context());
    for (std::size_t j = 0; j < da; ++j)
      if (v[j] != 0) p += a.basis()[j] * v[j];
    gens.push_back(std::move(p));
  }
  return FormSpace::span(a.context(), a.degree(), gens);
}

bool equal(const FormSpace& a, const FormSpace& b) {
  check_same_space(a, b);
  return a == b;
}

FormSpace kernel(const ContextPtr& ctx, int degree, const LinearImages& images) {
  auto monos = monomials_of_degree(ctx->size(), degree);
  if (images.size() != monos.size())
    throw Error("kernel: expected images for " + std::to_string(monos.size()) + " monomials, got " +
                std::to_string(images.size()));
  std::vector<std::size_t> shape;
  bool first = true;
  for (const auto& m : monos) {
    auto it = images.find(m);
    if (it == images.end()) throw Error("kernel: missing image for a degree-" + std::to_string(degree) + " monomial");
    std::vector<std::size_t> s;
    for (const auto& v : it->second) s.push_back(v.size());
    if (first) shape = s;
    first = false;
    if (s != shape) throw Error("kernel: inconsistent image dimensions");
  }
  std::size_t height = 0;
  for (auto s : shape) height += s;
  Matrix mat(height, monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    std::size_t r = 0;
    for (const auto& block : images.at(monos[c]))
      for (const auto& x : block) mat(r++, c) = x;
  }
  std::vector<Polynomial> gens;
  for (const auto& v : mat.nullspace()) gens.push_back(from_coordinates(ctx, monos, v));
  return FormSpace::span(ctx, degree, gens);
}

FormSpace vanishing_forms(const ContextPtr& ctx, int degree, std::span<const Vector> points) {
  LinearImages images;
  for (const auto& m : monomials_of_degree(ctx->size(), degree)) {
    std::vector<Scalar> values;
    auto mono = Polynomial::term(ctx, m);
    for (const auto& p : points) values.push_back(evaluate(mono, p));
    images.emplace(m, std::vector<std::vector<Scalar>>{std::move(values)});
  }
  return kernel(ctx, degree, images);
}

}  // namespace eulersym
