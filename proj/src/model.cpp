#include "eulersym/model.hpp"

#include <algorithm>
#include <map>

#include "eulersym/error.hpp"

namespace eulersym {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; }))
    throw Error("a projective point needs a nonzero coordinate");
}

bool ProjectivePoint::operator==(const ProjectivePoint& other) const {
  if (coords_.size() != other.coords_.size()) return false;
  // p ~ q iff p_i q_j = p_j q_i for all i, j; comparing against one pivot suffices.
  std::size_t pivot = 0;
  while (coords_[pivot] == 0) ++pivot;
  if (other.coords_[pivot] == 0) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] * other.coords_[pivot] != other.coords_[i] * coords_[pivot]) return false;
  return true;
}

ProjectivePoint ProjectivePoint::normalized() const {
  std::size_t pivot = 0;
  while (coords_[pivot] == 0) ++pivot;
  Scalar inv = Scalar(1) / coords_[pivot];
  std::vector<Scalar> out = coords_;
  for (auto& c : out) c *= inv;
  return ProjectivePoint(std::move(out));
}

EulerModel::EulerModel(SymbolSystem system) : system_(std::move(system)) {
  offsets_.push_back(0);
  for (int k = 0; k <= system_.rank(); ++k) offsets_.push_back(offsets_.back() + block_size(k));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < offsets_.back(); ++i) names.push_back("z" + std::to_string(i));
  ambient_ctx_ = make_context(std::move(names));
}

EulerModel build_model(const SymbolSystem& system) { return EulerModel(system); }

ProjectivePoint EulerModel::phi(const Scalar& t, const Vector& w) const {
  require_same_context(w.context(), system_.context());
  if (t == 0 && w.is_zero()) throw Error("phi_F is undefined at [0 : 0]");
  const int r = rank();
  std::vector<Scalar> out;
  out.reserve(ambient_dimension());
  for (int k = 0; k <= r; ++k) {
    Scalar scale = power(t, r - k);
    const FormSpace component = system_.component(k);
    for (const auto& b : component.basis()) out.push_back(scale * evaluate(b, w));
  }
  return ProjectivePoint(std::move(out));
}

Matrix EulerModel::contraction_matrix(const Vector& v, int k, int j) const {
  require_same_context(v.context(), system_.context());
  if (j < 0 || j > k) throw Error("contraction order out of range");
  const FormSpace source = system_.component(k);
  const FormSpace target = system_.component(k - j);
  Matrix m(source.dimension(), target.dimension());
  for (std::size_t i = 0; i < source.dimension(); ++i) {
    auto coords = target.coordinates(contract(source.basis()[i], v, j));
    for (std::size_t c = 0; c < coords.size(); ++c) m(i, c) = coords[c];
  }
  return m;
}

ProjectivePoint EulerModel::act(const Vector& v, const ProjectivePoint& z) const {
  require_same_context(v.context(), system_.context());
  if (z.size() != ambient_dimension())
    throw Error("point has " + std::to_string(z.size()) + " coordinates, model ambient space has " +
                std::to_string(ambient_dimension()));
  const int r = rank();
  std::vector<Scalar> out(ambient_dimension());
  for (int k = 0; k <= r; ++k) {
    const std::size_t dk = block_size(k);
    for (int l = 0; l <= k; ++l) {
      const Matrix c = contraction_matrix(v, k, k - l);
      const Scalar coeff = binomial(k, l);
      const std::size_t src = block_offset(l);
      for (std::size_t i = 0; i < dk; ++i) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < c.cols(); ++j) acc += c(i, j) * z[src + j];
        out[block_offset(k) + i] += coeff * acc;
      }
    }
  }
  return ProjectivePoint(std::move(out));
}

ProjectivePoint EulerModel::euler(const Scalar& lambda, const ProjectivePoint& z) const {
  if (lambda == 0) throw Error("the Euler action needs lambda != 0");
  if (z.size() != ambient_dimension()) throw Error("point dimension does not match the model");
  std::vector<Scalar> out = z.coords();
  for (int k = 0; k <= rank(); ++k) {
    Scalar s = power(lambda, k);
    for (std::size_t i = block_offset(k); i < block_offset(k + 1); ++i) out[i] *= s;
  }
  return ProjectivePoint(std::move(out));
}

int EulerModel::orbit_curve_degree(const Vector& w) const {
  require_same_context(w.context(), system_.context());
  if (w.is_zero()) throw Error("orbit curves need a nonzero direction");
  for (int k = rank(); k >= 1; --k) {
    const FormSpace component = system_.component(k);
    for (const auto& b : component.basis())
      if (evaluate(b, w) != 0) return k;
  }
  return 1;  // unreachable: the w-block is nonzero
}

std::vector<Polynomial> EulerModel::chart_functions() const {
  std::vector<Polynomial> out;
  for (int k = 1; k <= rank(); ++k) {
    const FormSpace component = system_.component(k);
    out.insert(out.end(), component.basis().begin(), component.basis().end());
  }
  return out;
}

SymbolSystem recover_symbols(const EulerModel& model) {
  const auto& ctx = model.system().context();
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& f : model.chart_functions()) {
    auto d = f.homogeneous_degree();
    if (!d) throw Error("chart function is not homogeneous: " + f.to_string());
    by_degree[*d].push_back(f);
  }
  const int top = by_degree.empty() ? 1 : by_degree.rbegin()->first;
  std::vector<FormSpace> comps;
  comps.push_back(FormSpace::full(ctx, 0));
  for (int k = 1; k <= top; ++k) {
    auto it = by_degree.find(k);
    comps.push_back(it == by_degree.end() ? FormSpace::zero(ctx, k) : FormSpace::span(ctx, k, it->second));
  }
  return certify(ctx, std::move(comps));
}

namespace {

std::vector<Scalar> monomial_values(const std::vector<Monomial>& monos, const ProjectivePoint& p) {
  std::vector<Scalar> out;
  out.reserve(monos.size());
  for (const auto& m : monos) {
    Scalar v = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) v *= power(p[i], m[i]);
    out.push_back(std::move(v));
  }
  return out;
}

ProjectivePoint random_image_point(const EulerModel& model, RationalSampler& sampler) {
  Scalar t = sampler.next_nonzero();
  return model.phi(t, sampler.vector(model.system().context()));
}

}  // namespace

FormSpace implicitize(const EulerModel& model, const ImplicitizationOptions& options) {
  if (options.degree < 1) throw Error("implicitization degree must be >= 1");
  const auto& ambient = model.ambient_context();
  const auto monos = monomials_of_degree(ambient->size(), options.degree);
  const std::size_t samples = options.samples == 0 ? monos.size() + 10 : options.samples;
  if (samples < monos.size())
    throw Error("implicitization at degree " + std::to_string(options.degree) + " needs at least " +
                std::to_string(monos.size()) + " samples");

  RationalSampler sampler(options.seed, options.height);
  Matrix eval(0, monos.size());
  for (std::size_t s = 0; s < samples; ++s) eval.append_row(monomial_values(monos, random_image_point(model, sampler)));

  std::vector<Polynomial> forms;
  for (const auto& v : eval.nullspace()) {
    Polynomial::TermMap t;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (v[i] != 0) t.emplace(monos[i], v[i]);
    forms.emplace_back(ambient, std::move(t));
  }
  FormSpace result = FormSpace::span(ambient, options.degree, forms);

  for (std::size_t s = 0; s < 2 * samples; ++s) {
    auto p = random_image_point(model, sampler);
    Vector pv(ambient, p.coords());
    for (const auto& f : result.basis())
      if (evaluate(f, pv) != 0)
        throw Error("implicitization failed verification at a fresh point (seed " + std::to_string(options.seed) +
                    "); rerun with more samples");
  }
  return result;
}

}  // namespace eulersym
