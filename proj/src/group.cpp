#include "cherednik/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cherednik/errors.hpp"

namespace cherednik {

GroupAction GroupAction::enumerate(const std::vector<Matrix>& generators, std::size_t cap) {
  if (generators.empty()) throw ValidationError("at least one generator is required");
  GroupAction g;
  g.dim_ = generators.front().rows();
  if (g.dim_ == 0) throw ValidationError("generators must have positive dimension");
  unsigned field = 1;
  for (const auto& m : generators) {
    if (m.rows() != g.dim_ || m.cols() != g.dim_) throw ValidationError("generators must be square of equal size");
    for (std::size_t r = 0; r < g.dim_; ++r) {
      for (std::size_t c = 0; c < g.dim_; ++c) {
        const Scalar& s = m(r, c);
        if (!s.is_algebraic_integer()) {
          throw NonIntegralEntry("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " + s.str());
        }
        if (s.field() != 1) {
          if (field != 1 && field != s.field()) throw FieldMismatch("generators use different cyclotomic fields");
          field = s.field();
        }
      }
    }
    try {
      (void)m.inverse();
    } catch (const DivisionByZero&) {
      throw ValidationError("generator is not invertible");
    }
  }
  g.field_ = field;

  std::map<Matrix, std::size_t> index;
  g.elements_.push_back(Matrix::identity(g.dim_));
  index.emplace(g.elements_.back(), 0);
  g.parent_.push_back(0);
  g.letter_.push_back(0);
  const std::size_t ngen = generators.size();
  std::vector<std::size_t> right;  // right[a * ngen + s] = index of a * gen_s
  for (std::size_t a = 0; a < g.elements_.size(); ++a) {
    for (std::size_t s = 0; s < ngen; ++s) {
      Matrix prod = g.elements_[a] * generators[s];
      auto it = index.find(prod);
      if (it == index.end()) {
        if (g.elements_.size() >= cap) {
          throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
        }
        it = index.emplace(prod, g.elements_.size()).first;
        g.elements_.push_back(std::move(prod));
        g.parent_.push_back(a);
        g.letter_.push_back(s);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = g.elements_.size();
  for (std::size_t s = 0; s < ngen; ++s) g.generators_.push_back(right[s]);

  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    g.table_[a * n] = a;
    for (std::size_t b = 1; b < n; ++b) {
      g.table_[a * n + b] = right[g.table_[a * n + g.parent_[b]] * ngen + g.letter_[b]];
    }
  }
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
  }

  g.class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.class_of_[a] != n) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t conj = g.multiply(g.multiply(h, a), g.inverse_[h]);
      if (g.class_of_[conj] == n) {
        g.class_of_[conj] = g.classes_.size();
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes_.push_back(std::move(cls));
  }
  return g;
}

std::size_t GroupAction::index_of(const Matrix& m) const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == m) return k;
  }
  throw Error("matrix is not an element of the group");
}

std::vector<PseudoReflection> find_reflections(const GroupAction& group) {
  std::vector<PseudoReflection> out;
  const std::size_t n = group.dimension();
  const Matrix id = Matrix::identity(n);
  for (std::size_t g = 1; g < group.order(); ++g) {
    const Matrix& m = group.element(g);
    const Matrix d = m - id;
    if (d.rank() != 1) continue;
    PseudoReflection r;
    r.element = g;
    for (std::size_t row = 0; row < n; ++row) {
      Vec v = d.row(row);
      if (is_zero(v)) continue;
      std::size_t k = 0;
      while (v[k].is_zero()) ++k;
      const Scalar inv = v[k].inv();
      for (auto& x : v) x *= inv;
      r.alpha = std::move(v);
      break;
    }
    for (std::size_t col = 0; col < n; ++col) {
      Vec v = d.column(col);
      if (is_zero(v)) continue;
      r.alpha_vee = std::move(v);
      break;
    }
    Scalar pairing;
    for (std::size_t k = 0; k < n; ++k) pairing += r.alpha[k] * r.alpha_vee[k];
    if (pairing.is_zero()) throw EigenvalueNotInField("element " + std::to_string(g) + " is not diagonalizable");
    const Scalar scale = Scalar(2) / pairing;
    for (auto& x : r.alpha_vee) x *= scale;
    const Vec image = m.apply(r.alpha_vee);
    std::size_t k = 0;
    while (r.alpha_vee[k].is_zero()) ++k;
    const Scalar mu = image[k] / r.alpha_vee[k];
    r.lambda = mu.inv();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> reflection_classes(const GroupAction& group) {
  std::vector<bool> is_reflection(group.order(), false);
  for (const auto& r : find_reflections(group)) is_reflection[r.element] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < group.classes().size(); ++c) {
    if (is_reflection[group.classes()[c].front()]) out.push_back(c);
  }
  return out;
}

ReflectionFunction::ReflectionFunction(const GroupAction& group, std::vector<Scalar> values)
    : values_(std::move(values)), per_element_(group.order()) {
  const auto classes = reflection_classes(group);
  if (classes.size() != values_.size()) {
    throw ValidationError("c: expected " + std::to_string(classes.size()) + " values (one per reflection class), got " +
                          std::to_string(values_.size()));
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::size_t g : group.classes()[classes[k]]) per_element_[g] = values_[k];
  }
}

ReflectionFunction ReflectionFunction::constant(const GroupAction& group, const Scalar& value) {
  return ReflectionFunction(group, std::vector<Scalar>(reflection_classes(group).size(), value));
}

Scalar character_inner(const std::vector<Scalar>& chi, const std::vector<Scalar>& psi, const GroupAction& group) {
  Scalar sum;
  for (std::size_t g = 0; g < group.order(); ++g) sum += chi[g] * psi[group.inverse(g)];
  return sum / Scalar(static_cast<long>(group.order()));
}

Irrep validate_irrep(const std::string& label, std::vector<Matrix> rho, const GroupAction& group) {
  if (rho.size() != group.order()) {
    throw ValidationError("irrep " + label + ": expected " + std::to_string(group.order()) + " matrices");
  }
  const std::size_t d = rho.front().rows();
  for (const auto& m : rho) {
    if (m.rows() != d || m.cols() != d || d == 0) throw ValidationError("irrep " + label + ": inconsistent matrix sizes");
  }
  if (!rho[group.identity()].is_identity()) throw NotHomomorphism("irrep " + label + ": identity not sent to Id");
  for (std::size_t a = 0; a < group.order(); ++a) {
    for (std::size_t b = 0; b < group.order(); ++b) {
      if (!(rho[a] * rho[b] == rho[group.multiply(a, b)])) {
        throw NotHomomorphism("irrep " + label + ": rho(g" + std::to_string(a) + ")rho(g" + std::to_string(b) +
                              ") != rho(g" + std::to_string(a) + "g" + std::to_string(b) + ")");
      }
    }
  }
  Irrep irrep;
  irrep.label = label;
  irrep.dim = d;
  for (const auto& m : rho) irrep.character.push_back(m.trace());
  irrep.rho = std::move(rho);
  const Scalar norm = character_inner(irrep.character, irrep.character, group);
  if (!norm.is_one()) throw NotIrreducible("irrep " + label + ": <chi, chi> = " + norm.str());
  return irrep;
}

Irrep irrep_from_generators(const std::string& label, const std::vector<Matrix>& generator_images,
                            const GroupAction& group) {
  if (generator_images.size() != group.generators().size()) {
    throw ValidationError("irrep " + label + ": expected " + std::to_string(group.generators().size()) +
                          " generator images");
  }
  const std::size_t d = generator_images.front().rows();
  std::vector<Matrix> rho(group.order());
  rho[0] = Matrix::identity(d);
  for (std::size_t g = 1; g < group.order(); ++g) {
    rho[g] = rho[group.word_parent()[g]] * generator_images.at(group.word_letter()[g]);
  }
  return validate_irrep(label, std::move(rho), group);
}

Matrix isotypic_projector(const Irrep& irrep, const GroupAction& group, const std::vector<Matrix>& module) {
  const std::size_t n = module.front().rows();
  Matrix proj(n, n);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Scalar& chi = irrep.character[group.inverse(g)];
    if (chi.is_zero()) continue;
    proj = proj + module[g].scaled(chi);
  }
  return proj.scaled(Scalar(static_cast<long>(irrep.dim)) / Scalar(static_cast<long>(group.order())));
}

std::vector<Vec> isotypic_project(const Irrep& irrep, const GroupAction& group, const std::vector<Matrix>& module) {
  const Matrix proj = isotypic_projector(irrep, group, module);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < proj.cols(); ++c) cols.push_back(proj.column(c));
  rref(cols);
  return cols;
}

}  // namespace cherednik
