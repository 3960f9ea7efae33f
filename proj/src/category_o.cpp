#include "cherednik/category_o.hpp"

#include <algorithm>
#include <numeric>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

bool vec_is_zero(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

long to_long_multiplicity(const Scalar& s) {
  if (!s.is_integer()) throw Error("non-integral character multiplicity " + s.str());
  return s.to_rational().get_num().get_si();
}

Vec unit_vector(std::size_t dim, std::size_t idx) {
  Vec v(dim);
  v[idx] = Scalar(1);
  return v;
}

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return k;
  }
  return v.size();
}

// Joint kernel of t_1..t_n on the degree-n quotient, in reduced echelon form.
std::vector<Vec> singular_basis(const VermaSlice& slice, unsigned n) {
  const std::size_t ambient = slice.verma_dim(n);
  const std::vector<std::size_t> cols = slice.quotient_basis(n);
  std::vector<Vec> out;
  if (cols.empty()) return out;
  if (n == 0) {
    for (auto c : cols) out.push_back(unit_vector(ambient, c));
    return out;
  }
  const std::vector<std::size_t> rows = slice.quotient_basis(n - 1);
  const std::size_t rank = slice.algebra().rank();
  if (rows.empty()) {
    for (auto c : cols) out.push_back(unit_vector(ambient, c));
    return out;
  }
  Matrix m(rank * rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Vec e = unit_vector(ambient, cols[j]);
    for (std::size_t i = 0; i < rank; ++i) {
      const Vec image = slice.act_vec(i, n, e);
      for (std::size_t r = 0; r < rows.size(); ++r) m(i * rows.size() + r, j) = image[rows[r]];
    }
  }
  for (const Vec& k : m.nullspace()) {
    Vec v(ambient);
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Scalar c_scalar(const Irrep& irrep, const CherednikAlgebra& algebra) {
  Matrix m(irrep.dim, irrep.dim);
  const PBWElement central = algebra.euler_central();
  for (const auto& [key, coeff] : central.terms()) m = m + irrep.rho.at(key.group).scaled(coeff);
  const Scalar s = irrep.dim == 0 ? Scalar() : m(0, 0);
  if (!(m == Matrix::identity(irrep.dim).scaled(s))) {
    throw NotScalarAction("the Euler element does not act by a scalar on " + irrep.label);
  }
  return s;
}

VermaSlice::VermaSlice(const CherednikAlgebra& algebra, Irrep irrep, unsigned cutoff)
    : algebra_(&algebra), irrep_(std::move(irrep)), cutoff_(cutoff) {
  if (irrep_.rho.size() != algebra.group().order()) {
    throw ValidationError("irrep " + irrep_.label + " does not match the group order");
  }
  c_w_ = c_scalar(irrep_, algebra);
  const std::size_t rank = algebra.rank();
  for (unsigned n = 0; n <= cutoff; ++n) {
    monomials_.push_back(monomials_of_degree(rank, n));
    std::map<Exponents, std::size_t, DegLex> idx;
    for (std::size_t k = 0; k < monomials_.back().size(); ++k) idx.emplace(monomials_.back()[k], k);
    mono_index_.push_back(std::move(idx));
    killed_.emplace_back(verma_dim(n));
  }
  lowering_.resize(cutoff + 1);
  for (unsigned n = 1; n <= cutoff; ++n) {
    lowering_[n].resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (const Exponents& f : monomials_[n]) {
        std::vector<LowerTerm> terms;
        for (const auto& [k, c] : algebra.commute(unit_exponents(rank, i), f)) {
          if (!vec_is_zero(k.vec)) continue;
          terms.push_back(LowerTerm{mono_index_[n - 1].at(k.dual), k.group, c});
        }
        lowering_[n][i].push_back(std::move(terms));
      }
    }
  }
}

std::size_t VermaSlice::index(const Exponents& mono, std::size_t w) const {
  const unsigned n = total_degree(mono);
  if (n > cutoff_) throw CutoffExceeded("degree " + std::to_string(n) + " exceeds cutoff " + std::to_string(cutoff_));
  return mono_index_[n].at(mono) * irrep_.dim + w;
}

std::string VermaSlice::basis_label(unsigned n, std::size_t idx) const {
  const std::string mono = exponents_str(monomials_.at(n).at(idx / irrep_.dim), 'x');
  const std::string w = "w" + std::to_string(idx % irrep_.dim + 1);
  return mono.empty() ? w : mono + "*" + w;
}

Vec VermaSlice::act_dual(std::size_t i, unsigned n, const Vec& v) const {
  if (n >= cutoff_) throw CutoffExceeded("t*" + std::to_string(i + 1) + " leaves the truncation at degree " + std::to_string(n));
  const std::size_t d = irrep_.dim;
  Vec out(verma_dim(n + 1));
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    Exponents e = monomials_[n][idx / d];
    ++e[i];
    out[mono_index_[n + 1].at(e) * d + idx % d] += v[idx];
  }
  return reduce(n + 1, std::move(out));
}

Vec VermaSlice::act_vec(std::size_t i, unsigned n, const Vec& v) const {
  if (n == 0) return {};
  const std::size_t d = irrep_.dim;
  Vec out(verma_dim(n - 1));
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    const std::size_t w = idx % d;
    for (const LowerTerm& t : lowering_[n][i][idx / d]) {
      const Matrix& rho = irrep_.rho[t.group];
      const Scalar a = v[idx] * t.coeff;
      for (std::size_t w2 = 0; w2 < d; ++w2) {
        if (!rho(w2, w).is_zero()) out[t.mono * d + w2] += a * rho(w2, w);
      }
    }
  }
  return reduce(n - 1, std::move(out));
}

Vec VermaSlice::act_group(std::size_t g, unsigned n, const Vec& v) const {
  const std::size_t d = irrep_.dim;
  const Matrix& rho = irrep_.rho.at(g);
  Vec out(verma_dim(n));
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    const std::size_t w = idx % d;
    for (const auto& [e, c] : algebra_->act_dual(g, monomials_[n][idx / d])) {
      const std::size_t base = mono_index_[n].at(e) * d;
      const Scalar a = v[idx] * c;
      for (std::size_t w2 = 0; w2 < d; ++w2) {
        if (!rho(w2, w).is_zero()) out[base + w2] += a * rho(w2, w);
      }
    }
  }
  return reduce(n, std::move(out));
}

std::size_t VermaSlice::kill(unsigned n, const std::vector<Vec>& vectors) {
  std::size_t total = 0;
  std::vector<Vec> frontier;
  for (const Vec& v : vectors) {
    Vec r = reduce(n, v);
    if (killed_[n].insert(r)) {
      frontier.push_back(std::move(r));
      ++total;
    }
  }
  for (unsigned d = n; d < cutoff_ && !frontier.empty(); ++d) {
    std::vector<Vec> next;
    for (const Vec& f : frontier) {
      for (std::size_t i = 0; i < algebra_->rank(); ++i) {
        Vec y = act_dual(i, d, f);
        if (killed_[d + 1].insert(y)) {
          next.push_back(std::move(y));
          ++total;
        }
      }
    }
    frontier = std::move(next);
  }
  history_.emplace_back(n, vectors.size());
  return total;
}

GradedVector verma_action(const VermaSlice& slice, const PBWElement& a, const GradedVector& v) {
  const CherednikAlgebra& algebra = slice.algebra();
  if (a.algebra_id() != 0 && a.algebra_id() != algebra.id()) {
    throw AlgebraMismatch("element belongs to a different algebra");
  }
  const GroupAction& group = algebra.group();
  const Irrep& w_rep = slice.irrep();
  const std::size_t d = w_rep.dim;
  std::map<unsigned, Vec> out;
  for (const auto& [n, vec] : v) {
    for (std::size_t idx = 0; idx < vec.size(); ++idx) {
      if (vec[idx].is_zero()) continue;
      const Exponents& f = slice.monomials(n)[idx / d];
      const std::size_t w = idx % d;
      for (const auto& [key, ca] : a.terms()) {
        const unsigned lower = total_degree(key.vec);
        if (lower > n) continue;
        const unsigned target = n - lower + total_degree(key.dual);
        for (const auto& [k2, c2] : algebra.commute(key.vec, f)) {
          if (!vec_is_zero(k2.vec)) continue;
          if (target > slice.cutoff()) {
            throw CutoffExceeded("action reaches degree " + std::to_string(target) + " beyond cutoff " +
                                 std::to_string(slice.cutoff()));
          }
          auto [it, inserted] = out.try_emplace(target, Vec(slice.verma_dim(target)));
          Vec& dst = it->second;
          const Matrix& rho = w_rep.rho[group.multiply(key.group, k2.group)];
          const Scalar base = vec[idx] * ca * c2;
          for (const auto& [e, c3] : algebra.act_dual(key.group, k2.dual)) {
            const std::size_t pos = slice.index(add_exponents(key.dual, e), 0);
            const Scalar coeff = base * c3;
            for (std::size_t w2 = 0; w2 < d; ++w2) {
              if (!rho(w2, w).is_zero()) dst[pos + w2] += coeff * rho(w2, w);
            }
          }
        }
      }
    }
  }
  GradedVector result;
  for (auto& [n, vec] : out) {
    Vec r = slice.reduce(n, std::move(vec));
    if (!is_zero(r)) result.emplace(n, std::move(r));
  }
  return result;
}

Vec dunkl_action(const VermaSlice& slice, const Vec& y, unsigned n, const Vec& u) {
  if (slice.is_quotient()) throw ValidationError("Dunkl operators act on genuine Verma slices only");
  if (n == 0) return {};
  const CherednikAlgebra& algebra = slice.algebra();
  const std::size_t rank = algebra.rank();
  const std::size_t d = slice.irrep().dim;
  Vec out(slice.verma_dim(n - 1));
  for (std::size_t idx = 0; idx < u.size(); ++idx) {
    if (u[idx].is_zero()) continue;
    const Exponents& f = slice.monomials(n)[idx / d];
    const std::size_t w = idx % d;
    const Polynomial fp = monomial_poly(f);
    for (std::size_t i = 0; i < rank; ++i) {
      if (y[i].is_zero()) continue;
      for (const auto& [e, c] : poly_derivative(fp, i)) out[slice.index(e, w)] += u[idx] * y[i] * c;
    }
    const auto& refl = algebra.reflections();
    for (std::size_t r = 0; r < refl.size(); ++r) {
      Scalar pairing;
      for (std::size_t i = 0; i < rank; ++i) pairing += y[i] * refl[r].alpha[i];
      const Scalar weight = algebra.euler_weights()[r] * pairing;
      if (weight.is_zero()) continue;
      const Polynomial diff = poly_add(fp, poly_scale(algebra.act_dual(refl[r].element, f), Scalar(-1)));
      const Matrix& rho = slice.irrep().rho[refl[r].element];
      for (const auto& [e, c] : poly_divide_linear(diff, refl[r].alpha)) {
        const std::size_t pos = slice.index(e, 0);
        const Scalar coeff = u[idx] * weight * c;
        for (std::size_t w2 = 0; w2 < d; ++w2) {
          if (!rho(w2, w).is_zero()) out[pos + w2] -= coeff * rho(w2, w);
        }
      }
    }
  }
  return out;
}

SingularSpace singular_vectors(const VermaSlice& slice, unsigned n, const std::vector<Irrep>& irreps) {
  SingularSpace out;
  out.degree = n;
  out.basis = singular_basis(slice, n);
  const std::size_t k = out.basis.size();
  if (k == 0) return out;
  const GroupAction& group = slice.algebra().group();
  std::vector<std::size_t> pivots;
  for (const Vec& b : out.basis) pivots.push_back(first_nonzero(b));
  std::vector<Matrix> module;
  for (std::size_t g = 0; g < group.order(); ++g) {
    Matrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec image = slice.act_group(g, n, out.basis[j]);
      for (std::size_t r = 0; r < k; ++r) m(r, j) = image[pivots[r]];
    }
    module.push_back(std::move(m));
  }
  for (std::size_t e = 0; e < irreps.size(); ++e) {
    const std::vector<Vec> coords = isotypic_project(irreps[e], group, module);
    if (coords.empty()) continue;
    IsotypicPart part;
    part.irrep = e;
    part.label = irreps[e].label;
    for (const Vec& c : coords) {
      Vec v(slice.verma_dim(n));
      for (std::size_t j = 0; j < k; ++j) {
        if (c[j].is_zero()) continue;
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += c[j] * out.basis[j][t];
      }
      part.basis.push_back(std::move(v));
    }
    rref(part.basis);
    part.multiplicity = part.basis.size() / irreps[e].dim;
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::size_t GradedCharacter::total_dim(unsigned n) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) total += static_cast<std::size_t>(mult.at(n)[k]) * dims[k];
  return total;
}

GradedCharacter graded_character(const VermaSlice& slice, const std::vector<Irrep>& irreps) {
  const GroupAction& group = slice.algebra().group();
  GradedCharacter out;
  for (const auto& w : irreps) {
    out.labels.push_back(w.label);
    out.dims.push_back(w.dim);
  }
  for (unsigned n = 0; n <= slice.cutoff(); ++n) {
    const std::vector<std::size_t> basis = slice.quotient_basis(n);
    std::vector<Scalar> chi(group.order());
    for (const auto& cls : group.classes()) {
      Scalar trace;
      for (auto c : basis) trace += slice.act_group(cls.front(), n, unit_vector(slice.verma_dim(n), c))[c];
      for (auto g : cls) chi[g] = trace;
    }
    std::vector<long> row;
    for (const auto& w : irreps) row.push_back(to_long_multiplicity(character_inner(chi, w.character, group)));
    out.mult.push_back(std::move(row));
    if (out.total_dim(n) != basis.size()) throw Error("irrep list does not exhaust the slice at degree " + std::to_string(n));
  }
  return out;
}

std::vector<WeightSpace> weight_spaces(const VermaSlice& slice) {
  const PBWElement euler = slice.algebra().euler();
  std::vector<WeightSpace> out;
  for (unsigned n = 0; n <= slice.cutoff(); ++n) {
    const Scalar weight = slice.c_w() + Scalar(static_cast<long>(n));
    for (auto c : slice.quotient_basis(n)) {
      Vec e = unit_vector(slice.verma_dim(n), c);
      const GradedVector image = verma_action(slice, euler, GradedVector{{n, e}});
      for (auto& x : e) x *= weight;
      const bool ok = weight.is_zero() ? image.empty() : (image.size() == 1 && image.begin()->first == n &&
                                                          image.begin()->second == e);
      if (!ok) throw Error("Euler element is not scalar on degree " + std::to_string(n));
    }
    out.push_back(WeightSpace{weight, n, slice.dim(n)});
  }
  return out;
}

SimpleQuotient simple_quotient_slice(const CherednikAlgebra& algebra, const std::vector<Irrep>& irreps,
                                     std::size_t w, unsigned cutoff) {
  SimpleQuotient out{VermaSlice(algebra, irreps.at(w), cutoff), {}, false, 0};
  while (true) {
    ++out.passes;
    bool found = false;
    for (unsigned n = 1; n <= cutoff; ++n) {
      const std::vector<Vec> sing = singular_basis(out.slice, n);
      if (sing.empty()) continue;
      out.slice.kill(n, sing);
      found = true;
    }
    if (!found) break;
  }
  out.stable_under_cutoff = true;
  out.character = graded_character(out.slice, irreps);
  return out;
}

std::size_t hom_dim(std::size_t e, const VermaSlice& slice, const std::vector<Irrep>& irreps) {
  std::size_t total = 0;
  for (unsigned n = 0; n <= slice.cutoff(); ++n) {
    const SingularSpace space = singular_vectors(slice, n, irreps);
    for (const auto& part : space.parts) {
      if (part.irrep == e) total += part.multiplicity;
    }
  }
  return total;
}

namespace {

std::vector<Scalar> all_c_scalars(const std::vector<Irrep>& irreps, const CherednikAlgebra& algebra) {
  std::vector<Scalar> out;
  for (const auto& w : irreps) out.push_back(c_scalar(w, algebra));
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> highest_weight_order(const std::vector<Irrep>& irreps,
                                                                      const CherednikAlgebra& algebra) {
  const std::vector<Scalar> c = all_c_scalars(irreps, algebra);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t w = 0; w < c.size(); ++w) {
    for (std::size_t e = 0; e < c.size(); ++e) {
      const Scalar diff = c[e] - c[w];
      if (diff.is_integer() && diff.to_rational() > 0) edges.emplace_back(w, e);
    }
  }
  return edges;
}

std::vector<std::vector<std::size_t>> blocks(const std::vector<Irrep>& irreps, const CherednikAlgebra& algebra) {
  const std::vector<Scalar> c = all_c_scalars(irreps, algebra);
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const Scalar diff = c[b] - c[a];
      if (diff.is_integer() && !diff.is_zero()) parent[std::max(find(a), find(b))] = std::min(find(a), find(b));
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < c.size(); ++a) groups[find(a)].push_back(a);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<long> decompose_verma_character(std::size_t w, const std::vector<Irrep>& irreps,
                                            const CherednikAlgebra& algebra, const std::vector<GradedCharacter>& simples,
                                            unsigned cutoff) {
  const std::vector<Scalar> c = all_c_scalars(irreps, algebra);
  auto remaining = graded_character(VermaSlice(algebra, irreps.at(w), cutoff), irreps).mult;
  std::vector<long> result(irreps.size(), 0);
  for (unsigned d = 0; d <= cutoff; ++d) {
    for (std::size_t k = 0; k < irreps.size(); ++k) {
      const long m = remaining[d][k];
      if (m == 0) continue;
      if (m < 0) {
        throw InconsistentTruncation("negative remainder for " + irreps[k].label + " at degree " + std::to_string(d));
      }
      if (!(c[k] - c[w] == Scalar(static_cast<long>(d)))) {
        throw InconsistentTruncation("no simple with top " + irreps[k].label + " fits at degree " + std::to_string(d));
      }
      if (simples.at(k).mult.size() < cutoff - d + 1) {
        throw InconsistentTruncation("character of L(" + irreps[k].label + ") is truncated too early");
      }
      result[k] += m;
      for (unsigned e = 0; d + e <= cutoff; ++e) {
        for (std::size_t j = 0; j < irreps.size(); ++j) remaining[d + e][j] -= m * simples[k].mult[e][j];
      }
    }
  }
  return result;
}

std::vector<std::vector<long>> decomposition_matrix(const std::vector<Irrep>& irreps, const CherednikAlgebra& algebra,
                                                    unsigned cutoff) {
  std::vector<GradedCharacter> simples;
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    simples.push_back(simple_quotient_slice(algebra, irreps, k, cutoff).character);
  }
  std::vector<std::vector<long>> out;
  for (std::size_t w = 0; w < irreps.size(); ++w) {
    out.push_back(decompose_verma_character(w, irreps, algebra, simples, cutoff));
  }
  return out;
}

}  // namespace cherednik
