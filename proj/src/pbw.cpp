#include "cherednik/pbw.hpp"

#include <atomic>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

std::uint64_t next_algebra_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

bool is_zero_exponents(const Exponents& e) {
  for (auto x : e) {
    if (x != 0) return false;
  }
  return true;
}

void add_to(TermMap& terms, const PBWKey& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

long PBWKey::grade() const {
  return static_cast<long>(total_degree(dual)) - static_cast<long>(total_degree(vec));
}

bool PBWKeyLess::operator()(const PBWKey& a, const PBWKey& b) const {
  const DegLex less;
  if (less(a.dual, b.dual)) return true;
  if (less(b.dual, a.dual)) return false;
  if (a.group != b.group) return a.group < b.group;
  return less(a.vec, b.vec);
}

Scalar PBWElement::coefficient(const PBWKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void PBWElement::add_term(const PBWKey& key, const Scalar& coeff) { add_to(terms_, key, coeff); }

void PBWElement::check_compatible(const PBWElement& other) {
  if (other.id_ == 0 || other.id_ == id_) return;
  if (id_ == 0) {
    id_ = other.id_;
    return;
  }
  throw AlgebraMismatch("elements belong to different algebras");
}

PBWElement& PBWElement::operator+=(const PBWElement& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, -c);
  return *this;
}

PBWElement PBWElement::operator-() const {
  PBWElement out(id_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

PBWElement operator*(const Scalar& s, const PBWElement& a) {
  PBWElement out(a.id_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, s * c);
  return out;
}

CherednikAlgebra::CherednikAlgebra(std::shared_ptr<const GroupAction> group, const ReflectionFunction& c,
                                   AlgebraOptions options)
    : id_(next_algebra_id()), group_(std::move(group)), c_(c), options_(options) {
  reflections_ = find_reflections(*group_);
  init();
}

CherednikAlgebra::CherednikAlgebra(std::shared_ptr<const GroupAction> group, std::vector<PseudoReflection> reflections,
                                   const ReflectionFunction& c, AlgebraOptions options)
    : id_(next_algebra_id()), group_(std::move(group)), reflections_(std::move(reflections)), c_(c),
      options_(options) {
  init();
}

void CherednikAlgebra::init() {
  const std::size_t n = rank();
  for (const auto& r : reflections_) {
    euler_weights_.push_back(Scalar(2) * c_(r.element) / (Scalar(1) - r.lambda));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) kappa_.push_back(c_(r.element) * r.alpha[i] * r.alpha_vee[j]);
    }
  }
  dual_images_.resize(group_->order());
  vec_images_.resize(group_->order());
  for (std::size_t g = 0; g < group_->order(); ++g) {
    const Matrix& m = group_->element(g);
    const Matrix& minv = group_->element(group_->inverse(g));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> dual_coeffs(n), vec_coeffs(n);
      for (std::size_t k = 0; k < n; ++k) {
        dual_coeffs[k] = minv(j, k);
        vec_coeffs[k] = m(k, j);
      }
      dual_images_[g].push_back(linear_form(dual_coeffs));
      vec_images_[g].push_back(linear_form(vec_coeffs));
    }
  }
}

const Scalar& CherednikAlgebra::commutator_coefficient(std::size_t refl, std::size_t i, std::size_t j) const {
  const std::size_t n = rank();
  return kappa_[(refl * n + i) * n + j];
}

void CherednikAlgebra::check(const PBWElement& a) const {
  if (a.algebra_id() != 0 && a.algebra_id() != id_) throw AlgebraMismatch("element belongs to a different algebra");
}

PBWElement CherednikAlgebra::scalar(const Scalar& s) const {
  return monomial(PBWKey{Exponents(rank(), 0), group_->identity(), Exponents(rank(), 0)}, s);
}

PBWElement CherednikAlgebra::dual(std::size_t i) const {
  return monomial(PBWKey{unit_exponents(rank(), i), group_->identity(), Exponents(rank(), 0)});
}

PBWElement CherednikAlgebra::vec(std::size_t i) const {
  return monomial(PBWKey{Exponents(rank(), 0), group_->identity(), unit_exponents(rank(), i)});
}

PBWElement CherednikAlgebra::group_element(std::size_t g) const {
  if (g >= group_->order()) throw ValidationError("group element index out of range: g" + std::to_string(g));
  return monomial(PBWKey{Exponents(rank(), 0), g, Exponents(rank(), 0)});
}

PBWElement CherednikAlgebra::monomial(const PBWKey& key, const Scalar& coeff) const {
  PBWElement out(id_);
  out.add_term(key, coeff);
  return out;
}

const Polynomial& CherednikAlgebra::act_dual(std::size_t g, const Exponents& e) const {
  auto key = std::make_pair(g, e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = dual_cache_.find(key); it != dual_cache_.end()) return it->second;
  }
  Polynomial result;
  if (g == group_->identity() || is_zero_exponents(e)) {
    result = monomial_poly(e);
  } else {
    std::size_t j = 0;
    while (e[j] == 0) ++j;
    Exponents rest = e;
    --rest[j];
    result = poly_mul(dual_images_[g][j], act_dual(g, rest));
  }
  std::lock_guard lock(mutex_);
  return dual_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const Polynomial& CherednikAlgebra::act_vec(std::size_t g, const Exponents& e) const {
  auto key = std::make_pair(g, e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = vec_cache_.find(key); it != vec_cache_.end()) return it->second;
  }
  Polynomial result;
  if (g == group_->identity() || is_zero_exponents(e)) {
    result = monomial_poly(e);
  } else {
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    Exponents rest = e;
    --rest[i];
    result = poly_mul(vec_images_[g][i], act_vec(g, rest));
  }
  std::lock_guard lock(mutex_);
  return vec_cache_.emplace(std::move(key), std::move(result)).first->second;
}

// t_i . t*^I. Peels the leftmost t*_j and applies
//   t_i t*_j = t*_j t_i + delta_ij - sum_g kappa(g,i,j) g
// followed by g t*^{I'} = (g.t*^{I'}) g.
const TermMap& CherednikAlgebra::commute_single(std::size_t i, const Exponents& dual_exp) const {
  const std::size_t n = rank();
  auto key = std::make_pair(unit_exponents(n, i), dual_exp);
  {
    std::lock_guard lock(mutex_);
    if (auto it = commute_cache_.find(key); it != commute_cache_.end()) return it->second;
  }
  TermMap result;
  if (is_zero_exponents(dual_exp)) {
    add_to(result, PBWKey{dual_exp, group_->identity(), unit_exponents(n, i)}, Scalar(1));
  } else {
    std::size_t j = 0;
    while (dual_exp[j] == 0) ++j;
    Exponents rest = dual_exp;
    --rest[j];
    for (const auto& [k, c] : commute_single(i, rest)) {
      Exponents shifted = k.dual;
      ++shifted[j];
      add_to(result, PBWKey{std::move(shifted), k.group, k.vec}, c);
    }
    const Exponents none(n, 0);
    if (i == j) add_to(result, PBWKey{rest, group_->identity(), none}, Scalar(1));
    for (std::size_t r = 0; r < reflections_.size(); ++r) {
      const Scalar& kappa = commutator_coefficient(r, i, j);
      if (kappa.is_zero()) continue;
      const std::size_t g = reflections_[r].element;
      for (const auto& [e, c] : act_dual(g, rest)) add_to(result, PBWKey{e, g, none}, -(kappa * c));
    }
  }
  std::lock_guard lock(mutex_);
  return commute_cache_.emplace(std::move(key), std::move(result)).first->second;
}

// t^J . t*^I: peels the rightmost t_i of t^J (the factor adjacent to t*^I).
const TermMap& CherednikAlgebra::commute(const Exponents& vec_exp, const Exponents& dual_exp) const {
  const std::size_t n = rank();
  const unsigned deg = total_degree(vec_exp);
  if (deg == 1) {
    std::size_t i = 0;
    while (vec_exp[i] == 0) ++i;
    return commute_single(i, dual_exp);
  }
  auto key = std::make_pair(vec_exp, dual_exp);
  {
    std::lock_guard lock(mutex_);
    if (auto it = commute_cache_.find(key); it != commute_cache_.end()) return it->second;
  }
  TermMap result;
  if (deg == 0 || is_zero_exponents(dual_exp)) {
    add_to(result, PBWKey{dual_exp, group_->identity(), vec_exp}, Scalar(1));
  } else {
    std::size_t i = n;
    while (vec_exp[i - 1] == 0) --i;
    --i;
    Exponents rest = vec_exp;
    --rest[i];
    for (const auto& [k1, c1] : commute_single(i, dual_exp)) {
      // t^{rest} t*^{I''} h t^{J''}
      const Exponents& tail = k1.vec;
      const std::size_t h = k1.group;
      const std::size_t hinv = group_->inverse(h);
      for (const auto& [k2, c2] : commute(rest, k1.dual)) {
        const std::size_t g = group_->multiply(k2.group, h);
        for (const auto& [e, c3] : act_vec(hinv, k2.vec)) {
          add_to(result, PBWKey{k2.dual, g, add_exponents(e, tail)}, c1 * c2 * c3);
        }
      }
    }
  }
  std::lock_guard lock(mutex_);
  return commute_cache_.emplace(std::move(key), std::move(result)).first->second;
}

PBWElement CherednikAlgebra::multiply(const PBWElement& a, const PBWElement& b) const {
  check(a);
  check(b);
  PBWElement out(id_);
  TermMap terms;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Scalar cab = ca * cb;
      const TermMap& mid = commute(ka.vec, kb.dual);
      const std::size_t g2inv = group_->inverse(kb.group);
      for (const auto& [km, cm] : mid) {
        const Polynomial& left = act_dual(ka.group, km.dual);
        const Polynomial& right = act_vec(g2inv, km.vec);
        const std::size_t g = group_->multiply(group_->multiply(ka.group, km.group), kb.group);
        const Scalar base = cab * cm;
        for (const auto& [le, lc] : left) {
          const Exponents dual_exp = add_exponents(ka.dual, le);
          const Scalar lbase = base * lc;
          for (const auto& [re, rc] : right) {
            add_to(terms, PBWKey{dual_exp, g, add_exponents(re, kb.vec)}, lbase * rc);
          }
        }
      }
    }
  }
  for (const auto& [k, c] : terms) {
    if (c.bit_size() > options_.max_coefficient_bits) {
      throw CoefficientBlowup("coefficient exceeds " + std::to_string(options_.max_coefficient_bits) + " bits");
    }
    out.add_term(k, c);
  }
  return out;
}

PBWElement CherednikAlgebra::euler_central() const {
  PBWElement out = scalar(Scalar(static_cast<long>(rank())) / Scalar(2));
  for (std::size_t r = 0; r < reflections_.size(); ++r) {
    out -= euler_weights_[r] * group_element(reflections_[r].element);
  }
  return out;
}

PBWElement CherednikAlgebra::euler() const {
  PBWElement out = euler_central();
  for (std::size_t i = 0; i < rank(); ++i) {
    out.add_term(PBWKey{unit_exponents(rank(), i), group_->identity(), unit_exponents(rank(), i)}, Scalar(1));
  }
  return out;
}

PBWElement CherednikAlgebra::ad_euler(const PBWElement& x) const {
  const PBWElement e = euler();
  return multiply(e, x) - multiply(x, e);
}

std::map<long, PBWElement> CherednikAlgebra::grade_decompose(const PBWElement& x) const {
  check(x);
  std::map<long, PBWElement> out;
  for (const auto& [k, c] : x.terms()) {
    auto [it, inserted] = out.try_emplace(k.grade(), PBWElement(id_));
    it->second.add_term(k, c);
  }
  return out;
}

}  // namespace cherednik
