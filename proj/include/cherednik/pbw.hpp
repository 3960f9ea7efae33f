#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/group.hpp"
#include "cherednik/polynomial.hpp"
#include "cherednik/scalar.hpp"

namespace cherednik {

/// PBW basis monomial t*^I . g . t^J.
struct PBWKey {
  Exponents dual;     // I: exponents of t*_1..t*_n
  std::size_t group;  // g: element index
  Exponents vec;      // J: exponents of t_1..t_n

  /// |I| - |J|, the eigenvalue of ad(euler) on the monomial.
  long grade() const;
  bool operator==(const PBWKey&) const = default;
};

/// Deg-lex on I, then group index, then deg-lex on J.
struct PBWKeyLess {
  bool operator()(const PBWKey& a, const PBWKey& b) const;
};

using TermMap = std::map<PBWKey, Scalar, PBWKeyLess>;

/// Element of H_c(h, G) in the PBW basis; carries the id of its algebra.
class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(std::uint64_t algebra_id) : id_(algebra_id) {}

  std::uint64_t algebra_id() const { return id_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PBWKey& key) const;

  void add_term(const PBWKey& key, const Scalar& coeff);

  PBWElement& operator+=(const PBWElement& other);
  PBWElement& operator-=(const PBWElement& other);
  PBWElement operator-() const;
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Scalar& s, const PBWElement& a);

  /// Coefficient-map equality.
  bool operator==(const PBWElement& other) const { return terms_ == other.terms_; }

 private:
  void check_compatible(const PBWElement& other);

  std::uint64_t id_ = 0;
  TermMap terms_;
};

struct AlgebraOptions {
  /// Hard limit on the bit size of any coefficient produced by multiply().
  std::size_t max_coefficient_bits = 1u << 16;
};

/// The rational Cherednik algebra H_c(h, G) with t = 1, omega = 0.
///
/// Relations, for x in h*, v in h:
///   g x = (g.x) g,   g v = (g.v) g,
///   t_i t*_j = t*_j t_i + delta_ij - sum_{g in S} c(g) (t_i, alpha_g)(alpha_g^vee, t*_j) g.
/// Instances are immutable; straightening results are memoized behind a mutex.
class CherednikAlgebra {
 public:
  CherednikAlgebra(std::shared_ptr<const GroupAction> group, const ReflectionFunction& c,
                   AlgebraOptions options = {});
  /// Uses caller-supplied reflection data (e.g. rescaled alpha, alpha_vee pairs).
  CherednikAlgebra(std::shared_ptr<const GroupAction> group, std::vector<PseudoReflection> reflections,
                   const ReflectionFunction& c, AlgebraOptions options = {});
  CherednikAlgebra(const CherednikAlgebra&) = delete;
  CherednikAlgebra& operator=(const CherednikAlgebra&) = delete;

  std::uint64_t id() const { return id_; }
  std::size_t rank() const { return group_->dimension(); }
  const GroupAction& group() const { return *group_; }
  const std::shared_ptr<const GroupAction>& group_ptr() const { return group_; }
  const std::vector<PseudoReflection>& reflections() const { return reflections_; }
  const ReflectionFunction& c() const { return c_; }
  const AlgebraOptions& options() const { return options_; }

  PBWElement zero() const { return PBWElement(id_); }
  PBWElement scalar(const Scalar& s) const;
  PBWElement one() const { return scalar(Scalar(1)); }
  /// t*_i (0-based i).
  PBWElement dual(std::size_t i) const;
  /// t_i (0-based i).
  PBWElement vec(std::size_t i) const;
  PBWElement group_element(std::size_t g) const;
  PBWElement monomial(const PBWKey& key, const Scalar& coeff = Scalar(1)) const;

  /// Straightened product. Throws AlgebraMismatch, CoefficientBlowup.
  PBWElement multiply(const PBWElement& a, const PBWElement& b) const;

  /// sum t*_i t_i + dim/2 - sum_{g in S} 2c(g)/(1 - lambda_g) g.
  PBWElement euler() const;
  /// The group-algebra part dim/2 - sum 2c(g)/(1 - lambda_g) g.
  PBWElement euler_central() const;
  /// [euler, x].
  PBWElement ad_euler(const PBWElement& x) const;
  /// Components by |I| - |J|.
  std::map<long, PBWElement> grade_decompose(const PBWElement& x) const;

  /// t^J . t*^I in PBW form.
  const TermMap& commute(const Exponents& vec_exp, const Exponents& dual_exp) const;
  /// g . t*^I as a polynomial in t*.
  const Polynomial& act_dual(std::size_t g, const Exponents& dual_exp) const;
  /// g . t^J as a polynomial in t.
  const Polynomial& act_vec(std::size_t g, const Exponents& vec_exp) const;

  /// Coefficient c(g)(t_i, alpha_g)(alpha_g^vee, t*_j) of g in -[t_i, t*_j] + delta_ij.
  const Scalar& commutator_coefficient(std::size_t refl, std::size_t i, std::size_t j) const;
  /// 2c(g)/(1 - lambda_g) for each reflection, in reflections() order.
  const std::vector<Scalar>& euler_weights() const { return euler_weights_; }

 private:
  void init();
  const TermMap& commute_single(std::size_t i, const Exponents& dual_exp) const;
  void check(const PBWElement& a) const;

  std::uint64_t id_;
  std::shared_ptr<const GroupAction> group_;
  std::vector<PseudoReflection> reflections_;
  ReflectionFunction c_;
  AlgebraOptions options_;
  std::vector<Scalar> euler_weights_;
  std::vector<Scalar> kappa_;                   // [refl][i][j] flattened
  std::vector<std::vector<Polynomial>> dual_images_;  // g . t*_j
  std::vector<std::vector<Polynomial>> vec_images_;   // g . t_i

  mutable std::mutex mutex_;
  mutable std::map<std::pair<Exponents, Exponents>, TermMap> commute_cache_;
  mutable std::map<std::pair<std::size_t, Exponents>, Polynomial> dual_cache_;
  mutable std::map<std::pair<std::size_t, Exponents>, Polynomial> vec_cache_;
};

}  // namespace cherednik
