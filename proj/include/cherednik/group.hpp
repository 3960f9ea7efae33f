#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/scalar.hpp"

namespace cherednik {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite group G acting linearly on h = K^n, given as integral matrices.
///
/// Element 0 is the identity; the remaining elements are numbered in the BFS
/// order of right multiplication by the generators. Matrices act on column
/// vectors in the basis t_1..t_n of h.
class GroupAction {
 public:
  /// Closure of the generators. Throws NonIntegralEntry, CapExceeded, ValidationError.
  static GroupAction enumerate(const std::vector<Matrix>& generators, std::size_t cap = kDefaultGroupCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return dim_; }
  /// Coefficient field index of the matrix entries.
  unsigned field() const { return field_; }
  std::size_t identity() const { return 0; }

  const Matrix& element(std::size_t g) const { return elements_.at(g); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  /// Index of a matrix in the group; throws Error if absent.
  std::size_t index_of(const Matrix& m) const;

  const std::vector<std::size_t>& generators() const { return generators_; }
  /// Shortest word in the generators for each element (as generator positions).
  const std::vector<std::size_t>& word_parent() const { return parent_; }
  const std::vector<std::size_t>& word_letter() const { return letter_; }

  /// Conjugacy classes, each sorted; classes ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t g) const { return class_of_[g]; }

 private:
  std::size_t dim_ = 0;
  unsigned field_ = 1;
  std::vector<Matrix> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> letter_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Eigen-data of a pseudo-reflection g.
///
/// `lambda` is the non-trivial eigenvalue of g on h* (so g.alpha = lambda alpha in h*
/// and g alpha_vee = lambda^{-1} alpha_vee in h); this is the convention under which
/// sum t*_i t_i + dim/2 - sum 2c(g)/(1-lambda_g) g is the grading element.
struct PseudoReflection {
  std::size_t element = 0;
  Scalar lambda;
  /// Covector alpha_g in the dual basis t*_1..t*_n; first nonzero coordinate is 1.
  std::vector<Scalar> alpha;
  /// Vector alpha_g^vee in the basis t_1..t_n; (alpha_vee, alpha) = 2.
  std::vector<Scalar> alpha_vee;
};

/// Every g with rank(g - Id) = 1, in element order.
std::vector<PseudoReflection> find_reflections(const GroupAction& group);

/// Conjugacy classes of G that consist of pseudo-reflections, as class indices.
std::vector<std::size_t> reflection_classes(const GroupAction& group);

/// Class function on reflections: one value per reflection class.
class ReflectionFunction {
 public:
  ReflectionFunction() = default;
  /// values[k] is c on the k-th entry of reflection_classes(group).
  ReflectionFunction(const GroupAction& group, std::vector<Scalar> values);
  static ReflectionFunction constant(const GroupAction& group, const Scalar& value);

  const std::vector<Scalar>& values() const { return values_; }
  /// c(g) for a reflection element g (zero for non-reflections).
  const Scalar& operator()(std::size_t g) const { return per_element_.at(g); }

 private:
  std::vector<Scalar> values_;
  std::vector<Scalar> per_element_;
};

/// A validated irreducible representation, with rho(g) for every element.
struct Irrep {
  std::string label;
  std::size_t dim = 0;
  std::vector<Matrix> rho;
  std::vector<Scalar> character;
};

/// Checks rho(gh) = rho(g) rho(h) for all pairs and <chi, chi> = 1.
Irrep validate_irrep(const std::string& label, std::vector<Matrix> rho, const GroupAction& group);

/// Extends generator images along the BFS words of the group, then validates.
Irrep irrep_from_generators(const std::string& label, const std::vector<Matrix>& generator_images,
                            const GroupAction& group);

/// (1/|G|) sum_g chi(g) psi(g^{-1}).
Scalar character_inner(const std::vector<Scalar>& chi, const std::vector<Scalar>& psi, const GroupAction& group);

/// The isotypic projector (dim W/|G|) sum_g chi_W(g^{-1}) rho_V(g).
Matrix isotypic_projector(const Irrep& irrep, const GroupAction& group, const std::vector<Matrix>& module);

/// Reduced echelon basis of the W-isotypic component of the G-module `module`.
std::vector<Vec> isotypic_project(const Irrep& irrep, const GroupAction& group, const std::vector<Matrix>& module);

}  // namespace cherednik
