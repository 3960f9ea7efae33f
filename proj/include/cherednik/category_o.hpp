#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/group.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/pbw.hpp"

namespace cherednik {

/// Vector in a slice, one dense coordinate block per degree.
using GradedVector = std::map<unsigned, Vec>;

/// Scalar by which the central part of the Euler element acts on W.
/// Throws NotScalarAction when rho_W of that element is not a multiple of the identity.
Scalar c_scalar(const Irrep& irrep, const CherednikAlgebra& algebra);

/// Degree-truncated Delta(W) = K[t*] (x) W, optionally modulo a graded submodule S.
///
/// Degree-n coordinates are indexed by (monomial, w) -> mono * dim W + w, monomials
/// of degree n in deg-lex order. Quotient vectors are stored as normal forms modulo S.
class VermaSlice {
 public:
  VermaSlice(const CherednikAlgebra& algebra, Irrep irrep, unsigned cutoff);

  const CherednikAlgebra& algebra() const { return *algebra_; }
  const Irrep& irrep() const { return irrep_; }
  unsigned cutoff() const { return cutoff_; }
  const Scalar& c_w() const { return c_w_; }

  std::size_t verma_dim(unsigned n) const { return monomials_.at(n).size() * irrep_.dim; }
  /// Dimension after quotienting.
  std::size_t dim(unsigned n) const { return verma_dim(n) - killed_.at(n).dim(); }
  const std::vector<Exponents>& monomials(unsigned n) const { return monomials_.at(n); }
  std::size_t index(const Exponents& mono, std::size_t w) const;
  /// Human-readable label of a basis coordinate, e.g. "x1^2*w2".
  std::string basis_label(unsigned n, std::size_t idx) const;

  bool is_quotient() const { return !history_.empty(); }
  const Subspace& killed(unsigned n) const { return killed_.at(n); }
  /// Verma indices whose unit vectors span a complement of the killed subspace.
  std::vector<std::size_t> quotient_basis(unsigned n) const { return killed_.at(n).complement(); }
  Vec reduce(unsigned n, Vec v) const { return killed_.at(n).reduce(std::move(v)); }
  /// (degree, number of generators) for each kill() call.
  const std::vector<std::pair<unsigned, std::size_t>>& quotient_history() const { return history_; }

  /// t*_i : degree n -> n+1. Throws CutoffExceeded at n = cutoff.
  Vec act_dual(std::size_t i, unsigned n, const Vec& v) const;
  /// t_i : degree n -> n-1 (empty vector at n = 0).
  Vec act_vec(std::size_t i, unsigned n, const Vec& v) const;
  /// g : degree n -> n.
  Vec act_group(std::size_t g, unsigned n, const Vec& v) const;

  /// Quotients by the submodule generated by the given degree-n vectors, which
  /// must be singular modulo the current submodule. Returns the dimension killed.
  std::size_t kill(unsigned n, const std::vector<Vec>& vectors);

 private:
  struct LowerTerm {
    std::size_t mono;  // index in degree n-1
    std::size_t group;
    Scalar coeff;
  };

  const CherednikAlgebra* algebra_;
  Irrep irrep_;
  unsigned cutoff_;
  Scalar c_w_;
  std::vector<std::vector<Exponents>> monomials_;
  std::vector<std::map<Exponents, std::size_t, DegLex>> mono_index_;
  // lowering_[n][i][mono]: t_i . t*^mono with B^{>0} terms dropped.
  std::vector<std::vector<std::vector<std::vector<LowerTerm>>>> lowering_;
  std::vector<Subspace> killed_;
  std::vector<std::pair<unsigned, std::size_t>> history_;
};

/// a . v computed by straightening, with B^{>0} acting by zero on W.
/// Throws CutoffExceeded when a result would leave the truncation.
GradedVector verma_action(const VermaSlice& slice, const PBWElement& a, const GradedVector& v);

/// Dunkl operator of y = sum y_i t_i on a degree-n vector of a genuine Verma slice:
///   d_y f (x) w - sum_g 2c(g)/(1 - lambda_g) (y, alpha_g) ((f - g.f)/alpha_g) (x) rho(g) w.
/// Throws ValidationError on quotient slices.
Vec dunkl_action(const VermaSlice& slice, const Vec& y, unsigned n, const Vec& u);

struct IsotypicPart {
  std::size_t irrep = 0;
  std::string label;
  std::size_t multiplicity = 0;
  std::vector<Vec> basis;
};

struct SingularSpace {
  unsigned degree = 0;
  /// Reduced echelon basis of the joint kernel of t_1..t_n (Verma coordinates).
  std::vector<Vec> basis;
  /// Nonzero isotypic components in irrep order.
  std::vector<IsotypicPart> parts;
};

SingularSpace singular_vectors(const VermaSlice& slice, unsigned n, const std::vector<Irrep>& irreps);

/// Multiplicities of each irrep in each degree of a slice.
struct GradedCharacter {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  /// mult[n][k]: multiplicity of irreps[k] in degree n.
  std::vector<std::vector<long>> mult;

  std::size_t total_dim(unsigned n) const;
  bool operator==(const GradedCharacter&) const = default;
};

GradedCharacter graded_character(const VermaSlice& slice, const std::vector<Irrep>& irreps);

struct WeightSpace {
  Scalar weight;
  unsigned degree = 0;
  std::size_t dim = 0;
};

/// Euler eigenvalues per degree, verified by computing the action of the Euler element.
/// Throws Error if it does not act by c(W) + n on degree n.
std::vector<WeightSpace> weight_spaces(const VermaSlice& slice);

struct SimpleQuotient {
  VermaSlice slice;
  GradedCharacter character;
  /// No singular vectors in degrees 1..cutoff at termination.
  bool stable_under_cutoff = false;
  unsigned passes = 0;
};

/// Truncated L(W): repeatedly quotients Delta(W) by the submodules generated by
/// positive-degree singular vectors until a full pass finds none.
SimpleQuotient simple_quotient_slice(const CherednikAlgebra& algebra, const std::vector<Irrep>& irreps,
                                     std::size_t w, unsigned cutoff);

/// Multiplicity of E in the singular vectors of all degrees <= cutoff.
std::size_t hom_dim(std::size_t e, const VermaSlice& slice, const std::vector<Irrep>& irreps);

/// Edges (W, E) with c(E) - c(W) a positive integer, sorted.
std::vector<std::pair<std::size_t, std::size_t>> highest_weight_order(const std::vector<Irrep>& irreps,
                                                                      const CherednikAlgebra& algebra);

/// Connected components of the linkage c(E) - c(W) in Z \ {0}; members ascending,
/// blocks ordered by their smallest member.
std::vector<std::vector<std::size_t>> blocks(const std::vector<Irrep>& irreps, const CherednikAlgebra& algebra);

/// [Delta(W) : L(E)] for every E, peeled off the graded character degree by degree.
/// `simples[k]` must be the character of L(irreps[k]) to at least the same cutoff.
/// Throws InconsistentTruncation when the peel does not close.
std::vector<long> decompose_verma_character(std::size_t w, const std::vector<Irrep>& irreps,
                                            const CherednikAlgebra& algebra, const std::vector<GradedCharacter>& simples,
                                            unsigned cutoff);

/// Rows W, columns E; computes all simple characters first.
std::vector<std::vector<long>> decomposition_matrix(const std::vector<Irrep>& irreps, const CherednikAlgebra& algebra,
                                                    unsigned cutoff);

}  // namespace cherednik
