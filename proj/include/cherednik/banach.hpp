#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/category_o.hpp"
#include "cherednik/padic.hpp"
#include "cherednik/pbw.hpp"

namespace cherednik {

/// Level m of the Frechet-Stein tower: t* is weighted by p^m and t by p^r.
/// The uniformizer is p (unramified coefficient fields only).
struct LevelParams {
  unsigned m = 0;
  unsigned r = 1;
  PadicContext ctx;
};

/// max(0, ceil(-min_g v_p(2c(g)/(1 - lambda_g)))); 0 when c vanishes.
long rho_c(const CherednikAlgebra& algebra, const PadicContext& ctx);

/// A weighted product or commutator of lattice generators with negative norm exponent.
struct LatticeDefect {
  std::string expression;
  long exponent = 0;
};

struct LatticeReport {
  bool pass = true;
  /// Number of products and commutators examined.
  std::size_t checked = 0;
  std::vector<LatticeDefect> violations;
};

/// Checks that all products and commutators of the generators p^m t*_j, p^r t_i and
/// g in G have Gauss-norm exponent >= 0 at the given level.
LatticeReport lattice_check(const CherednikAlgebra& algebra, const LevelParams& params);

/// r(m) = max(previous + 1, m + rho_c), incremented until lattice_check passes.
/// `previous` is r(m-1), or 0 for m = 0.
unsigned choose_r(unsigned m, const CherednikAlgebra& algebra, const PadicContext& ctx, unsigned previous);

/// Levels 0..max_level with r chosen by choose_r.
std::vector<LevelParams> level_sequence(const CherednikAlgebra& algebra, const PadicContext& ctx, unsigned max_level);

/// v_p(a) - m|I| - r|J| for the term a * t*^I g t^J.
Valuation weighted_valuation(const PBWKey& key, const Scalar& coeff, const LevelParams& params);

/// A PBW element of the level-m completion, truncated: every omitted term has
/// weighted valuation >= tail.
struct BanachElement {
  PBWElement element;
  unsigned level = 0;
  long tail = static_cast<long>(kDefaultPrecision);
};

/// Drops terms whose weighted valuation reaches the tail.
BanachElement make_banach(const PBWElement& x, const LevelParams& params, long tail);
inline BanachElement make_banach(const PBWElement& x, const LevelParams& params) {
  return make_banach(x, params, static_cast<long>(params.ctx.precision()));
}

/// Minimum weighted valuation over stored terms (infinite for zero). Ignores the tail.
Valuation min_weight(const BanachElement& x, const LevelParams& params);

/// Gauss-norm exponent: the norm is |p|^exponent. Throws TailDominated when the
/// minimum over stored terms is not below the tail.
Valuation gauss_norm(const BanachElement& x, const LevelParams& params);

/// Product with tail min(tail_a + w(b), tail_b + w(a)), truncated.
BanachElement banach_multiply(const CherednikAlgebra& algebra, const BanachElement& a, const BanachElement& b,
                              const LevelParams& params);

/// Components by |I| - |J|, each with the tail of x.
std::map<long, BanachElement> weight_decompose_banach(const CherednikAlgebra& algebra, const BanachElement& x);

/// Restriction from level m+1 to level m: same coefficients and tail, re-weighted and
/// truncated at level m.
BanachElement transition(const BanachElement& x, const LevelParams& target);

struct CoadmissibleReport {
  bool pass = true;
  /// First level whose element is incompatible with the level below.
  unsigned failing_level = 0;
  std::string detail;
};

/// Checks transition(x_{m+1}) = x_m for every m, up to the smaller tail.
CoadmissibleReport coadmissible_check(const std::vector<BanachElement>& family, const std::vector<LevelParams>& levels);

/// A Verma slice with level-m lattice norms: degree-n monomials are scaled by p^{m n}.
struct AnalyticVermaSlice {
  VermaSlice slice;
  LevelParams params;
  /// Norm exponent of the algebraic basis monomials of each degree: -m n.
  std::vector<long> component_exponent;
  /// Operator-norm exponents on the unit lattice, keyed "p^m*x1", "p^r*y2", "g3";
  /// infinite for operators that vanish on the slice.
  std::map<std::string, Valuation> generator_exponent;
  /// Weight vectors of the normed slice are exactly the algebraic graded pieces.
  bool ws_recovered = false;
};

/// Throws LatticeViolation if lattice_check fails and UnboundedGenerator if any
/// generator has negative operator-norm exponent.
AnalyticVermaSlice analytic_verma_slice(const CherednikAlgebra& algebra, const Irrep& irrep,
                                        const LevelParams& params, unsigned cutoff);

}  // namespace cherednik
