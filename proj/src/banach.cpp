#include "cherednik/banach.hpp"

#include <algorithm>

#include "cherednik/element_syntax.hpp"
#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

Scalar prime_power(const PadicContext& ctx, unsigned e) {
  return Scalar(mpq_class(mpz_class(ctx.prime()))).pow(static_cast<long>(e));
}

// Minimum of valuations; the result is exact when an exact entry attains it.
struct MinTracker {
  Valuation best = Valuation::infinity();
  bool exact_at_best = true;

  void add(const Valuation& v) {
    if (v.infinite) return;
    if (best.infinite || v.value < best.value) {
      best = v;
      exact_at_best = v.exact;
    } else if (v.value == best.value && v.exact) {
      exact_at_best = true;
    }
  }
  Valuation result() const {
    if (best.infinite) return best;
    return Valuation::finite(best.value, exact_at_best);
  }
};

long binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

}  // namespace

long rho_c(const CherednikAlgebra& algebra, const PadicContext& ctx) {
  long worst = 0;
  for (const Scalar& w : algebra.euler_weights()) {
    if (w.is_zero()) continue;
    const Valuation v = ctx.val(w);
    if (!v.infinite) worst = std::min(worst, v.value);
  }
  return -worst;
}

Valuation weighted_valuation(const PBWKey& key, const Scalar& coeff, const LevelParams& params) {
  const Valuation v = params.ctx.val(coeff);
  if (v.infinite) return v;
  const long shift = static_cast<long>(params.m) * total_degree(key.dual) + static_cast<long>(params.r) * total_degree(key.vec);
  return Valuation::finite(v.value - shift, v.exact);
}

namespace {

Valuation element_weight(const PBWElement& x, const LevelParams& params) {
  MinTracker t;
  for (const auto& [k, c] : x.terms()) t.add(weighted_valuation(k, c, params));
  return t.result();
}

}  // namespace

LatticeReport lattice_check(const CherednikAlgebra& algebra, const LevelParams& params) {
  if (params.ctx.field() != algebra.group().field() && algebra.group().field() != 1) {
    throw FieldMismatch("p-adic context does not match the coefficient field");
  }
  std::vector<std::pair<std::string, PBWElement>> gens;
  const Scalar pm = prime_power(params.ctx, params.m), pr = prime_power(params.ctx, params.r);
  const std::string m = std::to_string(params.m), r = std::to_string(params.r);
  for (std::size_t j = 0; j < algebra.rank(); ++j) {
    gens.emplace_back("p^" + m + "*x" + std::to_string(j + 1), pm * algebra.dual(j));
  }
  for (std::size_t i = 0; i < algebra.rank(); ++i) {
    gens.emplace_back("p^" + r + "*y" + std::to_string(i + 1), pr * algebra.vec(i));
  }
  for (std::size_t g = 0; g < algebra.group().order(); ++g) {
    gens.emplace_back("g" + std::to_string(g), algebra.group_element(g));
  }
  LatticeReport report;
  auto record = [&](const std::string& expr, const PBWElement& x) {
    ++report.checked;
    const Valuation v = element_weight(x, params);
    if (!v.infinite && v.value < 0) {
      report.pass = false;
      report.violations.push_back(LatticeDefect{expr, v.value});
    }
  };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const PBWElement ab = algebra.multiply(gens[a].second, gens[b].second);
      record(gens[a].first + " * " + gens[b].first, ab);
      if (a < b) {
        record("[" + gens[a].first + ", " + gens[b].first + "]", ab - algebra.multiply(gens[b].second, gens[a].second));
      }
    }
  }
  return report;
}

unsigned choose_r(unsigned m, const CherednikAlgebra& algebra, const PadicContext& ctx, unsigned previous) {
  const long rho = rho_c(algebra, ctx);
  unsigned r = std::max<unsigned>(previous + 1, m + static_cast<unsigned>(rho));
  const unsigned limit = r + 64;
  for (; r <= limit; ++r) {
    if (lattice_check(algebra, LevelParams{m, r, ctx}).pass) return r;
  }
  throw Error("no lattice-stable r found at level " + std::to_string(m));
}

std::vector<LevelParams> level_sequence(const CherednikAlgebra& algebra, const PadicContext& ctx, unsigned max_level) {
  std::vector<LevelParams> out;
  unsigned previous = 0;
  for (unsigned m = 0; m <= max_level; ++m) {
    previous = choose_r(m, algebra, ctx, previous);
    out.push_back(LevelParams{m, previous, ctx});
  }
  return out;
}

BanachElement make_banach(const PBWElement& x, const LevelParams& params, long tail) {
  BanachElement out{PBWElement(x.algebra_id()), params.m, tail};
  for (const auto& [k, c] : x.terms()) {
    const Valuation w = weighted_valuation(k, c, params);
    if (!w.infinite && w.value < tail) out.element.add_term(k, c);
  }
  return out;
}

Valuation min_weight(const BanachElement& x, const LevelParams& params) { return element_weight(x.element, params); }

Valuation gauss_norm(const BanachElement& x, const LevelParams& params) {
  const Valuation w = min_weight(x, params);
  if (w.infinite || w.value >= x.tail) {
    throw TailDominated("norm exponent lies in [" + std::to_string(x.tail) + ", infinity)");
  }
  return w;
}

BanachElement banach_multiply(const CherednikAlgebra& algebra, const BanachElement& a, const BanachElement& b,
                              const LevelParams& params) {
  if (a.level != params.m || b.level != params.m) throw ValidationError("Banach elements from different levels");
  auto capped = [](const BanachElement& x, const LevelParams& p) {
    const Valuation w = min_weight(x, p);
    return w.infinite ? x.tail : std::min(w.value, x.tail);
  };
  const long tail = std::min(a.tail + capped(b, params), b.tail + capped(a, params));
  return make_banach(algebra.multiply(a.element, b.element), params, tail);
}

std::map<long, BanachElement> weight_decompose_banach(const CherednikAlgebra& algebra, const BanachElement& x) {
  std::map<long, BanachElement> out;
  for (auto& [deg, comp] : algebra.grade_decompose(x.element)) out.emplace(deg, BanachElement{comp, x.level, x.tail});
  return out;
}

BanachElement transition(const BanachElement& x, const LevelParams& target) {
  if (x.level < target.m) throw ValidationError("transition maps go from higher to lower levels");
  return make_banach(x.element, target, x.tail);
}

CoadmissibleReport coadmissible_check(const std::vector<BanachElement>& family, const std::vector<LevelParams>& levels) {
  if (family.size() != levels.size()) throw ValidationError("family and level list differ in length");
  for (std::size_t m = 0; m < family.size(); ++m) {
    if (family[m].level != levels[m].m) throw ValidationError("family element " + std::to_string(m) + " has the wrong level");
  }
  CoadmissibleReport report;
  for (std::size_t m = 0; m + 1 < family.size(); ++m) {
    const BanachElement down = transition(family[m + 1], levels[m]);
    const long tail = std::min(down.tail, family[m].tail);
    const TermMap lhs = make_banach(down.element, levels[m], tail).element.terms();
    const TermMap rhs = make_banach(family[m].element, levels[m], tail).element.terms();
    if (lhs == rhs) continue;
    report.pass = false;
    report.failing_level = static_cast<unsigned>(m + 1);
    for (const auto& [k, c] : lhs) {
      auto it = rhs.find(k);
      if (it == rhs.end() || !(it->second == c)) {
        report.detail = "coefficient of " + format_key(k) + " differs from level " + std::to_string(m);
        return report;
      }
    }
    for (const auto& [k, c] : rhs) {
      if (!lhs.count(k)) {
        report.detail = "term " + format_key(k) + " missing above level " + std::to_string(m);
        return report;
      }
    }
    return report;
  }
  return report;
}

AnalyticVermaSlice analytic_verma_slice(const CherednikAlgebra& algebra, const Irrep& irrep,
                                        const LevelParams& params, unsigned cutoff) {
  const LatticeReport lattice = lattice_check(algebra, params);
  if (!lattice.pass) {
    throw LatticeViolation(lattice.violations.front().expression + " has norm exponent " +
                           std::to_string(lattice.violations.front().exponent));
  }
  AnalyticVermaSlice out{VermaSlice(algebra, irrep, cutoff), params, {}, {}, false};
  const VermaSlice& slice = out.slice;
  const long m = params.m;
  for (unsigned n = 0; n <= cutoff; ++n) out.component_exponent.push_back(-m * static_cast<long>(n));

  // Operator T : degree n -> n' has entry exponents v(a) + m (n - n') on the unit lattices.
  auto scan = [&](const std::string& name, auto&& apply, long scalar_val, long degree_shift, unsigned from, unsigned to) {
    MinTracker t;
    for (unsigned n = from; n <= to; ++n) {
      for (std::size_t k = 0; k < slice.verma_dim(n); ++k) {
        Vec e(slice.verma_dim(n));
        e[k] = Scalar(1);
        for (const Scalar& a : apply(n, e)) {
          if (a.is_zero()) continue;
          const Valuation v = params.ctx.val(a);
          t.add(Valuation::finite(v.value + scalar_val - m * degree_shift, v.exact));
        }
      }
    }
    out.generator_exponent[name] = t.result();
  };
  const std::size_t rank = algebra.rank();
  for (std::size_t j = 0; j < rank; ++j) {
    if (cutoff == 0) {
      out.generator_exponent["p^" + std::to_string(params.m) + "*x" + std::to_string(j + 1)] = Valuation::infinity();
      continue;
    }
    scan("p^" + std::to_string(params.m) + "*x" + std::to_string(j + 1),
         [&](unsigned n, const Vec& e) { return slice.act_dual(j, n, e); }, m, 1, 0, cutoff - 1);
  }
  for (std::size_t i = 0; i < rank; ++i) {
    scan("p^" + std::to_string(params.r) + "*y" + std::to_string(i + 1),
         [&](unsigned n, const Vec& e) { return slice.act_vec(i, n, e); }, static_cast<long>(params.r), -1, 1, cutoff);
  }
  for (std::size_t g = 0; g < algebra.group().order(); ++g) {
    scan("g" + std::to_string(g), [&](unsigned n, const Vec& e) { return slice.act_group(g, n, e); }, 0, 0, 0, cutoff);
  }
  for (const auto& [name, v] : out.generator_exponent) {
    if (!v.infinite && v.value < 0) {
      throw UnboundedGenerator(name + " has operator-norm exponent " + std::to_string(v.value));
    }
  }

  bool recovered = true;
  try {
    const long d = static_cast<long>(rank);
    for (const WeightSpace& ws : weight_spaces(slice)) {
      const long expected = binomial(static_cast<long>(ws.degree) + d - 1, d - 1) * static_cast<long>(irrep.dim);
      if (static_cast<long>(ws.dim) != expected) recovered = false;
    }
  } catch (const Error&) {
    recovered = false;
  }
  out.ws_recovered = recovered;
  return out;
}

}  // namespace cherednik
