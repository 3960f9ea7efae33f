#include <random>

#include "cherednik/banach.hpp"
#include "cherednik/builtin.hpp"
#include "cherednik/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cherednik;
using cherednik::testing::random_element;

namespace {

struct Setup {
  GroupData data;
  std::unique_ptr<CherednikAlgebra> algebra;

  Setup(GroupData d, const Scalar& c) : data(std::move(d)) {
    algebra = std::make_unique<CherednikAlgebra>(data.group, ReflectionFunction::constant(*data.group, c));
  }
};

long exponent(const BanachElement& x, const LevelParams& p) { return gauss_norm(x, p).value; }

// Random element with p-power scaled coefficients so that norms vary.
PBWElement random_scaled(std::mt19937_64& rng, const CherednikAlgebra& H, unsigned long p, unsigned degree) {
  PBWElement x = random_element(rng, H, degree);
  PBWElement out = H.zero();
  for (const auto& [k, c] : x.terms()) {
    const int e = static_cast<int>(rng() % 5) - 1;
    Scalar s = c;
    for (int i = 0; i < std::abs(e); ++i) s = e > 0 ? s * Scalar(static_cast<long>(p)) : s / Scalar(static_cast<long>(p));
    out.add_term(k, s);
  }
  return out;
}

}  // namespace

TEST_CASE("gauss_norm examples") {
  Setup z2(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *z2.algebra;
  const PadicContext ctx(5);
  const LevelParams l1{1, 2, ctx};
  CHECK(exponent(make_banach(H.one(), l1), l1) == 0);
  CHECK(exponent(make_banach(H.dual(0), l1), l1) == -1);
  CHECK(exponent(make_banach(Scalar(5) * H.dual(0), l1), l1) == 0);
  CHECK(exponent(make_banach(H.vec(0), l1), l1) == -2);
  CHECK_THROWS_AS(gauss_norm(make_banach(H.zero(), l1), l1), TailDominated);
  // A term at or beyond the tail is dropped and cannot determine the norm.
  const BanachElement tiny = make_banach(Scalar(625) * H.one(), l1, 3);
  CHECK(tiny.element.is_zero());
  CHECK_THROWS_AS(gauss_norm(tiny, l1), TailDominated);
  const BanachElement kept = make_banach(Scalar(25) * H.one() + Scalar(625) * H.dual(0), l1, 3);
  CHECK(kept.element.size() == 1);
  CHECK(exponent(kept, l1) == 2);
}

TEST_CASE("rho_c and choose_r") {
  const PadicContext ctx(5);
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  CHECK(rho_c(*half.algebra, ctx) == 0);
  const auto seq = level_sequence(*half.algebra, ctx, 4);
  for (unsigned m = 0; m <= 4; ++m) CHECK(seq[m].r == m + 1);

  Setup inv_p(cyclic_group(2), Scalar::rational(1, 5));
  CHECK(rho_c(*inv_p.algebra, ctx) == 1);
  Setup inv_p2(cyclic_group(2), Scalar::rational(1, 25));
  CHECK(rho_c(*inv_p2.algebra, ctx) == 2);
  const auto seq2 = level_sequence(*inv_p2.algebra, ctx, 3);
  for (unsigned m = 0; m <= 3; ++m) CHECK(seq2[m].r == m + 2);
  for (unsigned m = 1; m <= 3; ++m) CHECK(seq2[m].r > seq2[m - 1].r);

  Setup zero(symmetric_group_s3(), Scalar(0));
  CHECK(rho_c(*zero.algebra, ctx) == 0);

  // Cyclotomic parameters: Z/3 over Q(zeta_3) with p = 7.
  const PadicContext ctx7(7, 32, 3);
  Setup z3(cyclic_group(3), Scalar::rational(1, 7));
  CHECK(rho_c(*z3.algebra, ctx7) >= 1);
  for (const auto& l : level_sequence(*z3.algebra, ctx7, 2)) CHECK(lattice_check(*z3.algebra, l).pass);
}

TEST_CASE("lattice_check examples") {
  const PadicContext ctx(5);
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *half.algebra;
  const LevelParams l0{0, 1, ctx};
  CHECK(lattice_check(H, l0).pass);
  const PBWElement comm = H.multiply(Scalar(5) * H.vec(0), H.dual(0)) - H.multiply(H.dual(0), Scalar(5) * H.vec(0));
  CHECK(comm == Scalar(5) * (H.one() - H.group_element(1)));
  CHECK(exponent(make_banach(comm, l0), l0) >= 0);

  Setup zero(symmetric_group_s3(), Scalar(0));
  for (unsigned m = 0; m <= 2; ++m) CHECK(lattice_check(*zero.algebra, LevelParams{m, m, ctx}).pass);

  Setup inv_p(cyclic_group(2), Scalar::rational(1, 5));
  const LatticeReport bad = lattice_check(*inv_p.algebra, LevelParams{0, 0, ctx});
  CHECK(!bad.pass);
  REQUIRE(!bad.violations.empty());
  CHECK(bad.violations.front().exponent == -1);
  CHECK(bad.violations.front().expression.find("y1") != std::string::npos);
  CHECK(lattice_check(*inv_p.algebra, LevelParams{0, 1, ctx}).pass);
}

TEST_CASE("submultiplicativity on random pairs") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  Setup s3(symmetric_group_s3(), Scalar::rational(1, 5));
  const PadicContext ctx(5);
  std::mt19937_64 rng(8);
  for (const Setup* s : {&half, &s3}) {
    const auto& H = *s->algebra;
    for (const auto& l : level_sequence(H, ctx, 2)) {
      for (int k = 0; k < 40; ++k) {
        const BanachElement a = make_banach(random_scaled(rng, H, 5, 3), l);
        const BanachElement b = make_banach(random_scaled(rng, H, 5, 3), l);
        const BanachElement ab = banach_multiply(H, a, b, l);
        if (ab.element.is_zero()) continue;
        CHECK(min_weight(ab, l).value >= exponent(a, l) + exponent(b, l));
      }
    }
  }
}

TEST_CASE("triangular decomposition isometry") {
  Setup s3(symmetric_group_s3(), Scalar::rational(1, 3));
  const auto& H = *s3.algebra;
  const PadicContext ctx(5);
  std::mt19937_64 rng(21);
  for (const auto& l : level_sequence(H, ctx, 2)) {
    for (int k = 0; k < 30; ++k) {
      PBWElement a = H.zero(), b = H.zero();
      for (int t = 0; t < 3; ++t) {
        a.add_term(PBWKey{cherednik::testing::random_exponents(rng, 2, rng() % 4), 0, {0, 0}},
                   Scalar(5).pow(static_cast<long>(rng() % 3)) * Scalar(static_cast<long>(rng() % 4) + 1));
        b.add_term(PBWKey{{0, 0}, 0, cherednik::testing::random_exponents(rng, 2, rng() % 4)},
                   Scalar(5).pow(static_cast<long>(rng() % 3)) * Scalar(static_cast<long>(rng() % 4) + 1));
      }
      const PBWElement x = H.multiply(H.multiply(a, H.group_element(rng() % 6)), b);
      CHECK(exponent(make_banach(x, l), l) == exponent(make_banach(a, l), l) + exponent(make_banach(b, l), l));
    }
  }
}

TEST_CASE("weight decomposition") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *half.algebra;
  const PadicContext ctx(5);
  const LevelParams l{1, 2, ctx};
  auto d = weight_decompose_banach(H, make_banach(H.dual(0) + H.vec(0), l));
  REQUIRE(d.size() == 2);
  CHECK(d.at(1).element == H.dual(0));
  CHECK(d.at(-1).element == H.vec(0));

  const PBWElement xs = H.multiply(H.dual(0), H.group_element(1));
  const PBWElement xt = H.multiply(H.dual(0), H.vec(0));
  d = weight_decompose_banach(H, make_banach(xs + xt, l));
  REQUIRE(d.size() == 2);
  CHECK(d.at(1).element == xs);
  CHECK(d.at(0).element == xt);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const BanachElement x = make_banach(random_scaled(rng, H, 5, 4), l);
    if (x.element.is_zero()) continue;
    const auto comps = weight_decompose_banach(H, x);
    PBWElement sum = H.zero();
    for (const auto& [deg, c] : comps) {
      CHECK(exponent(c, l) >= exponent(x, l));
      CHECK(c.tail == x.tail);
      CHECK(H.ad_euler(c.element) == Scalar(deg) * c.element);
      sum += c.element;
      // Homogeneous input decomposes to itself.
      const auto again = weight_decompose_banach(H, c);
      CHECK(again.size() == 1);
      CHECK(again.at(deg).element == c.element);
    }
    CHECK(sum == x.element);
  }
}

TEST_CASE("ad_euler scales norms of homogeneous elements by v_p of the degree") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *half.algebra;
  const PadicContext ctx(5);
  std::mt19937_64 rng(77);
  for (const auto& l : level_sequence(H, ctx, 2)) {
    for (int k = 0; k < 30; ++k) {
      const BanachElement x = make_banach(random_scaled(rng, H, 5, 6), l, 1000);
      for (const auto& [deg, c] : weight_decompose_banach(H, x)) {
        const BanachElement ad = make_banach(H.ad_euler(c.element), l, 1000);
        if (deg == 0) {
          CHECK(ad.element.is_zero());
          continue;
        }
        CHECK(exponent(ad, l) == exponent(c, l) + ctx.valuation(mpz_class(std::abs(deg))));
      }
    }
  }
}

TEST_CASE("transition maps") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *half.algebra;
  const PadicContext ctx(5);
  const auto levels = level_sequence(H, ctx, 3);
  for (unsigned m = 0; m < 3; ++m) {
    const BanachElement up = make_banach(H.dual(0), levels[m + 1]);
    const BanachElement down = transition(up, levels[m]);
    CHECK(exponent(up, levels[m + 1]) == -static_cast<long>(m) - 1);
    CHECK(exponent(down, levels[m]) == -static_cast<long>(m));
    CHECK(down.element == up.element);
    const BanachElement k = make_banach(Scalar::rational(3, 5) * H.one(), levels[m + 1]);
    CHECK(exponent(transition(k, levels[m]), levels[m]) == exponent(k, levels[m + 1]));
  }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    const BanachElement x = make_banach(random_scaled(rng, H, 5, 4), levels[2]);
    if (x.element.is_zero()) continue;
    // Real norms decrease: the exponent can only grow when going down a level.
    CHECK(exponent(transition(x, levels[1]), levels[1]) >= exponent(x, levels[2]));
  }
}

TEST_CASE("coadmissible families") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const auto& H = *half.algebra;
  const PadicContext ctx(5);
  const auto levels = level_sequence(H, ctx, 4);
  const PBWElement poly = H.multiply(H.dual(0), H.dual(0)) + Scalar::rational(2, 3) * H.vec(0) + H.group_element(1);
  std::vector<BanachElement> constant, euler, perturbed;
  for (const auto& l : levels) {
    constant.push_back(make_banach(poly, l));
    euler.push_back(make_banach(H.euler(), l));
    PBWElement p = poly;
    if (l.m == 2) p += Scalar(7) * H.dual(0);
    perturbed.push_back(make_banach(p, l));
  }
  CHECK(coadmissible_check(constant, levels).pass);
  CHECK(coadmissible_check(euler, levels).pass);
  const CoadmissibleReport bad = coadmissible_check(perturbed, levels);
  CHECK(!bad.pass);
  CHECK(bad.failing_level == 2);
  CHECK(!bad.detail.empty());
}

TEST_CASE("analytic Verma slices") {
  Setup half(cyclic_group(2), Scalar::rational(1, 2));
  const PadicContext ctx(5);
  const AnalyticVermaSlice a = analytic_verma_slice(*half.algebra, half.data.irrep("triv"), LevelParams{0, 1, ctx}, 8);
  CHECK(a.component_exponent[0] == 0);
  CHECK(a.ws_recovered);
  CHECK(a.generator_exponent.at("p^1*y1").value >= 0);
  for (const auto& [name, v] : a.generator_exponent) CHECK((v.infinite || v.value >= 0));

  Setup s3(symmetric_group_s3(), Scalar::rational(1, 5));
  for (const auto& l : level_sequence(*s3.algebra, ctx, 2)) {
    for (const auto& w : s3.data.irreps) {
      const AnalyticVermaSlice v = analytic_verma_slice(*s3.algebra, w, l, 5);
      CHECK(v.ws_recovered);
      CHECK(v.component_exponent[3] == -3 * static_cast<long>(l.m));
      for (unsigned n = 0; n <= 5; ++n) CHECK(v.slice.dim(n) == (n + 1) * w.dim);
    }
  }

  Setup inv_p(cyclic_group(2), Scalar::rational(1, 5));
  CHECK_THROWS_AS(analytic_verma_slice(*inv_p.algebra, inv_p.data.irrep("triv"), LevelParams{0, 0, ctx}, 4),
                  LatticeViolation);
}

TEST_CASE("weight components of Euler-stable subspaces") {
  // The span of d^k v for an inhomogeneous v contains each weight component of v.
  Setup s3(symmetric_group_s3(), Scalar::rational(1, 4));
  const auto& H = *s3.algebra;
  const VermaSlice slice(H, s3.data.irrep("std"), 6);
  const PBWElement euler = H.euler();
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    GradedVector v;
    for (unsigned n : {1u, 3u, 4u}) {
      Vec part(slice.verma_dim(n));
      for (auto& x : part) x = Scalar(static_cast<long>(rng() % 7) - 3);
      v[n] = part;
    }
    std::vector<GradedVector> orbit{v};
    for (int k = 0; k < 3; ++k) orbit.push_back(verma_action(slice, euler, orbit.back()));
    // Flatten graded vectors over degrees 1, 3, 4.
    auto flatten = [&](const GradedVector& g) {
      Vec out;
      for (unsigned n : {1u, 3u, 4u}) {
        auto it = g.find(n);
        for (std::size_t k = 0; k < slice.verma_dim(n); ++k) out.push_back(it == g.end() ? Scalar() : it->second[k]);
      }
      return out;
    };
    std::size_t total = 0;
    for (unsigned n : {1u, 3u, 4u}) total += slice.verma_dim(n);
    Subspace span(total);
    for (const auto& g : orbit) span.insert(flatten(g));
    for (unsigned n : {1u, 3u, 4u}) CHECK(span.contains(flatten(GradedVector{{n, v[n]}})));
  }
}
