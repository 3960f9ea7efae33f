#include <random>

#include "cherednik/builtin.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/group.hpp"
#include "doctest.h"

using namespace cherednik;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar(v);
    ++r;
  }
  return m;
}

std::vector<Matrix> regular_rep(const GroupAction& g) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m(g.order(), g.order());
    for (std::size_t b = 0; b < g.order(); ++b) m(g.multiply(a, b), b) = Scalar(1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_group examples") {
  CHECK(GroupAction::enumerate({mat({{-1}})}).order() == 2);
  CHECK(GroupAction::enumerate({mat({{-1, 1}, {0, 1}}), mat({{1, 0}, {1, -1}})}).order() == 6);
  CHECK(GroupAction::enumerate({mat({{1, 0}, {0, 1}})}).order() == 1);
  CHECK(symmetric_group_s4().group->order() == 24);
  CHECK(dihedral_group(8).group->order() == 16);
  CHECK(cyclic_group(12).group->order() == 12);
}

TEST_CASE("enumerate_group errors") {
  Matrix half(1, 1);
  half(0, 0) = Scalar::rational(1, 2);
  CHECK_THROWS_AS(GroupAction::enumerate({half}), NonIntegralEntry);
  // [[1,1],[0,1]] has infinite order.
  CHECK_THROWS_AS(GroupAction::enumerate({mat({{1, 1}, {0, 1}})}, 50), CapExceeded);
  CHECK_THROWS_AS(GroupAction::enumerate({mat({{0}})}), ValidationError);
}

TEST_CASE("multiplication table is associative with consistent inverses") {
  for (const auto& data : {symmetric_group_s3(), symmetric_group_s4(), dihedral_group(5), cyclic_group(7)}) {
    const auto& g = *data.group;
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      CHECK(g.multiply(g.inverse(a), a) == 0);
      for (std::size_t b = 0; b < g.order(); ++b) {
        CHECK(g.element(a) * g.element(b) == g.element(g.multiply(a, b)));
        for (std::size_t c = 0; c < g.order(); ++c) {
          REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
        }
      }
    }
  }
}

TEST_CASE("find_reflections examples") {
  const auto z2 = cyclic_group(2);
  const auto refl = find_reflections(*z2.group);
  REQUIRE(refl.size() == 1);
  CHECK(refl[0].lambda == Scalar(-1));
  CHECK(refl[0].alpha == Vec{Scalar(1)});
  CHECK(refl[0].alpha_vee == Vec{Scalar(2)});

  const auto s3 = symmetric_group_s3();
  const auto r3 = find_reflections(*s3.group);
  CHECK(r3.size() == 3);
  for (const auto& r : r3) {
    CHECK(r.lambda == Scalar(-1));
    CHECK(r.element != s3.group->identity());
  }
  CHECK(find_reflections(*symmetric_group_s4().group).size() == 6);
  CHECK(find_reflections(*dihedral_group(6).group).size() == 6);
  CHECK(find_reflections(*cyclic_group(5).group).size() == 4);
}

TEST_CASE("pseudo-reflection invariants") {
  for (const auto& data : {symmetric_group_s3(), symmetric_group_s4(), dihedral_group(4), dihedral_group(5),
                           cyclic_group(3), cyclic_group(6)}) {
    const auto& g = *data.group;
    const auto refl = find_reflections(g);
    std::vector<bool> is_refl(g.order(), false);
    for (const auto& r : refl) is_refl[r.element] = true;
    for (const auto& r : refl) {
      const Matrix& m = g.element(r.element);
      const std::size_t n = g.dimension();
      CHECK((m - Matrix::identity(n)).rank() == 1);
      Scalar pairing;
      for (std::size_t k = 0; k < n; ++k) pairing += r.alpha[k] * r.alpha_vee[k];
      CHECK(pairing == Scalar(2));
      // g alpha_vee = lambda^{-1} alpha_vee; g fixes ker(alpha).
      const Vec image = m.apply(r.alpha_vee);
      for (std::size_t k = 0; k < n; ++k) CHECK(image[k] == r.lambda.inv() * r.alpha_vee[k]);
      Matrix row(1, n);
      for (std::size_t k = 0; k < n; ++k) row(0, k) = r.alpha[k];
      for (const auto& v : row.nullspace()) CHECK(m.apply(v) == v);
      std::size_t first = 0;
      while (r.alpha[first].is_zero()) ++first;
      CHECK(r.alpha[first].is_one());
      // Closed under conjugation with equal eigenvalue.
      for (std::size_t h = 0; h < g.order(); ++h) {
        const std::size_t conj = g.multiply(g.multiply(h, r.element), g.inverse(h));
        CHECK(is_refl[conj]);
        for (const auto& q : refl) {
          if (q.element == conj) CHECK(q.lambda == r.lambda);
        }
      }
    }
  }
}

TEST_CASE("reflection functions are class functions") {
  const auto d4 = dihedral_group(4);
  const auto classes = reflection_classes(*d4.group);
  CHECK(classes.size() == 2);
  ReflectionFunction c(*d4.group, {Scalar::rational(1, 2), Scalar::rational(1, 3)});
  const auto& g = *d4.group;
  for (const auto& r : find_reflections(g)) {
    for (std::size_t h = 0; h < g.order(); ++h) {
      CHECK(c(g.multiply(g.multiply(h, r.element), g.inverse(h))) == c(r.element));
    }
  }
  CHECK_THROWS_AS(ReflectionFunction(g, {Scalar(1)}), ValidationError);
  CHECK(reflection_classes(*symmetric_group_s3().group).size() == 1);
}

TEST_CASE("validate_irrep examples") {
  const auto s3 = symmetric_group_s3();
  const auto& g = *s3.group;
  CHECK_NOTHROW(validate_irrep("triv", std::vector<Matrix>(g.order(), mat({{1}})), g));
  const Irrep& std_rep = s3.irrep("std");
  CHECK(character_inner(std_rep.character, std_rep.character, g) == Scalar(1));

  const auto z2 = cyclic_group(2);
  std::vector<Matrix> sum{mat({{1, 0}, {0, 1}}), mat({{1, 0}, {0, -1}})};
  CHECK_THROWS_AS(validate_irrep("triv+sgn", sum, *z2.group), NotIrreducible);
  std::vector<Matrix> bad{mat({{1}}), mat({{2}})};
  CHECK_THROWS_AS(validate_irrep("bad", bad, *z2.group), NotHomomorphism);
}

TEST_CASE("built-in irrep tables are complete") {
  std::vector<GroupData> all{symmetric_group_s3(), symmetric_group_s4()};
  for (unsigned ell = 1; ell <= 12; ++ell) all.push_back(cyclic_group(ell));
  for (unsigned ell = 2; ell <= 8; ++ell) all.push_back(dihedral_group(ell));
  for (const auto& data : all) {
    CAPTURE(data.name);
    std::size_t total = 0;
    for (const auto& w : data.irreps) total += w.dim * w.dim;
    CHECK(total == data.group->order());
    for (std::size_t a = 0; a < data.irreps.size(); ++a) {
      for (std::size_t b = 0; b < data.irreps.size(); ++b) {
        const Scalar ip = character_inner(data.irreps[a].character, data.irreps[b].character, *data.group);
        CHECK(ip == Scalar(a == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("isotypic_project examples") {
  const auto z2 = cyclic_group(2);
  CHECK(isotypic_project(z2.irrep("triv"), *z2.group, regular_rep(*z2.group)).size() == 1);

  const auto s3 = symmetric_group_s3();
  const auto reg = regular_rep(*s3.group);
  CHECK(isotypic_project(s3.irrep("triv"), *s3.group, reg).size() == 1);
  CHECK(isotypic_project(s3.irrep("sgn"), *s3.group, reg).size() == 1);
  CHECK(isotypic_project(s3.irrep("std"), *s3.group, reg).size() == 4);
}

TEST_CASE("isotypic projectors are idempotent on random modules") {
  // Random 10-dimensional S3-modules: conjugate a direct sum of irreps by a random matrix.
  const auto s3 = symmetric_group_s3();
  const auto& g = *s3.group;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> parts;
    std::size_t dim = 0;
    while (dim < 10) {
      std::size_t k = static_cast<std::size_t>(pick(rng));
      if (dim + s3.irreps[k].dim > 10) k = 0;
      parts.push_back(k);
      dim += s3.irreps[k].dim;
    }
    Matrix p;
    do {
      p = Matrix(10, 10);
      for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c) p(r, c) = Scalar(entry(rng));
    } while (p.rank() < 10);
    const Matrix pinv = p.inverse();
    std::vector<Matrix> module;
    for (std::size_t e = 0; e < g.order(); ++e) {
      Matrix block(10, 10);
      std::size_t off = 0;
      for (auto k : parts) {
        const Matrix& m = s3.irreps[k].rho[e];
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) block(off + r, off + c) = m(r, c);
        off += m.rows();
      }
      module.push_back(p * block * pinv);
    }
    for (const auto& w : s3.irreps) {
      const Matrix e = isotypic_projector(w, g, module);
      CHECK(e * e == e);
      for (const auto& m : module) CHECK(m * e == e * m);
    }
  }
}
