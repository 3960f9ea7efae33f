#include "cherednik/builtin.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

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

Matrix scalar_matrix(const Scalar& s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return m;
}

Matrix diag2(const Scalar& a, const Scalar& b) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

GroupData finish(std::string name, const std::vector<Matrix>& generators,
                 const std::vector<std::pair<std::string, std::vector<Matrix>>>& irreps) {
  GroupData data;
  data.name = std::move(name);
  auto group = std::make_shared<GroupAction>(GroupAction::enumerate(generators));
  for (const auto& [label, images] : irreps) data.irreps.push_back(irrep_from_generators(label, images, *group));
  data.group = std::move(group);
  return data;
}

}  // namespace

const Irrep& GroupData::irrep(const std::string& label) const { return irreps[irrep_index(label)]; }

std::size_t GroupData::irrep_index(const std::string& label) const {
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    if (irreps[k].label == label) return k;
  }
  throw ValidationError("irrep: unknown label '" + label + "' for group " + name);
}

GroupData cyclic_group(unsigned ell) {
  if (ell < 1 || ell > 12) throw ValidationError("group: cyclic order must be in 1..12");
  const Scalar zeta = Scalar::zeta(ell, 1);
  std::vector<std::pair<std::string, std::vector<Matrix>>> irreps;
  for (unsigned k = 0; k < ell; ++k) {
    std::string label = k == 0 ? "triv" : (ell == 2 ? "sgn" : "chi" + std::to_string(k));
    irreps.push_back({label, {scalar_matrix(Scalar::zeta(ell, k))}});
  }
  return finish("cyclic:" + std::to_string(ell), {scalar_matrix(zeta)}, irreps);
}

GroupData dihedral_group(unsigned ell) {
  if (ell < 2 || ell > 8) throw ValidationError("group: dihedral parameter must be in 2..8");
  const Matrix r = diag2(Scalar::zeta(ell, 1), Scalar::zeta(ell, -1));
  const Matrix s = mat({{0, 1}, {1, 0}});
  std::vector<std::pair<std::string, std::vector<Matrix>>> irreps;
  irreps.push_back({"triv", {mat({{1}}), mat({{1}})}});
  irreps.push_back({"sgn", {mat({{1}}), mat({{-1}})}});
  if (ell % 2 == 0) {
    irreps.push_back({"eps1", {mat({{-1}}), mat({{1}})}});
    irreps.push_back({"eps2", {mat({{-1}}), mat({{-1}})}});
  }
  for (unsigned j = 1; 2 * j < ell; ++j) {
    irreps.push_back({"rho" + std::to_string(j), {diag2(Scalar::zeta(ell, j), Scalar::zeta(ell, -static_cast<long>(j))), s}});
  }
  return finish("dihedral:" + std::to_string(ell), {r, s}, irreps);
}

GroupData symmetric_group_s3() {
  const Matrix s1 = mat({{-1, 1}, {0, 1}});
  const Matrix s2 = mat({{1, 0}, {1, -1}});
  return finish("S3", {s1, s2},
                {{"triv", {mat({{1}}), mat({{1}})}}, {"sgn", {mat({{-1}}), mat({{-1}})}}, {"std", {s1, s2}}});
}

GroupData symmetric_group_s4() {
  const Matrix s1 = mat({{-1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const Matrix s2 = mat({{1, 0, 0}, {1, -1, 1}, {0, 0, 1}});
  const Matrix s3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 1, -1}});
  const Matrix t1 = mat({{-1, 1}, {0, 1}});
  const Matrix t2 = mat({{1, 0}, {1, -1}});
  const Matrix minus = mat({{-1}});
  const Matrix one = mat({{1}});
  return finish("S4", {s1, s2, s3},
                {{"triv", {one, one, one}},
                 {"sgn", {minus, minus, minus}},
                 {"std", {s1, s2, s3}},
                 {"std_sgn", {s1.scaled(Scalar(-1)), s2.scaled(Scalar(-1)), s3.scaled(Scalar(-1))}},
                 {"two", {t1, t2, t1}}});
}

GroupData builtin_group(const std::string& name) {
  auto parse_param = [&](const std::string& prefix) -> unsigned {
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3) {
      throw ValidationError("group: bad parameter in '" + name + "'");
    }
    return static_cast<unsigned>(std::stoul(rest));
  };
  if (name == "S3") return symmetric_group_s3();
  if (name == "S4") return symmetric_group_s4();
  if (name.rfind("cyclic:", 0) == 0) return cyclic_group(parse_param("cyclic:"));
  if (name.rfind("dihedral:", 0) == 0) return dihedral_group(parse_param("dihedral:"));
  throw ValidationError("group: unknown built-in group '" + name + "'");
}

}  // namespace cherednik
