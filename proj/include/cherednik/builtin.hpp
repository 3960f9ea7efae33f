#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cherednik/group.hpp"

namespace cherednik {

/// A group action together with a complete list of split irreducibles.
struct GroupData {
  std::string name;
  std::shared_ptr<const GroupAction> group;
  std::vector<Irrep> irreps;

  /// Throws ValidationError for unknown labels.
  const Irrep& irrep(const std::string& label) const;
  std::size_t irrep_index(const std::string& label) const;
};

/// Z/ell acting on K^1 by zeta_ell, over Q(zeta_ell); 1 <= ell <= 12.
/// Irreps: triv, then chi<k> (g -> zeta^k); for ell = 2 the non-trivial one is sgn.
GroupData cyclic_group(unsigned ell);

/// Dihedral group of order 2*ell in its 2-dim reflection representation
/// r = diag(zeta, zeta^{-1}), s = swap, over Q(zeta_ell); 2 <= ell <= 8.
/// Irreps: triv, sgn, [eps1, eps2 when ell is even], rho1..rho_k.
GroupData dihedral_group(unsigned ell);

/// S3 acting on the reflection representation over Q. Irreps: triv, sgn, std.
GroupData symmetric_group_s3();

/// S4 acting on its 3-dim reflection representation over Q.
/// Irreps: triv, sgn, std, std_sgn, two.
GroupData symmetric_group_s4();

/// Looks up "cyclic:<ell>", "dihedral:<ell>", "S3", or "S4".
GroupData builtin_group(const std::string& name);

}  // namespace cherednik
