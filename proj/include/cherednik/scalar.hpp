#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

/// The cyclotomic field Q(zeta_ell) with its power basis 1, zeta, ..., zeta^(phi(ell)-1).
/// ell = 1 denotes Q itself; ell = 2 is folded into ell = 1.
struct CyclotomicField {
  unsigned ell = 1;
  unsigned degree = 1;
  /// Coefficients of the ell-th cyclotomic polynomial, lowest degree first (monic).
  std::vector<long> phi;
  /// reduction[k] holds zeta^k in the power basis, for 0 <= k <= 2*degree - 2.
  std::vector<std::vector<mpq_class>> reduction;

  static std::shared_ptr<const CyclotomicField> get(unsigned ell);
};

/// Integer coefficients of the ell-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(unsigned ell);

/// Canonical field index: 2 and 1 both mean Q.
inline unsigned canonical_field(unsigned ell) { return ell <= 2 ? 1u : ell; }

/// Exact element of Q or Q(zeta_ell).
///
/// Canonical form: coordinates in the power basis reduced modulo Phi_ell, each
/// coordinate a reduced fraction, and the field index demoted to 1 whenever the
/// value is rational. Equality is therefore coordinate equality.
class Scalar {
 public:
  Scalar() : ell_(1), coords_(1) {}
  Scalar(long value) : ell_(1), coords_{mpq_class(value)} {}  // NOLINT(implicit)
  Scalar(const mpq_class& value) : ell_(1), coords_{value} { coords_[0].canonicalize(); }  // NOLINT

  static Scalar rational(long num, long den = 1);
  /// zeta_ell^power.
  static Scalar zeta(unsigned ell, long power = 1);
  static Scalar from_coords(unsigned ell, std::vector<mpq_class> coords);

  unsigned field() const { return ell_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return ell_ == 1; }
  /// Requires is_rational().
  const mpq_class& to_rational() const;
  /// True when the value lies in Z.
  bool is_integer() const;
  /// True when every coordinate is an integer (membership in Z[zeta]).
  bool is_algebraic_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& other) const;
  /// Total order on canonical forms; not an ordering of values.
  std::strong_ordering operator<=>(const Scalar& other) const;

  /// Largest bit size over numerators and denominators.
  std::size_t bit_size() const;

  /// Text form: "3/2", "-1", or "(1+2*z-z^2)" for non-rational values, z = zeta_ell.
  std::string str() const;

  /// Reapplies canonicalization; idempotent.
  void canonicalize();

 private:
  Scalar(unsigned ell, std::vector<mpq_class> coords);
  void promote_to(unsigned ell);
  static unsigned common_field(const Scalar& a, const Scalar& b);

  unsigned ell_;
  std::vector<mpq_class> coords_;
};

/// Parses the text form produced by Scalar::str(); z denotes zeta_ell.
Scalar parse_scalar(std::string_view text, unsigned ell);

}  // namespace cherednik
