#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "cherednik/scalar.hpp"

namespace cherednik {

inline constexpr unsigned kDefaultPrecision = 64;

/// p-adic valuation with an explicit precision flag.
///
/// `exact == false` means the true value is at least `value` (the working
/// precision ran out). The infinite valuation is only reported for exact zero.
struct Valuation {
  bool infinite = false;
  long value = 0;
  bool exact = true;

  static Valuation infinity() { return {true, 0, true}; }
  static Valuation finite(long v, bool exact = true) { return {false, v, exact}; }

  bool operator==(const Valuation&) const = default;
  std::string str() const;
};

/// Newton lift of the smallest root of Phi_ell mod p to a root mod p^precision.
/// Throws SplittingError unless p = 1 (mod ell).
mpz_class hensel_embed(unsigned ell, unsigned long p, unsigned precision);

/// A prime, a working precision, and for cyclotomic fields the embedding zeta -> root.
class PadicContext {
 public:
  /// Throws ValidationError for non-primes or zero precision, SplittingError when
  /// Q(zeta_ell) does not embed into Q_p.
  PadicContext(unsigned long p, unsigned precision = kDefaultPrecision, unsigned ell = 1);

  unsigned long prime() const { return p_; }
  unsigned precision() const { return precision_; }
  unsigned field() const { return ell_; }
  const mpz_class& modulus() const { return modulus_; }
  /// Hensel root; only meaningful for cyclotomic fields.
  const mpz_class& root() const { return root_; }

  /// v_p of a nonzero integer; exact.
  long valuation(const mpz_class& n) const;
  Valuation val(const Scalar& x) const;

  bool operator==(const PadicContext& other) const {
    return p_ == other.p_ && precision_ == other.precision_ && ell_ == other.ell_;
  }

 private:
  unsigned long p_;
  unsigned precision_;
  unsigned ell_;
  mpz_class modulus_;
  mpz_class root_;
};

/// Free-function form of PadicContext::val.
inline Valuation val(const Scalar& x, const PadicContext& ctx) { return ctx.val(x); }

}  // namespace cherednik
