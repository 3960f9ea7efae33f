#include "cherednik/padic.hpp"

#include <vector>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

mpz_class eval_mod(const std::vector<long>& poly, const mpz_class& x, const mpz_class& mod) {
  mpz_class acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) {
    acc = acc * x + poly[k];
    acc %= mod;
  }
  if (acc < 0) acc += mod;
  return acc;
}

std::vector<long> derivative(const std::vector<long>& poly) {
  std::vector<long> d;
  for (std::size_t k = 1; k < poly.size(); ++k) d.push_back(static_cast<long>(k) * poly[k]);
  if (d.empty()) d.push_back(0);
  return d;
}

mpz_class prime_power(unsigned long p, unsigned n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, n);
  return out;
}

}  // namespace

std::string Valuation::str() const {
  if (infinite) return "inf";
  return (exact ? "" : ">=") + std::to_string(value);
}

mpz_class hensel_embed(unsigned ell, unsigned long p, unsigned precision) {
  if (precision == 0) throw ValidationError("precision must be at least 1");
  if (ell == 0) throw ValidationError("cyclotomic index must be positive");
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
    throw ValidationError(std::to_string(p) + " is not prime");
  }
  if ((p - 1) % ell != 0) {
    throw SplittingError("p = " + std::to_string(p) + " is not 1 mod " + std::to_string(ell));
  }
  const auto phi = cyclotomic_polynomial(ell);
  const auto dphi = derivative(phi);
  const mpz_class pz(p);
  mpz_class root = -1;
  for (unsigned long r = 0; r < p; ++r) {
    if (eval_mod(phi, mpz_class(r), pz) == 0) {
      root = r;
      break;
    }
  }
  if (root < 0) throw SplittingError("no root of Phi_" + std::to_string(ell) + " mod " + std::to_string(p));
  const mpz_class target = prime_power(p, precision);
  mpz_class mod = pz;
  while (mod < target) {
    mod = mod * mod;
    if (mod > target) mod = target;
    const mpz_class f = eval_mod(phi, root, mod);
    const mpz_class df = eval_mod(dphi, root, mod);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), mod.get_mpz_t()) == 0) {
      throw SplittingError("Phi_" + std::to_string(ell) + " is not separable mod " + std::to_string(p));
    }
    root = (root - f * inv) % mod;
    if (root < 0) root += mod;
  }
  return root;
}

PadicContext::PadicContext(unsigned long p, unsigned precision, unsigned ell)
    : p_(p), precision_(precision), ell_(canonical_field(ell)) {
  if (precision == 0) throw ValidationError("precision must be at least 1");
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
    throw ValidationError("prime: " + std::to_string(p) + " is not prime");
  }
  modulus_ = prime_power(p, precision);
  if (ell_ != 1) root_ = hensel_embed(ell_, p, precision);
}

long PadicContext::valuation(const mpz_class& n) const {
  if (n == 0) throw DivisionByZero("valuation of zero integer");
  mpz_class rest = n;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(p_).get_mpz_t()));
}

Valuation PadicContext::val(const Scalar& x) const {
  if (x.is_zero()) return Valuation::infinity();
  if (x.is_rational()) {
    const mpq_class& q = x.to_rational();
    return Valuation::finite(valuation(q.get_num()) - valuation(q.get_den()));
  }
  if (x.field() != ell_) {
    throw FieldMismatch("p-adic context is for Q(zeta_" + std::to_string(ell_) + "), value lies in Q(zeta_" +
                        std::to_string(x.field()) + ")");
  }
  // x = (sum a_k zeta^k) / D with integral a_k.
  mpz_class den = 1;
  for (const auto& c : x.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class acc = 0;
  mpz_class power = 1;
  for (const auto& c : x.coords()) {
    const mpz_class a = c.get_num() * (den / c.get_den());
    acc = (acc + a * power) % modulus_;
    power = (power * root_) % modulus_;
  }
  if (acc < 0) acc += modulus_;
  const long vden = valuation(den);
  if (acc == 0) return Valuation::finite(static_cast<long>(precision_) - vden, false);
  return Valuation::finite(valuation(acc) - vden);
}

}  // namespace cherednik
