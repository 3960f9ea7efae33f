#include "cherednik/polynomial.hpp"

#include <numeric>

#include "cherednik/errors.hpp"

namespace cherednik {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponents unit_exponents(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return e;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool DegLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t var, unsigned remaining, Exponents& cur,
                    std::vector<Exponents>& out) {
  if (var + 1 == nvars) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[var] = k;
    fill_monomials(nvars, var + 1, remaining - k, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  fill_monomials(nvars, 0, degree, cur, out);
  return out;
}

void add_term(Polynomial& p, const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) add_term(out, add_exponents(ea, eb), ca * cb);
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b) add_term(out, e, c);
  return out;
}

Polynomial poly_scale(const Polynomial& a, const Scalar& s) {
  Polynomial out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a) out.emplace(e, c * s);
  return out;
}

Polynomial monomial_poly(const Exponents& e, const Scalar& c) {
  Polynomial p;
  add_term(p, e, c);
  return p;
}

Polynomial linear_form(const std::vector<Scalar>& coeffs) {
  Polynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) add_term(p, unit_exponents(coeffs.size(), k), coeffs[k]);
  return p;
}

Polynomial poly_derivative(const Polynomial& p, std::size_t i) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    add_term(out, d, c * Scalar(static_cast<long>(e[i])));
  }
  return out;
}

Polynomial poly_substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t nvars) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    Polynomial term = monomial_poly(Exponents(nvars, 0), c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (unsigned k = 0; k < e[j]; ++k) term = poly_mul(term, images[j]);
    }
    out = poly_add(out, term);
  }
  return out;
}

Polynomial poly_divide_linear(const Polynomial& p, const std::vector<Scalar>& form) {
  std::size_t lead = 0;
  while (lead < form.size() && form[lead].is_zero()) ++lead;
  if (lead == form.size()) throw DivisionByZero("division by the zero linear form");
  const Scalar lead_inv = form[lead].inv();
  Polynomial rest = p;
  Polynomial quotient;
  while (true) {
    // Highest power of the leading variable goes first; each step lowers it by one.
    auto pick = rest.end();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      if (it->first[lead] > 0 && (pick == rest.end() || it->first[lead] > pick->first[lead])) pick = it;
    }
    if (pick == rest.end()) break;
    Exponents q = pick->first;
    --q[lead];
    const Scalar coeff = pick->second * lead_inv;
    add_term(quotient, q, coeff);
    for (std::size_t k = 0; k < form.size(); ++k) {
      if (form[k].is_zero()) continue;
      Exponents e = q;
      ++e[k];
      add_term(rest, e, -(coeff * form[k]));
    }
  }
  if (!rest.empty()) throw Error("polynomial is not divisible by the linear form");
  return quotient;
}

std::string exponents_str(const Exponents& e, char var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace cherednik
