#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cherednik/scalar.hpp"

namespace cherednik {

/// Multidegree (exponent vector) of a commutative monomial.
using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);
Exponents unit_exponents(std::size_t nvars, std::size_t i);
Exponents add_exponents(const Exponents& a, const Exponents& b);

/// Deg-lex: lower total degree first, then larger exponent on earlier variables first.
struct DegLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All monomials of the given degree in deg-lex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Commutative polynomial with Scalar coefficients; no stored zeros.
using Polynomial = std::map<Exponents, Scalar, DegLex>;

void add_term(Polynomial& p, const Exponents& e, const Scalar& c);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Scalar& s);
Polynomial monomial_poly(const Exponents& e, const Scalar& c = Scalar(1));
/// Linear form sum_k coeffs[k] * var_k.
Polynomial linear_form(const std::vector<Scalar>& coeffs);
/// Partial derivative in variable i.
Polynomial poly_derivative(const Polynomial& p, std::size_t i);
/// Image of p under the linear substitution var_j -> images[j].
Polynomial poly_substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t nvars);
/// Exact quotient of p by a nonzero linear form; throws Error if the division leaves a remainder.
Polynomial poly_divide_linear(const Polynomial& p, const std::vector<Scalar>& form);

std::string exponents_str(const Exponents& e, char var);

}  // namespace cherednik
