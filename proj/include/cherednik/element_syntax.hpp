#pragma once

#include <string>
#include <string_view>

#include "cherednik/pbw.hpp"

namespace cherednik {

/// Text form of a PBW element, terms in canonical order:
///
///   element := term (('+' | '-') term)*  |  '0'
///   term    := factor ('*' factor)*
///   factor  := number ['/' number] | '(' cyclotomic ')' | 'z' ['^' n]
///            | 'x' i ['^' n] | 'y' i ['^' n] | 'g' k
///
/// x_i is t*_i, y_i is t_i (1-based), g_k is group element k (g0 = identity),
/// z is zeta_ell of the coefficient field. Factors may appear in any order;
/// products are straightened in the algebra.
std::string format_element(const PBWElement& x);

/// Throws ParseError on malformed input.
PBWElement parse_element(std::string_view text, const CherednikAlgebra& algebra);

/// Monomial part of a key without coefficient, e.g. "x1^2*g3*y2"; "1" for the unit.
std::string format_key(const PBWKey& key);

}  // namespace cherednik
