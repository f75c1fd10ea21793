#ifndef ARAKOUNT_EXPR_HPP
#define ARAKOUNT_EXPR_HPP

#include <string>

#include "arakount/polynomial.hpp"

namespace arakount {

/// Parse the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' uint)?
///   coeff  := int | int '/' uint
/// with var in {x, y, z, w} (indices 0..3) or x0..x9 (indices 0..9);
/// whitespace is insignificant. Inhomogeneous input is rejected.
/// `min_nvars` widens the variable space (e.g. a linear form x in P^2).
HomogeneousPolynomial parse_polynomial(const std::string& text, int min_nvars = 0);

/// Canonical text form; parses back to an equal polynomial.
std::string format_polynomial(const HomogeneousPolynomial& f);

} // namespace arakount

#endif
