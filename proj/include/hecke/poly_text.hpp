#pragma once

// Text form of polynomials:
//
//   poly   := term (("+" | "-") term)*
//   term   := coeff "*"? monomial?
//   coeff  := integer polynomial in q, parenthesized unless it has one term
//
// e.g. "(1-q)*x1^2*x2 + q^2*x3". The printer emits terms from the
// lexicographically largest exponent vector down, so the text of a
// polynomial is unique. The parser accepts any sum of products of integers,
// q, x<i>, powers and parenthesized subexpressions, which makes
// parse_poly(format_poly(f), n) == f hold for every f.

#include <string>

#include "hecke/mpoly.hpp"
#include "hecke/qpoly.hpp"

namespace hecke {

std::string format_poly(const MPoly& f);
std::string format_poly(const RationalMPoly& f);

/// Throws std::invalid_argument on malformed text or a variable index > n.
MPoly parse_poly(const std::string& text, int n);

/// Parses a polynomial in q alone (no x variables).
QPoly parse_qpoly(const std::string& text);

}  // namespace hecke
