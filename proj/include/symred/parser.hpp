#ifndef SYMRED_PARSER_HPP
#define SYMRED_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "symred/multipoly.hpp"

namespace symred {

/// Parses polynomial text over variables x1..xn.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'x' index | '(' expr ')'
///
/// Division is only by nonzero constants, so "3/4*x1" is a rational
/// coefficient. When n is absent it is the largest variable index used
/// (at least 1). Throws ParseError with line/column on malformed input or a
/// variable index above n.
MultiPoly parse_polynomial(const std::string& text, std::optional<std::size_t> n = std::nullopt);

/// Comma-separated rationals, e.g. "1,0,-1/2".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace symred

#endif  // SYMRED_PARSER_HPP
