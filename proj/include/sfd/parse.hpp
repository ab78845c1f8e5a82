#pragma once

#include <string_view>

#include "sfd/errors.hpp"
#include "sfd/polynomial.hpp"

namespace sfd {

// Parses the polynomial grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | var | '(' expr ')'
//   var    := 'x' digit | 'x' | 'y' | 'z'     (x = x1, y = x2, z = x3)
//   int    := digit+
//
// Unary minus is allowed at the start of an expression and after '('.
// Multiplication is always explicit: "3x" is a syntax error. Whitespace is
// ignored. The result is the expanded canonical polynomial; its arity is the
// largest variable index used (or arity_hint if larger, minimum 1).
//
// Throws ParseError with a 1-based position on malformed input.
Polynomial parse_polynomial(std::string_view text, int arity_hint = 0);

}  // namespace sfd
