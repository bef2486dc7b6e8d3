#pragma once

#include <string_view>

#include "fdim/polynomial.hpp"

namespace formal {

/// Parses a polynomial over ring. Grammar:
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | ident ['^' integer] | '(' poly ')' ['^' integer]
///
/// Whitespace is insignificant. Throws ParseError on syntax errors, unknown
/// variables and literals that are undefined in the field (1/2 over F2).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace formal
