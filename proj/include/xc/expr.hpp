#pragma once

#include "xc/chow.hpp"

#include <string_view>

namespace xc {

/// Parses and evaluates a Chow-ring expression to normal form.
///
/// Grammar (whitespace insignificant, identifiers case-sensitive):
///   expr     := term (('+'|'-') term)* ;
///   term     := factor ('*' factor)* ;
///   factor   := ('-')? atom ('^' uint)? ;
///   atom     := 'xi' | 'f' | 'h' | 'K' | rational | '(' expr ')' ;
///   rational := uint ('/' uint)? ;
///
/// 'h' expands to xi + f and 'K' to -2 xi - f. '^' binds tightest, then '*',
/// then binary '+'/'-'. Throws parse_error with a 1-based byte offset; a zero
/// denominator in a rational literal is also reported as a parse_error.
ChowElement parse_expression(std::string_view text, const ThreefoldModel& model);

} // namespace xc
