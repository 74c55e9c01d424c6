#pragma once

// Text syntax for quadratic forms.
//
//   form  := ['+' | '-'] term (('+' | '-') term)*
//   term  := [coef ['*']] var ['^' 2 | '*' var]  |  coef
//   coef  := integer | 'z' ['^' integer] | '(' poly ')'
//   poly  := ['-'] mono (('+' | '-') mono)*
//   mono  := integer ['*' 'z' ['^' integer]] | 'z' ['^' integer]
//   var   := 'X' digits
//
// A bare coefficient term is accepted only when it reduces to zero, so "0"
// parses as the zero form.

#include "qprm/quadric.hpp"

#include <string>
#include <string_view>

namespace qprm {

QuadraticForm parse_form(std::string_view text, const FieldRef& field, int N);

/// Terms in monomial order joined by " + "; unit coefficients omitted, extension
/// coefficients parenthesized; the zero form renders as "0".
std::string render_form(const QuadraticForm& F);

}  // namespace qprm
