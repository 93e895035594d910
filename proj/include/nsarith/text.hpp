#pragma once

#include <string>
#include <string_view>

#include "nsarith/element.hpp"

namespace nsarith {

// Grammar (whitespace-insensitive):
//
//   expr     := ['+'|'-'] term { ('+'|'-') term }
//   term     := coeff ['*' monomial] | monomial
//   monomial := 't' ['^' exponent]
//   coeff    := INT ['/' INT]
//   exponent := rational | '(' rational [',' rational] ')'
//   rational := ['-'] INT ['/' INT]
//
// In d=2 a scalar exponent e means (e,0), so a bare `t` is t^(1,0).

/// Parses into the signed series field; ParseError carries the byte offset.
Series parse_series(std::string_view text, int dim);

/// Parses and checks the model invariants (InvariantViolation otherwise).
Element parse_element(std::string_view text, int dim);

/// 2 when the text contains a parenthesized exponent pair, else 1.
int infer_dim(std::string_view text);

std::string format_series(const Series& s);
std::string format_element(const Element& e);

}  // namespace nsarith
