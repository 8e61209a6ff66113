#pragma once

#include <string>
#include <vector>

#include "fracfem/field.hpp"

namespace fracfem {

struct Expression {
    ScalarFn fn;
    /// Points where the expression may jump (endpoints of chi terms).
    std::vector<double> breakpoints;
};

/// Parses an expression in x. Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?
///   atom   := number | 'x' | 'pi' | 'e' | 'chi(' number ',' number ')' | '(' expr ')'
/// chi(a, b) is the indicator of [a, b). Throws ArgumentError on malformed input.
Expression parse_expression(const std::string& text);

/// Builds a Field from an expression and a singularity hint: "smooth" or the
/// exponent p of the x^p behaviour at 0 (p > -1).
Field field_from_expression(const std::string& text, const std::string& hint);

}  // namespace fracfem
