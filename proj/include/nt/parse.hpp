#pragma once

#include "nt/contfrac.hpp"
#include "nt/surd.hpp"

#include <string>
#include <variant>

namespace nt {

// A number given on the command line: an exact quadratic (covers integers and
// fractions) or a continued fraction (covers digit streams like e).
using ParsedNumber = std::variant<QuadraticSurd, ContinuedFraction>;

// Accepts, after trimming whitespace:
//   - continued-fraction literals  "[a0; a1, ..., (b1, ..., bl)^w]"
//   - named constants              "e" (digit stream), "phi"
//   - arithmetic over integers and sqrt(n) with + - * / and parentheses,
//     e.g. "7/3", "(1+sqrt(5))/2", "sqrt(6)*2/5+2/5"
// Every QuadraticSurd::str() and ContinuedFraction::str() output of a
// non-stream value re-parses to an equal value.
ParsedNumber parse_number(const std::string& text);

// The arithmetic-expression subset only; throws std::invalid_argument on
// syntax errors and std::domain_error on mixed-field arithmetic.
QuadraticSurd parse_surd_expression(const std::string& text);

}  // namespace nt
