#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/multivariate.hpp"

namespace pmahler {

using ParsedPolynomial = std::variant<LaurentPolynomial, MultivariatePolynomial>;

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
//   exponent := ['-' | '+'] integer | '(' ['-' | '+'] integer ')'
// Negative exponents are only accepted on monomials.
//
// Zero or one variable yields a LaurentPolynomial (variable "t" when the
// input is constant); two or more yield a MultivariatePolynomial over the
// variables in sorted order.
ParsedPolynomial parse_polynomial(std::string_view text);

/// Parses and requires at most one variable.
LaurentPolynomial parse_laurent(std::string_view text);

/// Parses over a fixed variable list; an unknown variable is a ParseError,
/// non-integer coefficients a DomainError.
MultivariatePolynomial parse_multivariate(std::string_view text,
                                          const std::vector<std::string>& variables);

}  // namespace pmahler
