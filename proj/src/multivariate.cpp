#include "pmahler/multivariate.hpp"

#include <sstream>

#include "pmahler/errors.hpp"

namespace pmahler {

MultivariatePolynomial::MultivariatePolynomial(std::vector<std::string> variables, Terms terms)
    : variables_(std::move(variables)) {
  for (auto& [exps, c] : terms) {
    if (exps.size() != variables_.size()) {
      throw DomainError("exponent vector arity does not match the variable list");
    }
    if (c != 0) terms_.emplace(exps, c);
  }
}

std::string MultivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::ostringstream monomial;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (any) monomial << "*";
      monomial << variables_[i];
      if (exps[i] != 1) monomial << "^" << exps[i];
      any = true;
    }
    if (!any) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << monomial.str();
    } else {
      out << magnitude.get_str() << "*" << monomial.str();
    }
  }
  return out.str();
}

LaurentPolynomial substitute_onevar(const MultivariatePolynomial& poly,
                                    const std::vector<long>& exponents,
                                    const std::string& target) {
  if (exponents.size() != poly.arity()) {
    throw DomainError("substitution has " + std::to_string(exponents.size()) +
                      " exponents for " + std::to_string(poly.arity()) + " variables");
  }
  LaurentPolynomial::Terms terms;
  for (const auto& [exps, c] : poly.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) e += exps[i] * exponents[i];
    terms[e] += Rational(c);
  }
  return LaurentPolynomial(std::move(terms), target);
}

}  // namespace pmahler
