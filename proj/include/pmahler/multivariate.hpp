#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

// Integer-coefficient Laurent polynomial in several variables, stored as
// exponent vector -> coefficient. Every key has arity variables().size().
class MultivariatePolynomial {
 public:
  using Exponents = std::vector<long>;
  using Terms = std::map<Exponents, Integer>;

  MultivariatePolynomial() = default;
  MultivariatePolynomial(std::vector<std::string> variables, Terms terms);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t arity() const noexcept { return variables_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

  /// Descending lexicographic order of exponent vectors, e.g. "x*y + 1".
  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  Terms terms_;
};

/// Replaces each variable x_i by target^{exponents[i]}.
/// Throws DomainError on arity mismatch.
LaurentPolynomial substitute_onevar(const MultivariatePolynomial& poly,
                                    const std::vector<long>& exponents,
                                    const std::string& target = "t");

}  // namespace pmahler
