#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmahler/numeric.hpp"

namespace pmahler {

// Laurent polynomial in one variable with exact rational coefficients.
// Terms with zero coefficient are never stored; the zero polynomial has
// an empty term map.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::string variable) : variable_(std::move(variable)) {}
  LaurentPolynomial(Terms terms, std::string variable = "t");

  static LaurentPolynomial constant(const Rational& c, std::string variable = "t");
  static LaurentPolynomial monomial(const Rational& c, long exponent,
                                    std::string variable = "t");
  /// a[0] + a[1] t + a[2] t^2 + ...
  static LaurentPolynomial from_ascending(const std::vector<Integer>& a,
                                          std::string variable = "t");

  const std::string& variable() const noexcept { return variable_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // The following require a nonzero polynomial.
  long min_exponent() const;
  long max_exponent() const;
  /// max_exponent - min_exponent: the degree after clearing t^k units.
  long span() const { return max_exponent() - min_exponent(); }
  const Rational& leading_coefficient() const;
  const Rational& trailing_coefficient() const;

  Rational coefficient(long exponent) const;
  bool has_integer_coefficients() const;
  /// Coefficients from min_exponent() upward, dense. Requires integer
  /// coefficients and a nonzero polynomial.
  std::vector<Integer> dense_integer_coefficients() const;

  Rational evaluate(const Rational& x) const;
  LaurentPolynomial derivative() const;
  /// Multiplication by t^k.
  LaurentPolynomial shifted(long k) const;
  LaurentPolynomial pow(unsigned long k) const;
  LaurentPolynomial with_variable(std::string variable) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a *= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

  /// Same terms; variable names must agree unless one side is constant.
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Descending exponents, explicit '*', e.g. "2*t^2 - 3*t + 1".
  std::string to_string() const;

 private:
  void merge_variable(const LaurentPolynomial& other);
  void prune();

  Terms terms_;
  std::string variable_ = "t";
};

/// Multiplies by ±t^k so that the minimal exponent is 0 and the leading
/// coefficient is positive. Throws DomainError on the zero polynomial.
LaurentPolynomial normalize(const LaurentPolynomial& f);

/// Positive gcd of the coefficients and f / gcd. Requires integer
/// coefficients and f != 0.
std::pair<Integer, LaurentPolynomial> content_and_primitive(const LaurentPolynomial& f);

/// 1 + t + ... + t^(n-1). Throws DomainError for n == 0.
LaurentPolynomial nu_polynomial(unsigned long n, std::string variable = "t");

/// Euclidean division over Q of ordinary polynomials (no negative exponents).
std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& a,
                                                       const LaurentPolynomial& b);

/// Monic gcd over Q of ordinary polynomials; gcd(0, 0) = 0.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// f(t + c) for an ordinary polynomial f.
LaurentPolynomial taylor_shift(const LaurentPolynomial& f, const Rational& c);

/// Yun's square-free decomposition over Q of a nonconstant ordinary
/// polynomial: f = lc * prod g_i^{m_i} with each g_i monic and square-free.
std::vector<std::pair<LaurentPolynomial, unsigned>> squarefree_decomposition(
    const LaurentPolynomial& f);

/// Multiplicity of (t - 1) in f, and the cofactor. Requires f != 0.
std::pair<unsigned, LaurentPolynomial> split_unit_root(const LaurentPolynomial& f);

}  // namespace pmahler
