#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

/// A place of Q: a prime, or kInfinity for the archimedean absolute value.
using Place = Prime;
inline constexpr Place kInfinity = 0;

std::string place_name(Place place);

// Logarithm of a Mahler measure. At a prime p the value is exactly
// log_p_coefficient * log p; at infinity it is `value` up to `abs_error`.
struct LogMeasure {
  Place place = kInfinity;
  Rational log_p_coefficient = 0;
  double value = 0;
  double abs_error = 0;

  bool exact() const { return place != kInfinity; }
  static LogMeasure finite(Place p, const Rational& coefficient);
  static LogMeasure archimedean(double value, double abs_error);
  /// "-1 log 2" at a prime, "0.962423650119 +- 1e-15" at infinity.
  std::string to_string() const;
};

/// log m(f) = log|a_0| + sum over roots with |alpha| > 1 of log|alpha|,
/// certified to absolute error <= tol. Throws ConvergenceError otherwise.
LogMeasure mahler_euclidean(const LaurentPolynomial& f, double tol = 1e-12);

/// log m_p(f) = -gauss_norm_valuation(f, p) * log p. The Newton polygon form
/// of Jensen's formula is checked against it on every call.
LogMeasure mahler_padic(const LaurentPolynomial& f, Prime p);

struct ConvergenceSample {
  unsigned long n;
  double estimate;
  /// At a prime: -v_p(R(f, nu_n)) / n, the exact coefficient of log p.
  std::optional<Rational> exact;
  /// gcd(n, p) = 1 (always true at infinity).
  bool restricted;
};

struct ConvergenceReport {
  Place place = kInfinity;
  std::vector<ConvergenceSample> samples;
  /// n <= n_max with R(f, nu_n) = 0; excluded from the sequence.
  std::vector<unsigned long> zero_resultant_ns;
  double limit = 0;
  /// Set when the restricted sequence is exactly affine in 1/n at the tail,
  /// so the limit is known as an exact multiple of log p.
  std::optional<Rational> exact_limit;
  /// Distance covering |limit - estimate| over the final samples.
  double abs_error = 0;
  LogMeasure closed_form;
  /// |estimate - closed form| is non-increasing over the last quartile of the
  /// restricted samples.
  bool error_shrinking = false;
  /// Largest |estimate - closed form| over the last quartile of all samples,
  /// including n divisible by p.
  double unrestricted_band = 0;
  std::vector<std::string> notes;

  std::vector<unsigned long> ns() const;
  std::vector<double> estimates() const;
};

/// Limit of (1/n) log|R(f, nu_n)|_v over n = 1..n_max. With
/// skip_p_multiples, n divisible by p are not sampled at all.
ConvergenceReport resultant_limit_estimate(const LaurentPolynomial& f, Place place,
                                           unsigned long n_max, bool skip_p_multiples = false);

}  // namespace pmahler
