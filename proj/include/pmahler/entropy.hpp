#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/mahler.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

/// h_p = (v_p(a_0) - min_i v_p(a_i)) log p, a_0 the leading coefficient.
/// Cross-checked against the positive-slope part of the Newton polygon.
LogMeasure entropy_padic(const LaurentPolynomial& A, Prime p);

struct EntropyReport {
  LaurentPolynomial polynomial;
  Integer leading;  // a_0, sign included
  Integer content;
  std::vector<std::pair<Prime, unsigned long>> content_factors;
  /// Primes with h_p != 0, ascending; each value is exact.
  std::vector<LogMeasure> h_finite;
  LogMeasure h_inf;
  /// Sum over all places.
  double total = 0;
  double total_error = 0;
  /// log m of the primitive part; Yuzvinski predicts total equals it.
  LogMeasure primitive_measure;
  /// sum of log|alpha| over roots outside the unit disc, from the monic
  /// rational polynomial A / a_0. Should equal h_inf.
  LogMeasure root_check;
  bool total_matches = false;
  bool roots_match = false;
  /// prod_p p^{h_p / log p} == |a_0| / content, exactly.
  bool yuzvinski_product_matches = false;
};

/// Full decomposition h = h_inf + sum_p h_p. tol bounds the archimedean error.
EntropyReport entropy_total(const LaurentPolynomial& A, double tol = 1e-12,
                            const Integer& trial_division_bound = Integer(1000000000));

struct BalanceReport {
  Prime prime = 2;
  long lead_valuation = 0;    // -log|a_0|_p / log p
  Rational entropy = 0;       // h_p / log p
  long mu = 0;
  bool holds = false;
};

/// v_p(a_0) log p = h_p + mu_p log p as exact multiples of log p.
BalanceReport balance_check(const LaurentPolynomial& A, Prime p);

struct LeadingCoefficientReport {
  Integer leading;
  std::vector<BalanceReport> primes;  // one per prime dividing a_0
  bool holds = false;
};

/// log|a_0| = sum_p (h_p + mu_p log p), verified prime by prime after
/// factoring a_0 by trial division. Throws DomainError above the bound.
LeadingCoefficientReport leading_coeff_identity(
    const LaurentPolynomial& A, const Integer& trial_division_bound = Integer(1000000000));

}  // namespace pmahler
