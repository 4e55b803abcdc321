#include "pmahler/entropy.hpp"

#include <cmath>

#include "pmahler/errors.hpp"
#include "pmahler/iwasawa.hpp"
#include "pmahler/valuation.hpp"

namespace pmahler {

namespace {

void require_integral(const LaurentPolynomial& A) {
  if (A.is_zero()) throw DomainError("entropy of the zero polynomial");
  if (!A.has_integer_coefficients()) throw DomainError("entropy needs integer coefficients");
}

}  // namespace

LogMeasure entropy_padic(const LaurentPolynomial& A, Prime p) {
  if (A.is_zero()) throw DomainError("entropy of the zero polynomial");
  const Rational h = Rational(vp(A.leading_coefficient(), p).value() - gauss_norm_valuation(A, p));
  if (newton_polygon(A, p).outside_weight() != h) {
    throw std::logic_error("p-adic entropy disagrees with the Newton polygon");
  }
  return LogMeasure::finite(p, h);
}

EntropyReport entropy_total(const LaurentPolynomial& A, double tol,
                            const Integer& trial_division_bound) {
  require_integral(A);
  EntropyReport report;
  report.polynomial = A;
  report.leading = A.leading_coefficient().get_num();
  const auto [content, primitive] = content_and_primitive(A);
  report.content = content;
  report.content_factors = factor_by_trial_division(content, trial_division_bound);

  // |a_0| / content is the leading coefficient of the primitive part, and
  // only its primes carry finite entropy.
  const Integer s = abs(Integer(primitive.leading_coefficient().get_num()));
  double finite_sum = 0;
  Integer product = 1;
  for (const auto& [p, e] : factor_by_trial_division(s, trial_division_bound)) {
    LogMeasure h = entropy_padic(A, p);
    if (h.log_p_coefficient == 0) continue;
    finite_sum += h.value;
    product *= prime_power(p, h.log_p_coefficient.get_num().get_ui());
    report.h_finite.push_back(std::move(h));
  }
  report.yuzvinski_product_matches = product == s;

  report.primitive_measure = mahler_euclidean(primitive, tol);
  const double log_s = log_abs(s);
  report.h_inf = LogMeasure::archimedean(report.primitive_measure.value - log_s,
                                         report.primitive_measure.abs_error + 1e-15 * (log_s + 1));
  const LaurentPolynomial monic = primitive * (Rational(1) / primitive.leading_coefficient());
  const LogMeasure roots = mahler_euclidean(monic, tol);
  report.root_check = roots;
  report.roots_match = std::abs(roots.value - report.h_inf.value) <=
                       roots.abs_error + report.h_inf.abs_error + tol;
  report.total = report.h_inf.value + finite_sum;
  report.total_error = report.h_inf.abs_error + 1e-15 * (std::abs(finite_sum) + 1);
  report.total_matches =
      std::abs(report.total - report.primitive_measure.value) <= 2 * tol;
  return report;
}

BalanceReport balance_check(const LaurentPolynomial& A, Prime p) {
  require_integral(A);
  BalanceReport r;
  r.prime = p;
  r.lead_valuation = vp(A.leading_coefficient(), p).value();
  r.entropy = entropy_padic(A, p).log_p_coefficient;
  r.mu = mu_invariant(A, p);
  r.holds = Rational(r.lead_valuation) == r.entropy + r.mu;
  return r;
}

LeadingCoefficientReport leading_coeff_identity(const LaurentPolynomial& A,
                                                const Integer& trial_division_bound) {
  require_integral(A);
  LeadingCoefficientReport report;
  report.leading = A.leading_coefficient().get_num();
  report.holds = true;
  for (const auto& [p, e] : factor_by_trial_division(report.leading, trial_division_bound)) {
    BalanceReport b = balance_check(A, p);
    report.holds = report.holds && b.holds && b.lead_valuation == static_cast<long>(e);
    report.primes.push_back(std::move(b));
  }
  return report;
}

}  // namespace pmahler
