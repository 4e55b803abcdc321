#include "pmahler/iwasawa.hpp"

#include "pmahler/errors.hpp"
#include "pmahler/mahler.hpp"
#include "pmahler/resultant.hpp"
#include "pmahler/valuation.hpp"

namespace pmahler {

namespace {

LaurentPolynomial cyclotomic_prime_power(Prime p, unsigned long r) {
  // Phi_{p^r}(t) = nu_p(t^{p^{r-1}}).
  const long step = prime_power(p, r - 1).get_si();
  LaurentPolynomial::Terms terms;
  for (unsigned long k = 0; k < p; ++k) terms[static_cast<long>(k) * step] = 1;
  return LaurentPolynomial(std::move(terms));
}

void require_integral(const LaurentPolynomial& A) {
  if (A.is_zero()) throw DomainError("Iwasawa invariants of the zero polynomial");
  if (!A.has_integer_coefficients()) {
    throw DomainError("Iwasawa invariants need integer coefficients");
  }
}

long ipow(Prime p, long r) { return prime_power(p, static_cast<unsigned long>(r)).get_si(); }

}  // namespace

std::string to_string(InvariantSource source) {
  return source == InvariantSource::analytic ? "analytic" : "fitted";
}

long mu_invariant(const LaurentPolynomial& A, Prime p) {
  require_integral(A);
  return gauss_norm_valuation(A, p);
}

bool qhs3_check(const LaurentPolynomial& A, Prime p) {
  require_integral(A);
  require_prime(p);
  const LaurentPolynomial f = normalize(A);
  const long degree = f.max_exponent();
  for (unsigned long r = 1;; ++r) {
    const Integer phi = prime_power(p, r - 1) * (p - 1);
    if (phi > degree) return true;
    if (divmod(f, cyclotomic_prime_power(p, r)).second.is_zero()) return false;
  }
}

long lambda_invariant(const LaurentPolynomial& A, Prime p) {
  if (!qhs3_check(A, p)) {
    throw DomainError("A vanishes at a nontrivial p-power root of unity");
  }
  const long mu = mu_invariant(A, p);
  const LaurentPolynomial shifted =
      taylor_shift(normalize(A), 1) * Rational(1, prime_power(p, static_cast<unsigned long>(mu)));
  // Roots at T = 0 are not on the polygon of the shifted-down polynomial.
  const long zero_multiplicity = shifted.min_exponent();
  long inside = 0;
  for (const PolygonSegment& s : newton_polygon(shifted, p).segments) {
    if (s.slope < 0) inside += s.length;
  }
  return zero_multiplicity + inside;
}

std::vector<long> tower_valuations(const LaurentPolynomial& A, Prime p, long r_max) {
  require_integral(A);
  require_prime(p);
  std::vector<unsigned long> ns;
  for (long r = 1; r <= r_max; ++r) ns.push_back(static_cast<unsigned long>(ipow(p, r)));
  const std::vector<Integer> values = cyclic_resultants(A, ns, CyclicVariant::nu);
  std::vector<long> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) {
      throw DomainError("R(A, nu_" + std::to_string(ns[i]) + ") vanishes");
    }
    out.push_back(valuation(values[i], p));
  }
  return out;
}

namespace {

IwasawaInvariants fit_tower(const std::vector<long>& e, Prime p) {
  const long r_max = static_cast<long>(e.size());
  auto at = [&](long r) { return e[static_cast<std::size_t>(r - 1)]; };

  // Solve on the last three points, then extend the window downward.
  const long r = r_max - 2;
  const long d0 = at(r + 1) - at(r);
  const long d1 = at(r + 2) - at(r + 1);
  const long scale = ipow(p, r) * static_cast<long>((p - 1) * (p - 1));
  if ((d1 - d0) % scale != 0) {
    throw ConvergenceError("tower valuations do not fit the Iwasawa model; raise r_max");
  }
  IwasawaInvariants inv;
  inv.prime = p;
  inv.source = InvariantSource::fitted;
  inv.mu = (d1 - d0) / scale;
  inv.lambda = d0 - inv.mu * ipow(p, r) * static_cast<long>(p - 1);
  const long nu = at(r) - inv.lambda * r - inv.mu * ipow(p, r);
  if (inv.mu < 0 || inv.lambda < 0) {
    throw ConvergenceError("fitted Iwasawa invariants are negative; raise r_max");
  }
  inv.nu = nu;
  inv.r0 = r;
  while (inv.r0 > 1 && at(inv.r0 - 1) == inv.lambda * (inv.r0 - 1) +
                                             inv.mu * ipow(p, inv.r0 - 1) + nu) {
    --inv.r0;
  }
  return inv;
}

std::vector<long> checked_tower(const LaurentPolynomial& A, Prime p, long r_max) {
  if (r_max < 3) throw DomainError("fit_invariants needs r_max >= 3");
  if (!qhs3_check(A, p)) {
    throw DomainError("A vanishes at a nontrivial p-power root of unity");
  }
  return tower_valuations(A, p, r_max);
}

}  // namespace

IwasawaInvariants fit_invariants(const LaurentPolynomial& A, Prime p, long r_max) {
  return fit_tower(checked_tower(A, p, r_max), p);
}

ConsistencyReport verify_consistency(const LaurentPolynomial& A, Prime p, long r_max) {
  ConsistencyReport report;
  report.tower = checked_tower(A, p, r_max);
  report.fitted = fit_tower(report.tower, p);
  report.analytic.prime = p;
  report.analytic.source = InvariantSource::analytic;
  report.analytic.mu = mu_invariant(A, p);
  report.analytic.lambda = lambda_invariant(A, p);
  report.lambda_agrees = report.analytic.lambda == report.fitted.lambda;
  report.mu_agrees = report.analytic.mu == report.fitted.mu;
  report.mahler_agrees = mahler_padic(A, p).log_p_coefficient == -report.analytic.mu;
  return report;
}

}  // namespace pmahler
