#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/mahler.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/roots.hpp"
#include "pmahler/valuation.hpp"

using namespace pmahler;

namespace {

LaurentPolynomial P(const char* text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("euclidean measure examples") {
  const double golden_square = (3 + std::sqrt(5.0)) / 2;
  const LogMeasure a = mahler_euclidean(P("t^2 - 3*t + 1"));
  CHECK(a.place == kInfinity);
  CHECK(a.value == doctest::Approx(std::log(golden_square)).epsilon(1e-13));
  CHECK(a.value == doctest::Approx(0.9624236501).epsilon(1e-10));
  CHECK(a.abs_error <= 1e-12);

  CHECK(mahler_euclidean(P("t^2 - 4*t + 1")).value ==
        doctest::Approx(std::log(2 + std::sqrt(3.0))).epsilon(1e-13));
  CHECK(std::abs(mahler_euclidean(P("t^2 - t + 1")).value) < 1e-12);
  CHECK(std::abs(mahler_euclidean(P("t - 1")).value) < 1e-12);
  CHECK(mahler_euclidean(P("2")).value == doctest::Approx(std::log(2.0)));
  CHECK(mahler_euclidean(P("-3*t^5")).value == doctest::Approx(std::log(3.0)));
  // Repeated and rational roots: (t-2)^2 (t^2+1) (3t-1).
  CHECK(mahler_euclidean(P("(t-2)^2*(t^2+1)*(3*t-1)")).value ==
        doctest::Approx(std::log(12.0)).epsilon(1e-12));
  CHECK_THROWS_AS(mahler_euclidean(LaurentPolynomial()), DomainError);
  CHECK_THROWS_AS(mahler_euclidean(P("t^2 - 3*t + 1"), 1e-30), ConvergenceError);
}

TEST_CASE("euclidean measure against unit-circle quadrature") {
  std::mt19937_64 rng(4242);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<Integer> asc = oracle::random_coefficients(rng, 9, 20, 1);
    const long double coarse = oracle::circle_average_log(asc, 2048);
    const long double fine = oracle::circle_average_log(asc, 4096);
    if (std::abs(coarse - fine) > 1e-12L) continue;  // root too close to the circle
    const LogMeasure m = mahler_euclidean(LaurentPolynomial::from_ascending(asc));
    CHECK(std::abs(m.value - static_cast<double>(fine)) < 1e-9);
    ++compared;
  }
  CHECK(compared > 200);
}

TEST_CASE("root enclosures satisfy Vieta") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<Integer> asc = oracle::random_coefficients(rng, 8, 50, 1);
    const LaurentPolynomial f = LaurentPolynomial::from_ascending(asc);
    const auto factors = squarefree_decomposition(f);
    if (factors.size() != 1 || factors[0].second != 1) continue;
    const auto roots = isolate_roots(f);
    REQUIRE(roots.size() == asc.size() - 1);
    long double log_product = 0;
    for (const auto& r : roots) log_product += std::log(std::abs(r.center));
    const long double expected = std::log(std::abs(asc.front().get_d() / asc.back().get_d()));
    CHECK(std::abs(log_product - expected) < 1e-10L);
  }
}

TEST_CASE("padic measure examples") {
  const LogMeasure a = mahler_padic(P("2*t - 2"), 2);
  CHECK(a.exact());
  CHECK(a.log_p_coefficient == -1);
  CHECK(a.value == doctest::Approx(std::log(0.5)));
  for (Prime p : {2UL, 3UL, 5UL, 7UL, 97UL}) {
    CHECK(mahler_padic(P("t^2 - 3*t + 1"), p).log_p_coefficient == 0);
  }
  CHECK(mahler_padic(P("4*t^4 - 8*t^2 + 4"), 2).log_p_coefficient == -2);
  CHECK(mahler_padic(P("1/2*t + 1"), 2).log_p_coefficient == 1);
  CHECK(a.to_string() == "-1 log 2");
}

TEST_CASE("measure multiplicativity and unit invariance") {
  std::mt19937_64 rng(31337);
  const std::vector<Prime> primes = {2, 3, 5, 7, 11, 97};
  std::uniform_int_distribution<long> shift(-4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const LaurentPolynomial f = oracle::random_polynomial(rng, 5, 30, 1);
    const LaurentPolynomial g = oracle::random_polynomial(rng, 5, 30, 0);
    const double tol = 1e-10;
    const LogMeasure mf = mahler_euclidean(f, tol);
    const LogMeasure mg = mahler_euclidean(g, tol);
    const LogMeasure mfg = mahler_euclidean(f * g, tol);
    CHECK(std::abs(mfg.value - mf.value - mg.value) <= 2 * tol + mf.abs_error + mg.abs_error);
    const LaurentPolynomial unit_multiple = -f.shifted(shift(rng));
    CHECK(std::abs(mahler_euclidean(unit_multiple, tol).value - mf.value) <= 2 * tol);
    for (Prime p : primes) {
      CHECK(mahler_padic(f * g, p).log_p_coefficient ==
            mahler_padic(f, p).log_p_coefficient + mahler_padic(g, p).log_p_coefficient);
      CHECK(mahler_padic(unit_multiple, p).log_p_coefficient ==
            mahler_padic(f, p).log_p_coefficient);
    }
  }
}

TEST_CASE("resultant limit at infinity") {
  const ConvergenceReport r = resultant_limit_estimate(P("t^2 - 3*t + 1"), kInfinity, 200);
  const double target = std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(r.samples.size() == 200);
  CHECK(std::abs(r.limit - target) < 0.01);
  CHECK(std::abs(r.samples.back().estimate - target) < 0.01);
  CHECK(std::abs(r.limit - r.samples.back().estimate) <= r.abs_error + 1e-15);
  CHECK(r.error_shrinking);
  CHECK(r.closed_form.value == doctest::Approx(target));

  const ConvergenceReport u = resultant_limit_estimate(P("t - 1"), kInfinity, 50);
  for (const auto& s : u.samples) {
    CHECK(s.estimate == doctest::Approx(std::log(static_cast<double>(s.n)) / s.n));
  }
  CHECK(std::abs(u.closed_form.value) < 1e-12);

  // t^2 - t + 1 vanishes at primitive sixth roots of unity.
  const ConvergenceReport c = resultant_limit_estimate(P("t^2 - t + 1"), kInfinity, 30);
  CHECK(c.zero_resultant_ns == std::vector<unsigned long>{6, 12, 18, 24, 30});
  CHECK_THROWS_AS(resultant_limit_estimate(P("t - 1"), kInfinity, 7), DomainError);
}

TEST_CASE("resultant limit at a prime") {
  const ConvergenceReport r = resultant_limit_estimate(P("2*t - 2"), 2, 100, false);
  REQUIRE(r.exact_limit.has_value());
  CHECK(*r.exact_limit == -1);
  CHECK(r.limit == doctest::Approx(std::log(0.5)));
  CHECK(r.samples.size() == 100);
  for (const auto& s : r.samples) {
    // Oracle: R(2t-2, nu_n) = 2^{n-1} n up to sign.
    const long v = static_cast<long>(s.n) - 1 + valuation(Integer(s.n), 2);
    Rational expected(-v, static_cast<long>(s.n));
    expected.canonicalize();
    CHECK(*s.exact == expected);
    CHECK(s.restricted == (s.n % 2 == 1));
  }
  // The 2^r subsequence approaches -1 from below with deviation (r-1)/2^r.
  Rational previous = 1;
  for (const auto& s : r.samples) {
    if ((s.n & (s.n - 1)) != 0 || s.n < 4) continue;
    const Rational deviation = -1 - *s.exact;
    CHECK(deviation > 0);
    CHECK(deviation <= previous);
    previous = deviation;
  }
  CHECK(r.error_shrinking);

  const ConvergenceReport skipped = resultant_limit_estimate(P("2*t - 2"), 2, 100, true);
  CHECK(skipped.samples.size() == 50);
  CHECK(*skipped.exact_limit == -1);

  const ConvergenceReport flat = resultant_limit_estimate(P("2*t^2 - 5*t + 2"), 2, 40);
  CHECK(*flat.exact_limit == 0);
  CHECK(flat.closed_form.log_p_coefficient == 0);
}

TEST_CASE("estimator sandwich at a prime") {
  // Polynomials without roots on the p-adic unit circle: the restricted
  // estimates converge to the Gauss-norm value.
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 15; ++trial) {
    const LaurentPolynomial f = oracle::random_polynomial(rng, 4, 40, 1);
    for (Prime p : {2UL, 3UL, 5UL}) {
      if (newton_polygon(f, p).has_slope_zero()) continue;
      const ConvergenceReport r = resultant_limit_estimate(f, p, 60);
      const double target = r.closed_form.value;
      CHECK(std::abs(r.limit - target) <= r.abs_error + 1e-12);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}
