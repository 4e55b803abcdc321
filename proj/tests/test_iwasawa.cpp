#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/iwasawa.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/resultant.hpp"

using namespace pmahler;

namespace {

LaurentPolynomial P(const char* text) { return parse_laurent(text); }

// Weierstrass degree of A(1+T)/p^mu: the first index whose coefficient is a
// p-adic unit. The shift is expanded with binomial coefficients here.
long weierstrass_degree(const std::vector<Integer>& asc, Prime p) {
  std::vector<Integer> shifted(asc.size(), 0);
  for (std::size_t i = 0; i < asc.size(); ++i) {
    Integer binom = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      shifted[k] += asc[i] * binom;
      binom = binom * static_cast<unsigned long>(i - k) / static_cast<unsigned long>(k + 1);
    }
  }
  long mu = -1;
  for (const Integer& c : shifted) {
    if (c == 0) continue;
    const long v = valuation(c, p);
    if (mu < 0 || v < mu) mu = v;
  }
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    if (shifted[k] != 0 && valuation(shifted[k], p) == mu) return static_cast<long>(k);
  }
  return -1;
}

}  // namespace

TEST_CASE("mu examples") {
  CHECK(mu_invariant(P("2*t - 2"), 2) == 1);
  CHECK(mu_invariant(P("3*(t-1)"), 3) == 1);
  CHECK(mu_invariant(P("4*t^4 - 8*t^2 + 4"), 2) == 2);
  CHECK(mu_invariant(P("t^2 - 3*t + 1"), 7) == 0);
  CHECK_THROWS_AS(mu_invariant(LaurentPolynomial(), 2), DomainError);
}

TEST_CASE("lambda examples") {
  CHECK(lambda_invariant(P("2*(t-1)"), 2) == 1);
  CHECK(lambda_invariant(P("t^2 - 3*t + 1"), 2) == 0);
  CHECK(lambda_invariant(P("t^2 - 3*t + 1"), 5) == 0);
  CHECK(lambda_invariant(P("4*t^2 - 8*t + 4"), 2) == 2);
  // A(1+T) = T - 2 at p = 2 has its root at T = 2.
  CHECK(lambda_invariant(P("t - 3"), 2) == 1);
  CHECK(lambda_invariant(P("t - 3"), 5) == 0);
  CHECK_THROWS_AS(lambda_invariant(P("(t^2+1)*(t-2)"), 2), DomainError);
}

TEST_CASE("qhs3 examples") {
  CHECK(qhs3_check(P("t^2 - 3*t + 1"), 2));
  CHECK_FALSE(qhs3_check(P("(t^2+1)*(t-2)"), 2));
  CHECK_FALSE(qhs3_check(P("t + 1"), 2));
  CHECK(qhs3_check(P("t + 1"), 3));
  CHECK_FALSE(qhs3_check(P("t^2 + t + 1"), 3));
  CHECK_FALSE(qhs3_check(P("t^6 + t^3 + 1"), 3));
  // The trivial root is allowed: link polynomials carry the factor t - 1.
  CHECK(qhs3_check(P("t - 1"), 5));
  CHECK(qhs3_check(P("2*t - 2"), 2));
  CHECK(qhs3_check(P("4*t^2 - 8*t + 4"), 2));
  // Laurent representatives are normalized first.
  CHECK_FALSE(qhs3_check(P("t^-1 + 1"), 2));
}

TEST_CASE("fit examples") {
  const IwasawaInvariants a = fit_invariants(P("2*(t-1)"), 2, 6);
  CHECK(a.lambda == 1);
  CHECK(a.mu == 1);
  CHECK(*a.nu == -1);
  CHECK(a.r0 == 1);
  CHECK(a.source == InvariantSource::fitted);
  const std::vector<long> tower = tower_valuations(P("2*(t-1)"), 2, 6);
  for (long r = 1; r <= 6; ++r) CHECK(tower[r - 1] == (1L << r) - 1 + r);

  const IwasawaInvariants b = fit_invariants(P("t^2 - 3*t + 1"), 5, 4);
  CHECK(b.lambda == 0);
  CHECK(b.mu == 0);
  // Oracle: Sylvester resultants for the first two levels.
  const long e1 = valuation(cyclic_resultant_sylvester(P("t^2 - 3*t + 1"), 5, CyclicVariant::nu), 5);
  const long e2 = valuation(cyclic_resultant_sylvester(P("t^2 - 3*t + 1"), 25, CyclicVariant::nu), 5);
  CHECK(e1 == 0);  // the 5-fold cover has |H_1| = 121
  CHECK(*b.nu == e2);
  CHECK(e1 == e2);

  const IwasawaInvariants unit = fit_invariants(P("1"), 3, 6);
  CHECK(unit.lambda == 0);
  CHECK(unit.mu == 0);
  CHECK(*unit.nu == 0);
  CHECK(unit.r0 == 1);

  const IwasawaInvariants square = fit_invariants(P("4*t^2 - 8*t + 4"), 2, 6);
  CHECK(square.lambda == 2);
  CHECK(square.mu == 2);
  CHECK(*square.nu == -2);

  CHECK_THROWS_AS(fit_invariants(P("t + 1"), 2, 6), DomainError);
  CHECK_THROWS_AS(fit_invariants(P("t - 3"), 2, 2), DomainError);
}

TEST_CASE("consistency examples") {
  const ConsistencyReport a = verify_consistency(P("2*t - 2"), 2, 6);
  CHECK(a.consistent());
  CHECK(a.analytic.lambda == 1);
  CHECK(a.analytic.mu == 1);
  CHECK_FALSE(a.analytic.nu.has_value());
  CHECK(verify_consistency(P("t^2 - 3*t + 1"), 3, 6).consistent());
  CHECK(verify_consistency(P("t^2 - 3*t + 1"), 3, 6).fitted.mu == 0);
  CHECK_THROWS_AS(verify_consistency(P("(t^2+1)*(t-2)"), 2, 6), DomainError);
}

TEST_CASE("analytic and fitted invariants agree on random polynomials") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> content_pick(0, 5);
  const long contents[] = {1, 2, 3, 4, 9, 10};
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPolynomial A = oracle::random_polynomial(rng, 4, 12, 1) *
                          Rational(contents[content_pick(rng)]);
    if (trial % 3 == 0) A = A * P("t - 1");
    for (Prime p : {2UL, 3UL, 5UL, 7UL}) {
      if (!qhs3_check(A, p)) continue;
      const long r_max = p <= 3 ? 6 : 5;
      const ConsistencyReport rep = verify_consistency(A, p, r_max);
      CHECK(rep.consistent());
      for (long r = rep.fitted.r0; r <= r_max; ++r) {
        CHECK(rep.tower[r - 1] == rep.fitted.lambda * r +
                                      rep.fitted.mu * prime_power(p, r).get_si() + *rep.fitted.nu);
      }
      CHECK(rep.analytic.lambda == weierstrass_degree(normalize(A).dense_integer_coefficients(), p));
      CHECK(rep.analytic.mu == valuation(content_and_primitive(A).first, p));
      // Unit invariance.
      const LaurentPolynomial unit_multiple = -A.shifted(3);
      CHECK(lambda_invariant(unit_multiple, p) == rep.analytic.lambda);
      CHECK(*fit_invariants(unit_multiple, p, r_max).nu == *rep.fitted.nu);
      ++compared;
    }
  }
  CHECK(compared > 60);
}
