#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/pure.hpp"
#include "pmahler/resultant.hpp"
#include "pmahler/valuation.hpp"

using namespace pmahler;

namespace {

LaurentPolynomial P(const char* text) { return parse_laurent(text); }

// r with r^2 = c mod 2^bits and r = 1 mod 4, extended one bit at a time.
Integer square_root_mod_power_of_two(long c, long bits) {
  Integer r = 1;
  for (long k = 3; k < bits; ++k) {
    const Integer m = prime_power(2, static_cast<unsigned long>(k + 1));
    const Integer step = prime_power(2, static_cast<unsigned long>(k - 1));
    for (const Integer& candidate : std::vector<Integer>{r, r + step}) {
      Integer diff = candidate * candidate - c;
      diff %= m;
      if (diff == 0) {
        r = candidate;
        break;
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("definedness") {
  CHECK(mp_defined_check(P("2*t^2 - 3*t + 2"), 2));
  CHECK_FALSE(mp_defined_check(P("t^2 - 3*t + 1"), 2));
  CHECK(mp_defined_check(P("t - 2"), 2));
  CHECK(mp_defined_check(P("3"), 5));
  CHECK_THROWS_AS(mp_estimator(P("t^2 - 3*t + 1"), 2, 40, 10), DomainError);
  CHECK_THROWS_AS(mp_closed_form(P("t^2 - 3*t + 1"), 2, 10), DomainError);
}

TEST_CASE("twist knot measure") {
  const LaurentPolynomial f = P("2*t^2 - 3*t + 2");
  const long N = 30;
  const PurePadicResult closed = mp_closed_form(f, 2, N);
  CHECK(closed.method == PureMethod::closed_form);
  CHECK(closed.certified_digits() == N);
  REQUIRE(closed.roots.size() == 1);
  const LiftedRoot& root = closed.roots[0];
  CHECK(root.scale_exponent == 1);
  CHECK(root.residual == parse_laurent("s^2 - 3*s + 4").with_variable("s"));
  const Integer s = root.unit.residue(N);
  CHECK((s * s - 3 * s + 4) % prime_power(2, N) == 0);

  // Oracle route: sqrt(-7) by bit extension, then log_2(3 - sqrt(-7)).
  const Integer r = square_root_mod_power_of_two(-7, N + 4);
  const PadicNumber expected =
      padic_log(PadicNumber::from_residue(3 - r + prime_power(2, N + 4), 2, N + 4));
  CHECK(closed.value.agreement(expected) >= N);

  const PurePadicResult est = mp_estimator(f, 2, 80, N);
  CHECK(est.heuristic_certificate);
  CHECK(est.certified_digits() == N);
  CHECK(est.value.agreement(closed.value) >= N);

  const PurePadicResult h = hbar_p(f, 2, 80, N);
  REQUIRE(h.cross_check_digits.has_value());
  CHECK(*h.cross_check_digits >= 20);
  CHECK_THROWS_AS(hbar_p(f, 2, 80, N, false), DomainError);
  CHECK(est.to_string().find("[estimator]") != std::string::npos);
}

TEST_CASE("closed form shapes") {
  const long N = 12;
  // Only inside roots: log_p of the leading coefficient.
  CHECK(mp_closed_form(P("t - 5"), 5, N).value.is_zero());
  CHECK(mp_closed_form(P("t - 2"), 2, N).value.is_zero());
  // Only outside roots: constant-term shortcut.
  const PurePadicResult out = mp_closed_form(P("3*t - 1"), 3, N);
  CHECK(out.method == PureMethod::norm_shortcut);
  CHECK(out.value.is_zero());
  const PurePadicResult c = mp_closed_form(P("3"), 5, N);
  CHECK(c.value.agreement(padic_log(PadicNumber::from_integer(3, 5, N))) >= N);
  // 2t^2 - 5t + 2 = (2t - 1)(t - 2): lifted outside root 1/2, m_2 = 0.
  CHECK(mp_closed_form(P("2*t^2 - 5*t + 2"), 2, N).value.is_zero());
  // Outside roots of valuation -1/2 cannot be lifted in Q_2, but the inside
  // root 6 can, so Jensen runs through the inside.
  const PurePadicResult mixed = mp_closed_form(P("(2*t^2 - 1)*(t - 6)"), 2, N);
  CHECK(mixed.roots.size() == 1);
  CHECK(mixed.value.agreement(mp_estimator(P("(2*t^2 - 1)*(t - 6)"), 2, 60, N).value) >= N);
  // Neither side liftable over Q_2.
  CHECK_THROWS_AS(mp_closed_form(P("(2*t^2 - 1)*(t^2 - 2)"), 2, N), UnsupportedError);
}

TEST_CASE("estimator examples") {
  const long N = 15;
  // t - c with v_p(c) > 0 has m_p = 0.
  for (long c : {3L, 6L, 9L}) {
    LaurentPolynomial f = LaurentPolynomial::from_ascending({Integer(-c), Integer(1)});
    const PurePadicResult r = mp_estimator(f, 3, 60, N);
    CHECK(r.value.is_zero());
    CHECK(r.certified_digits() == N);
  }
  const PurePadicResult three = mp_estimator(P("3"), 5, 40, N);
  CHECK(three.value.agreement(padic_log(PadicNumber::from_integer(3, 5, N))) >= N);
  CHECK(mp_estimator(P("1"), 7, 40, N).value.is_zero());
  CHECK(hbar_p(P("3*t - 1"), 3, 60, N).value.is_zero());
  CHECK(hbar_p(P("1"), 3, 60, N).value.is_zero());
  CHECK_THROWS_AS(mp_estimator(P("t - 3"), 3, 5, N), DomainError);
}

TEST_CASE("link growth") {
  const long N = 12;
  const PurePadicResult a = pure_link_growth(P("2*(t-1)"), 2, 3, 60, N);
  CHECK(a.value.agreement(padic_log(PadicNumber::from_integer(2, 3, N))) >= N);
  CHECK(pure_link_growth(P("2*(t-1)"), 2, 2, 60, N).value.is_zero());
  CHECK(pure_link_growth(P("(1-t)^2"), 3, 5, 60, N).value.is_zero());
  const PurePadicResult knot = pure_link_growth(P("2*t^2 - 3*t + 2"), 1, 2, 80, N);
  CHECK(knot.value.agreement(mp_closed_form(P("2*t^2 - 3*t + 2"), 2, N).value) >= N);
  CHECK_THROWS_AS(pure_link_growth(P("2*(t-1)"), 1, 3, 60, N), DomainError);
  CHECK_THROWS_AS(pure_link_growth(P("(t-1)^2"), 2, 3, 60, N), DomainError);
}

TEST_CASE("pure measure properties") {
  std::mt19937_64 rng(555);
  const long N = 10;
  int agreed = 0;
  for (int trial = 0; trial < 120 && agreed < 40; ++trial) {
    const LaurentPolynomial f = oracle::random_polynomial(rng, 4, 30, 1);
    for (Prime p : {2UL, 3UL, 5UL}) {
      if (!mp_defined_check(f, p)) continue;
      bool zero = false;
      for (unsigned long n = 1; n <= 60 && !zero; ++n) {
        zero = n % p != 0 && cyclic_resultant(f, n, CyclicVariant::full) == 0;
      }
      if (zero) continue;
      const PurePadicResult est = mp_estimator(f, p, 60, N);
      // Iwasawa normalization: p f has the same measure.
      CHECK(mp_estimator(f * Rational(static_cast<long>(p)), p, 60, N).value.agreement(est.value) >=
            est.certified_digits());
      try {
        const PurePadicResult cf = mp_closed_form(f, p, N);
        CHECK(cf.value.agreement(est.value) >=
              std::min(cf.certified_digits(), est.certified_digits()));
        ++agreed;
      } catch (const UnsupportedError&) {
      }
      // log_p R(f, t^n - 1) = log_p R(f, nu_n) + log_p f(1).
      const Integer f1 = f.evaluate(1).get_num();
      if (f1 != 0) {
        for (unsigned long n : {7UL, 11UL}) {
          const auto full = padic_log(PadicNumber::from_integer(
              cyclic_resultant(f, n, CyclicVariant::full), p, N));
          const auto nu = padic_log(
              PadicNumber::from_integer(cyclic_resultant(f, n, CyclicVariant::nu), p, N));
          const auto at_one = padic_log(PadicNumber::from_integer(f1, p, N));
          CHECK(full.agreement(nu + at_one) >= N);
        }
      }
    }
  }
  CHECK(agreed >= 20);

  // Additivity over factors.
  const LaurentPolynomial f = P("2*t^2 - 3*t + 2");
  const LaurentPolynomial g = P("t - 6");
  const auto mf = mp_closed_form(f, 2, N).value;
  const auto mg = mp_closed_form(g, 2, N).value;
  CHECK(mp_estimator(f * g, 2, 80, N).value.agreement(mf + mg) >= N);
}
