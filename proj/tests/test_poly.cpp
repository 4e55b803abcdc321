#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmahler/errors.hpp"
#include "pmahler/parser.hpp"
#include "pmahler/resultant.hpp"

using namespace pmahler;

namespace {

LaurentPolynomial P(const char* text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("parse univariate terms") {
  const LaurentPolynomial f = P("t^2 - 3*t + 1");
  CHECK(f.terms() == LaurentPolynomial::Terms{{0, 1}, {1, -3}, {2, 1}});
  CHECK(P("2*(t-1)").terms() == LaurentPolynomial::Terms{{0, -2}, {1, 2}});
  CHECK(P("1/2*t - 3/6").terms() == LaurentPolynomial::Terms{{0, Rational(-1, 2)}, {1, Rational(1, 2)}});
  CHECK(P("-t^-1 + 3 - t").terms() == LaurentPolynomial::Terms{{-1, -1}, {0, 3}, {1, -1}});
  CHECK(P("t^(-2)").terms() == LaurentPolynomial::Terms{{-2, 1}});
  CHECK(P("(2*t)^-1").terms() == LaurentPolynomial::Terms{{-1, Rational(1, 2)}});
  CHECK(P("7").variable() == "t");
  CHECK(P("x^3 - x").variable() == "x");
}

TEST_CASE("parse bivariate") {
  ParsedPolynomial parsed = parse_polynomial("1 + x*y");
  auto* m = std::get_if<MultivariatePolynomial>(&parsed);
  REQUIRE(m != nullptr);
  CHECK(m->variables() == std::vector<std::string>{"x", "y"});
  CHECK(m->terms() == MultivariatePolynomial::Terms{{{0, 0}, 1}, {{1, 1}, 1}});
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("2t"), ParseError);
  try {
    P("t^2 + * 3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(P("(t+1)^-1"), ParseError);
  CHECK_THROWS_AS(P("t^"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("(t+1"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(parse_multivariate("x*z", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(parse_multivariate("x*y/2", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(parse_multivariate("1/2*x*y", {"x", "y"}), DomainError);
  CHECK_THROWS_AS(parse_laurent("x*y"), DomainError);
}

TEST_CASE("substitute_onevar") {
  const auto one_plus_xy = parse_multivariate("1 + x*y", {"x", "y"});
  CHECK(substitute_onevar(one_plus_xy, {1, -1}) == LaurentPolynomial::constant(2));
  CHECK(substitute_onevar(one_plus_xy, {1, 1}) == P("1 + t^2"));
  const auto l623 = parse_multivariate("2 - x - y + 2*x*y", {"x", "y"});
  CHECK(normalize(substitute_onevar(l623, {1, 1})) == P("2*(t^2 - t + 1)"));
  CHECK_THROWS_AS(substitute_onevar(one_plus_xy, {1}), DomainError);
}

TEST_CASE("normalize") {
  CHECK(normalize(P("-t^-1 + 3 - t")) == P("t^2 - 3*t + 1"));
  CHECK(normalize(P("2*t - 2")) == P("2*t - 2"));
  CHECK(normalize(P("-2*t^-3")) == P("2"));
  CHECK_THROWS_AS(normalize(LaurentPolynomial()), DomainError);
}

TEST_CASE("content_and_primitive") {
  auto [c1, p1] = content_and_primitive(P("4*t^4 - 8*t^2 + 4"));
  CHECK(c1 == 4);
  CHECK(p1 == P("t^4 - 2*t^2 + 1"));
  auto [c2, p2] = content_and_primitive(P("t^2 - 3*t + 1"));
  CHECK(c2 == 1);
  CHECK(p2 == P("t^2 - 3*t + 1"));
  CHECK(content_and_primitive(P("2*t^2 - 5*t + 2")).first == 1);
  CHECK_THROWS_AS(content_and_primitive(LaurentPolynomial()), DomainError);
  CHECK_THROWS_AS(content_and_primitive(P("1/2*t")), DomainError);
}

TEST_CASE("resultant examples") {
  // Product formula with monic linear factors: (2 - 3).
  CHECK(resultant(P("t - 2"), P("t - 3")) == -1);
  CHECK(resultant(P("1"), P("t^2 + 1")) == 1);
  CHECK(resultant(LaurentPolynomial(), P("t^2 + 1")) == 0);
  // (-1)^{2*1} * f(-1) with g = t + 1 monic.
  CHECK(resultant(P("t^2 - 3*t + 1"), P("t + 1")) == 5);
  // a^{deg g} g(alpha) = (1/2) * (2 - 3).
  CHECK(resultant(P("1/2*t - 1"), P("t - 3")) == Rational(-1, 2));
  CHECK(resultant(P("t^2 - 1"), P("t - 1")) == 0);
}

TEST_CASE("nu_polynomial") {
  CHECK(nu_polynomial(1) == P("1"));
  CHECK(nu_polynomial(2) == P("t + 1"));
  CHECK(nu_polynomial(4) == P("t^3 + t^2 + t + 1"));
  CHECK_THROWS_AS(nu_polynomial(0), DomainError);
}

TEST_CASE("cyclic_resultant examples") {
  CHECK(cyclic_resultant(P("t^2 - 3*t + 1"), 2, CyclicVariant::nu) == 5);
  // 2^{n-1} nu_n(1) = 4 * 3.
  CHECK(cyclic_resultant(P("2*t - 2"), 3, CyclicVariant::nu) == 12);
  CHECK(cyclic_resultant(P("t - 1"), 5, CyclicVariant::full) == 0);
  CHECK(cyclic_resultant(P("3"), 4, CyclicVariant::full) == 81);
  CHECK(cyclic_resultant(P("3"), 4, CyclicVariant::nu) == 27);
  CHECK_THROWS_AS(cyclic_resultant(LaurentPolynomial(), 3, CyclicVariant::nu), DomainError);
  CHECK_THROWS_AS(cyclic_resultant(P("t - 1"), 0, CyclicVariant::nu), DomainError);
}

TEST_CASE("polynomial utilities") {
  auto [q, r] = divmod(P("t^3 - 1"), P("t - 1"));
  CHECK(q == P("t^2 + t + 1"));
  CHECK(r.is_zero());
  CHECK(gcd(P("t^2 - 1"), P("2*t^2 - 4*t + 2")) == P("t - 1"));
  CHECK(taylor_shift(P("t^2 - 3*t + 1"), 1) == P("t^2 - t - 1"));
  CHECK(taylor_shift(P("2*t - 2"), 1) == P("2*t"));
  auto sqf = squarefree_decomposition(P("4*(t^2 - 1)^2*(t - 1)"));
  REQUIRE(sqf.size() == 2);
  CHECK(sqf[0] == std::pair{P("t + 1"), 2u});
  CHECK(sqf[1] == std::pair{P("t - 1"), 3u});
  auto [mult, rest] = split_unit_root(P("(t - 1)^2*(2*t + 3)"));
  CHECK(mult == 2);
  CHECK(rest == P("2*t + 3"));
  CHECK(P("t^2 - 3*t + 1").evaluate(Rational(1, 2)) == Rational(-1, 4));
  CHECK(P("t^-1 + t").evaluate(2) == Rational(5, 2));
}

TEST_CASE("property: print/parse round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7), exps(-4, 6);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPolynomial::Terms terms;
    const int count = static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      terms[exps(rng)] += c;
    }
    const LaurentPolynomial f(terms, "t");
    CAPTURE(f.to_string());
    CHECK(parse_laurent(f.to_string()) == f);
  }
  std::uniform_int_distribution<long> small(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    MultivariatePolynomial::Terms terms;
    for (int i = 0; i < 5; ++i) terms[{small(rng), small(rng), small(rng)}] += num(rng);
    const MultivariatePolynomial m({"x", "y", "z"}, terms);
    if (m.is_zero()) continue;
    CAPTURE(m.to_string());
    CHECK(parse_multivariate(m.to_string(), {"x", "y", "z"}) == m);
  }
}

TEST_CASE("property: resultant multiplicativity and swap rule") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_polynomial(rng, 6, 20);
    const auto g = oracle::random_polynomial(rng, 6, 20);
    const auto h = oracle::random_polynomial(rng, 6, 20);
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    const long sign = (normalize(f).max_exponent() * normalize(g).max_exponent()) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == sign * resultant(g, f));
  }
}

TEST_CASE("property: Bareiss Sylvester determinant matches Leibniz expansion") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const auto fa = oracle::random_coefficients(rng, 4, 9);
    const auto ga = oracle::random_coefficients(rng, 4, 9);
    auto fp = normalize(LaurentPolynomial::from_ascending(fa));
    auto gp = normalize(LaurentPolynomial::from_ascending(ga));
    CHECK(resultant(fp, gp) ==
          oracle::leibniz_resultant(fp.dense_integer_coefficients(), gp.dense_integer_coefficients()));
  }
}

TEST_CASE("property: companion fast path equals Sylvester oracle, n <= 50") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const auto f = oracle::random_polynomial(rng, 4, 12);
    CAPTURE(f.to_string());
    for (unsigned long n = 1; n <= 50; n += (trial % 3 == 0 ? 1 : 7)) {
      CHECK(cyclic_resultant(f, n, CyclicVariant::full) ==
            cyclic_resultant_sylvester(f, n, CyclicVariant::full));
      CHECK(cyclic_resultant(f, n, CyclicVariant::nu) ==
            cyclic_resultant_sylvester(f, n, CyclicVariant::nu));
    }
  }
  // Non-monic with content and a unit root.
  for (const char* text : {"4*t^2 - 10*t + 4", "2*t - 2", "6*t^3 - 6*t", "(t - 1)^2*(2*t + 1)"}) {
    for (unsigned long n = 1; n <= 50; ++n) {
      CHECK(cyclic_resultant(P(text), n, CyclicVariant::nu) ==
            cyclic_resultant_sylvester(P(text), n, CyclicVariant::nu));
    }
  }
}

TEST_CASE("property: full variant equals nu variant times f(1)") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = normalize(oracle::random_polynomial(rng, 6, 20));
    const Rational f1 = f.evaluate(1);
    if (f1 == 0) continue;
    // R(f, t - 1) = (-1)^{deg f} f(1) under the signed convention.
    const Rational r_unit = (f.max_exponent() % 2 ? -f1 : f1);
    for (unsigned long n = 1; n <= 30; n += 3) {
      CHECK(Rational(cyclic_resultant(f, n, CyclicVariant::full)) ==
            Rational(cyclic_resultant(f, n, CyclicVariant::nu)) * r_unit);
      CHECK(abs(cyclic_resultant(f, n, CyclicVariant::full)) ==
            abs(Rational(cyclic_resultant(f, n, CyclicVariant::nu)) * f1));
    }
  }
  const std::vector<unsigned long> ns{1, 2, 3, 10, 64};
  const auto batch = cyclic_resultants(P("t^2 - 3*t + 1"), ns, CyclicVariant::nu);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(batch[i] == cyclic_resultant(P("t^2 - 3*t + 1"), ns[i], CyclicVariant::nu));
  }
}
