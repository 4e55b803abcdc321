#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace oracle {

using pmahler::Integer;
using pmahler::LaurentPolynomial;
using pmahler::Rational;

// Determinant by the Leibniz permutation expansion.
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Integer prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
    total += (inversions % 2 ? -prod : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Resultant of ordinary integer polynomials (ascending coefficients, nonzero
// leading term) by Leibniz expansion of a Sylvester matrix built here.
inline Integer leibniz_resultant(const std::vector<Integer>& f_asc,
                                 const std::vector<Integer>& g_asc) {
  const std::size_t m = f_asc.size() - 1;
  const std::size_t n = g_asc.size() - 1;
  if (m == 0 && n == 0) return 1;
  std::vector<std::vector<Integer>> s(m + n, std::vector<Integer>(m + n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f_asc[m - j];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g_asc[n - j];
  }
  return leibniz_det(s);
}

// Random ordinary polynomial with nonzero leading and constant terms.
inline std::vector<Integer> random_coefficients(std::mt19937_64& rng, int max_degree,
                                                long height, int min_degree = 0) {
  std::uniform_int_distribution<int> deg_dist(min_degree, max_degree);
  std::uniform_int_distribution<long> coeff(-height, height);
  const int d = deg_dist(rng);
  std::vector<Integer> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  while (c.front() == 0) c.front() = coeff(rng);
  return c;
}

inline LaurentPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, long height,
                                           int min_degree = 0) {
  return LaurentPolynomial::from_ascending(random_coefficients(rng, max_degree, height, min_degree));
}

// Complex evaluation in long double.
inline std::complex<long double> evaluate(const std::vector<Integer>& asc,
                                          std::complex<long double> z) {
  std::complex<long double> acc = 0;
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * z + (long double)it->get_d();
  return acc;
}

// (1/K) sum_k log|f(e^{2 pi i k / K})|: the unit-circle average defining the
// Euclidean log Mahler measure, by the trapezoidal rule.
inline long double circle_average_log(const std::vector<Integer>& asc, int samples) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double sum = 0;
  for (int k = 0; k < samples; ++k) {
    const long double theta = 2 * pi * (k + 0.5L) / samples;
    sum += std::log(std::abs(evaluate(asc, std::polar(1.0L, theta))));
  }
  return sum / samples;
}

// Reduce an exact rational with p-integral value modulo p^k.
inline Integer reduce_mod(const Rational& q, const Integer& modulus) {
  Integer den_inv;
  Integer den = q.get_den();
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = (q.get_num() * den_inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace oracle
