#include "pmahler/numeric.hpp"

#include <cmath>

#include "pmahler/errors.hpp"

namespace pmahler {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                              31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(Prime p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
}

long valuation(const Integer& n, Prime p) {
  if (n == 0) throw DomainError("valuation of zero is infinite");
  Integer pz(static_cast<unsigned long>(p));
  Integer tmp;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Integer strip_prime(const Integer& n, Prime p) {
  if (n == 0) return n;
  Integer pz(static_cast<unsigned long>(p));
  Integer out;
  mpz_remove(out.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return out;
}

Integer prime_power(Prime p, unsigned long k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), k);
  return out;
}

std::vector<std::pair<Prime, unsigned long>> factor_by_trial_division(const Integer& n,
                                                                      const Integer& bound) {
  Integer m = abs(n);
  if (m == 0) throw DomainError("cannot factor zero");
  if (m > bound) {
    throw DomainError("integer " + m.get_str() + " exceeds the trial-division bound " +
                      bound.get_str());
  }
  std::vector<std::pair<Prime, unsigned long>> factors;
  for (unsigned long q = 2; Integer(q) * q <= m; q += (q == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      m /= q;
      ++e;
    }
    if (e > 0) factors.emplace_back(q, e);
  }
  if (m > 1) factors.emplace_back(m.get_ui(), 1);
  return factors;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

double log_abs(const Integer& z) {
  if (z == 0) throw DomainError("log of zero");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace pmahler
