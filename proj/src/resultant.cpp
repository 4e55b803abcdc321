#include "pmahler/resultant.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "pmahler/errors.hpp"

namespace pmahler {

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerMatrix sylvester_matrix(const std::vector<Integer>& f_desc,
                               const std::vector<Integer>& g_desc) {
  const std::size_t m = f_desc.size() - 1;
  const std::size_t n = g_desc.size() - 1;
  const std::size_t size = m + n;
  IntegerMatrix s(size, std::vector<Integer>(size, 0));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j <= m; ++j) s[row][row + j] = f_desc[j];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = 0; j <= n; ++j) s[n + row][row + j] = g_desc[j];
  }
  return s;
}

namespace {

// Integer scaling of a normalized polynomial: f = F / denominator.
struct Cleared {
  std::vector<Integer> descending;
  Integer denominator;
};

Cleared clear_denominators(const LaurentPolynomial& normalized) {
  Integer den = 1;
  for (const auto& [e, c] : normalized.terms()) den = lcm(den, Integer(c.get_den()));
  const long degree = normalized.max_exponent();
  Cleared out{std::vector<Integer>(static_cast<std::size_t>(degree + 1), 0), den};
  for (const auto& [e, c] : normalized.terms()) {
    Rational scaled = c * den;
    out.descending[static_cast<std::size_t>(degree - e)] = scaled.get_num();
  }
  return out;
}

Integer power(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

IntegerMatrix identity(std::size_t d) {
  IntegerMatrix m(d, std::vector<Integer>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t d = a.size();
  IntegerMatrix c(d, std::vector<Integer>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        mpz_addmul(c[i][j].get_mpz_t(), a[i][k].get_mpz_t(), b[k][j].get_mpz_t());
      }
    }
  }
  return c;
}

void add_scaled_identity(IntegerMatrix& m, const Integer& s) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += s;
}

void scale(IntegerMatrix& m, const Integer& s) {
  for (auto& row : m) {
    for (auto& x : row) x *= s;
  }
}

void add_into(IntegerMatrix& m, const IntegerMatrix& other) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += other[i][j];
  }
}

LaurentPolynomial prepare_cyclic(const LaurentPolynomial& f, unsigned long n) {
  if (f.is_zero()) throw DomainError("cyclic resultant of the zero polynomial");
  if (n == 0) throw DomainError("cyclic resultant needs n >= 1");
  if (!f.has_integer_coefficients()) {
    throw DomainError("cyclic resultant requires integer coefficients");
  }
  return normalize(f);
}

}  // namespace

Rational resultant(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const Cleared cf = clear_denominators(normalize(f));
  const Cleared cg = clear_denominators(normalize(g));
  const unsigned long m = cf.descending.size() - 1;
  const unsigned long n = cg.descending.size() - 1;
  Integer det;
  if (m == 0) {
    det = power(cf.descending[0], n);
  } else if (n == 0) {
    det = power(cg.descending[0], m);
  } else {
    det = bareiss_determinant(sylvester_matrix(cf.descending, cg.descending));
  }
  // R(F/c, G/d) = R(F, G) / (c^{deg G} d^{deg F}).
  Rational out(det, power(cf.denominator, n) * power(cg.denominator, m));
  out.canonicalize();
  return out;
}

Integer cyclic_resultant(const LaurentPolynomial& f, unsigned long n, CyclicVariant variant) {
  const LaurentPolynomial g = prepare_cyclic(f, n);
  const std::vector<Integer> coeffs = g.dense_integer_coefficients();
  const std::size_t d = coeffs.size() - 1;
  const Integer a = coeffs[d];
  if (d == 0) return power(a, variant == CyclicVariant::full ? n : n - 1);

  // M = a * companion(f / a): subdiagonal a, last column -f_0 .. -f_{d-1}.
  IntegerMatrix companion(d, std::vector<Integer>(d, 0));
  for (std::size_t i = 1; i < d; ++i) companion[i][i - 1] = a;
  for (std::size_t i = 0; i < d; ++i) companion[i][d - 1] = -coeffs[i];

  // Invariant for exponent k: pow = M^k, sum = sum_{i<k} a^{k-1-i} M^i, ak = a^k.
  IntegerMatrix pow = identity(d);
  IntegerMatrix sum(d, std::vector<Integer>(d, 0));
  Integer ak = 1;
  for (int bit = 63 - __builtin_clzl(n); bit >= 0; --bit) {
    // k -> 2k: sum_{2k} = (a^k I + M^k) sum_k.
    IntegerMatrix factor = pow;
    add_scaled_identity(factor, ak);
    sum = multiply(factor, sum);
    pow = multiply(pow, pow);
    ak *= ak;
    if ((n >> bit) & 1) {
      // k -> k+1: sum_{k+1} = a sum_k + M^k.
      scale(sum, a);
      add_into(sum, pow);
      pow = multiply(companion, pow);
      ak *= a;
    }
  }

  Integer det;
  Integer divisor;
  if (variant == CyclicVariant::full) {
    // a^n det(C^n - I) = det(M^n - a^n I) / a^{n(d-1)}.
    add_scaled_identity(pow, -ak);
    det = bareiss_determinant(std::move(pow));
    divisor = power(a, n * (d - 1));
  } else {
    // a^{n-1} det(nu_n(C)) = det(sum) / a^{(n-1)(d-1)}.
    det = bareiss_determinant(std::move(sum));
    divisor = power(a, (n - 1) * (d - 1));
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), det.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

Integer cyclic_resultant_sylvester(const LaurentPolynomial& f, unsigned long n,
                                   CyclicVariant variant) {
  const LaurentPolynomial g = prepare_cyclic(f, n);
  LaurentPolynomial other = variant == CyclicVariant::nu
                                ? nu_polynomial(n, g.variable())
                                : LaurentPolynomial::monomial(1, static_cast<long>(n), g.variable()) -
                                      LaurentPolynomial::constant(1);
  return resultant(g, other).get_num();
}

std::vector<Integer> cyclic_resultants(const LaurentPolynomial& f,
                                       std::span<const unsigned long> ns,
                                       CyclicVariant variant) {
  std::vector<Integer> out(ns.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), ns.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) out[i] = cyclic_resultant(f, ns[i], variant);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < ns.size(); i += workers) {
        out[i] = cyclic_resultant(f, ns[i], variant);
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace pmahler
