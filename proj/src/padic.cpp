#include "pmahler/padic.hpp"

#include <algorithm>
#include <sstream>

#include "pmahler/errors.hpp"

namespace pmahler {

namespace {

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("not invertible modulo " + m.get_str());
  }
  return r;
}

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw DomainError("p-adic prime mismatch");
}

long floor_log(unsigned long k, Prime p) {
  long e = 0;
  for (unsigned long x = k; x >= p; x /= p) ++e;
  return e;
}

// sum_{k>=1} (-1)^{k+1} z^k / k modulo p^A, for v_p(z) = vz >= 1.
Integer log1p_series(const Integer& z, long vz, Prime p, long A) {
  // For k >= 2, k*vz - floor(log_p k) is nondecreasing in k, so the first k
  // where it reaches A bounds every later term.
  unsigned long limit = 1;
  while (static_cast<long>(limit) * vz - floor_log(limit, p) < A) ++limit;
  const long extra = floor_log(limit, p) + 1;
  const Integer modulus = prime_power(p, static_cast<unsigned long>(A + extra));
  Integer sum = 0;
  Integer zk = 1;
  for (unsigned long k = 1; k < limit; ++k) {
    zk = mod_positive(zk * z, modulus);
    const long vk = valuation(Integer(k), p);
    const Integer pk = prime_power(p, static_cast<unsigned long>(vk));
    Integer term;
    mpz_divexact(term.get_mpz_t(), zk.get_mpz_t(), pk.get_mpz_t());
    const Integer unit_k = Integer(k) / pk;
    term = term * inverse_mod(unit_k, modulus);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return mod_positive(sum, prime_power(p, static_cast<unsigned long>(A)));
}

// Integer polynomial with the same roots as f (denominators cleared,
// shifted to an ordinary polynomial), ascending.
std::vector<Integer> integral_ascending(const LaurentPolynomial& f) {
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
  return (f * Rational(den)).dense_integer_coefficients();
}

Integer horner(const std::vector<Integer>& asc, const Integer& x) {
  Integer acc = 0;
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

PadicNumber PadicNumber::zero(Prime p, long absolute_precision) {
  require_prime(p);
  return PadicNumber(p, true, absolute_precision, 0, 0);
}

PadicNumber PadicNumber::canonical(Prime p, long shift, Integer x, long absolute_precision) {
  const long span = absolute_precision - shift;
  if (span <= 0) return zero(p, absolute_precision);
  x = mod_positive(x, prime_power(p, static_cast<unsigned long>(span)));
  if (x == 0) return zero(p, absolute_precision);
  const long w = pmahler::valuation(x, p);
  Integer u = strip_prime(x, p);
  return PadicNumber(p, false, shift + w, std::move(u), absolute_precision - shift - w);
}

PadicNumber PadicNumber::from_rational(const Rational& x, Prime p, long relative_precision) {
  require_prime(p);
  if (relative_precision < 1) throw PrecisionError("relative precision must be positive");
  if (x == 0) return zero(p, relative_precision);
  const long v = pmahler::valuation(x.get_num(), p) - pmahler::valuation(x.get_den(), p);
  const Integer m = prime_power(p, static_cast<unsigned long>(relative_precision));
  const Integer u =
      mod_positive(strip_prime(x.get_num(), p) * inverse_mod(strip_prime(x.get_den(), p), m), m);
  return PadicNumber(p, false, v, u, relative_precision);
}

PadicNumber PadicNumber::from_integer(const Integer& x, Prime p, long relative_precision) {
  return from_rational(Rational(x), p, relative_precision);
}

PadicNumber PadicNumber::from_residue(const Integer& residue, Prime p, long absolute_precision) {
  require_prime(p);
  return canonical(p, 0, residue, absolute_precision);
}

PadicNumber PadicNumber::truncated(long k) const {
  if (k >= absolute_precision()) return *this;
  if (zero_) return zero(p_, k);
  return canonical(p_, v_, u_, k);
}

Integer PadicNumber::residue(long k) const {
  if (k > absolute_precision()) {
    throw PrecisionError("residue mod p^" + std::to_string(k) + " exceeds known precision");
  }
  if (k <= 0) return 0;
  if (zero_) return 0;
  if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
  return mod_positive(u_ * prime_power(p_, static_cast<unsigned long>(v_)),
                      prime_power(p_, static_cast<unsigned long>(k)));
}

long PadicNumber::agreement(const PadicNumber& other) const {
  require_same_prime(*this, other);
  const PadicNumber diff = *this - other;
  return diff.is_zero() ? diff.absolute_precision() : diff.valuation();
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  return canonical(p_, v_, -u_, v_ + n_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const long precision = std::min(a.absolute_precision(), b.absolute_precision());
  const long shift = std::min(a.v_, b.v_);
  const Prime p = a.p_;
  auto lifted = [&](const PadicNumber& x) -> Integer {
    if (x.zero_) return 0;
    return x.u_ * prime_power(p, static_cast<unsigned long>(x.v_ - shift));
  };
  return PadicNumber::canonical(p, shift, lifted(a) + lifted(b), precision);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const Prime p = a.p_;
  if (a.zero_ && b.zero_) return PadicNumber::zero(p, a.v_ + b.v_);
  if (a.zero_) return PadicNumber::zero(p, a.v_ + b.v_);
  if (b.zero_) return PadicNumber::zero(p, a.v_ + b.v_);
  const long n = std::min(a.n_, b.n_);
  const Integer m = prime_power(p, static_cast<unsigned long>(n));
  return PadicNumber(p, false, a.v_ + b.v_, mod_positive(a.u_ * b.u_, m), n);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw DomainError("division by a tracked p-adic zero");
  const Integer m = prime_power(p_, static_cast<unsigned long>(n_));
  return PadicNumber(p_, false, -v_, inverse_mod(u_, m), n_);
}

PadicNumber PadicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (zero_) {
    if (e == 0) throw DomainError("0^0 for a tracked p-adic zero");
    return zero(p_, v_ * e);
  }
  const Integer m = prime_power(p_, static_cast<unsigned long>(n_));
  Integer u;
  mpz_powm_ui(u.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
  return PadicNumber(p_, false, v_ * e, u, n_);
}

PadicNumber PadicNumber::scaled(const Rational& c) const {
  if (c == 0) throw DomainError("scaling by zero");
  const long vc = pmahler::valuation(c.get_num(), p_) - pmahler::valuation(c.get_den(), p_);
  if (zero_) return zero(p_, v_ + vc);
  const Integer m = prime_power(p_, static_cast<unsigned long>(n_));
  const Integer cu =
      mod_positive(strip_prime(c.get_num(), p_) * inverse_mod(strip_prime(c.get_den(), p_), m), m);
  return PadicNumber(p_, false, v_ + vc, mod_positive(u_ * cu, m), n_);
}

std::string PadicNumber::to_string() const {
  std::ostringstream out;
  if (zero_) {
    out << "O(" << p_ << "^" << v_ << ")";
  } else {
    out << u_.get_str() << " * " << p_ << "^" << v_ << " + O(" << p_ << "^(" << v_ + n_ << "))";
  }
  return out.str();
}

std::string PadicNumber::digits() const {
  std::ostringstream out;
  if (!zero_) {
    Integer rest = u_;
    long e = v_;
    bool first = true;
    while (rest != 0) {
      const unsigned long d = mpz_fdiv_ui(rest.get_mpz_t(), p_);
      rest /= p_;
      if (d != 0) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
          out << d;
        } else {
          if (d != 1) out << d << "*";
          out << p_;
          if (e != 1) out << "^" << e;
        }
      }
      ++e;
    }
    out << " + ";
  }
  out << "O(" << p_ << "^" << absolute_precision() << ")";
  return out.str();
}

PadicNumber hensel_lift(const LaurentPolynomial& f, Prime p, const Integer& start,
                        long start_precision, long N) {
  require_prime(p);
  if (f.is_zero()) throw DomainError("Hensel lift of the zero polynomial");
  if (N < 1 || start_precision < 1) throw PrecisionError("precision must be positive");
  const std::vector<Integer> asc = integral_ascending(f.shifted(-f.min_exponent()));
  std::vector<Integer> d_asc;
  for (std::size_t i = 1; i < asc.size(); ++i) d_asc.push_back(asc[i] * static_cast<unsigned long>(i));
  if (d_asc.empty()) throw DomainError("constant polynomial has no roots");

  Integer x = mod_positive(start, prime_power(p, static_cast<unsigned long>(start_precision)));
  Integer fx = horner(asc, x);
  if (fx == 0) return PadicNumber::from_residue(x, p, N);
  const Integer dfx = horner(d_asc, x);
  if (dfx == 0) throw PrecisionError("Hensel condition fails: f'(start) = 0");
  const long s = valuation(dfx, p);
  if (valuation(fx, p) <= 2 * s) {
    throw PrecisionError("Hensel condition v(f(a)) > 2 v(f'(a)) fails at the start value");
  }
  const long working = N + 2 * s + 2;
  const Integer modulus = prime_power(p, static_cast<unsigned long>(working));
  const Integer ps = prime_power(p, static_cast<unsigned long>(s));
  for (int iteration = 0; iteration < 200; ++iteration) {
    if (fx == 0 || valuation(fx, p) - s >= N) return PadicNumber::from_residue(x, p, N);
    const Integer dx = horner(d_asc, x);
    Integer scaled_f;
    mpz_divexact(scaled_f.get_mpz_t(), fx.get_mpz_t(), ps.get_mpz_t());
    Integer scaled_d;
    mpz_divexact(scaled_d.get_mpz_t(), dx.get_mpz_t(), ps.get_mpz_t());
    x = mod_positive(x - scaled_f * inverse_mod(scaled_d, modulus), modulus);
    fx = horner(asc, x);
  }
  throw ConvergenceError("Hensel iteration did not converge");
}

PadicNumber teichmuller(const Integer& a, Prime p, long N) {
  require_prime(p);
  if (N < 1) throw PrecisionError("precision must be positive");
  const Integer m = prime_power(p, static_cast<unsigned long>(N));
  Integer x = mod_positive(a, m);
  if (mpz_divisible_ui_p(x.get_mpz_t(), p)) throw DomainError("Teichmuller lift of 0 mod p");
  // After k steps x is correct modulo p^{k+1}.
  for (long k = 1; k < N; ++k) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
  }
  return PadicNumber::from_residue(x, p, N);
}

PadicNumber padic_log(const PadicNumber& x) {
  if (x.is_zero()) throw DomainError("logarithm of a tracked zero");
  const Prime p = x.prime();
  const long N = x.relative_precision();
  if (p == 2) {
    if (N < 3) throw PrecisionError("log_2 needs at least 3 significant bits");
    // log u = log(u^2) / 2 with u^2 = 1 mod 8; u^2 is known mod 2^{N+1}.
    const Integer m = prime_power(2, static_cast<unsigned long>(N + 1));
    const Integer y = mod_positive(x.unit() * x.unit(), m);
    const Integer z = y - 1;
    if (z == 0) return PadicNumber::zero(2, N);
    const long vz = valuation(z, 2);
    if (vz >= N + 1) return PadicNumber::zero(2, N);
    const Integer doubled = log1p_series(z, vz, 2, N + 1);
    Integer half;
    mpz_divexact_ui(half.get_mpz_t(), doubled.get_mpz_t(), 2);
    return PadicNumber::from_residue(half, 2, N);
  }
  if (N < 2) throw PrecisionError("log_p needs at least 2 significant digits");
  const Integer m = prime_power(p, static_cast<unsigned long>(N));
  const Integer omega = teichmuller(x.unit(), p, N).residue(N);
  const Integer y = mod_positive(x.unit() * inverse_mod(omega, m), m);
  const Integer z = y - 1;
  if (z == 0) return PadicNumber::zero(p, N);
  const long vz = valuation(z, p);
  return PadicNumber::from_residue(log1p_series(z, vz, p, N), p, N);
}

}  // namespace pmahler
