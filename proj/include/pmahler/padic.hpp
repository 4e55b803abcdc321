#pragma once

#include <string>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

// Element of Q_p known to finite precision: p^v * u + O(p^{v+N}) with u a
// unit in [0, p^N), or the tracked zero O(p^A). Arithmetic never claims more
// digits than the operands justify.
class PadicNumber {
 public:
  /// O(2^0), a placeholder with no known digits.
  PadicNumber() = default;
  /// Tracked zero O(p^absolute_precision).
  static PadicNumber zero(Prime p, long absolute_precision);
  /// x with `relative_precision` significant digits (x = 0 gives O(p^N)).
  static PadicNumber from_rational(const Rational& x, Prime p, long relative_precision);
  static PadicNumber from_integer(const Integer& x, Prime p, long relative_precision);
  /// The class of `residue` modulo p^absolute_precision.
  static PadicNumber from_residue(const Integer& residue, Prime p, long absolute_precision);

  Prime prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return zero_; }
  /// Valuation of a nonzero value; the absolute precision for a tracked zero.
  long valuation() const noexcept { return v_; }
  const Integer& unit() const noexcept { return u_; }
  long relative_precision() const noexcept { return zero_ ? 0 : n_; }
  long absolute_precision() const noexcept { return zero_ ? v_ : v_ + n_; }

  /// Drops digits so that absolute_precision() <= k.
  PadicNumber truncated(long k) const;
  /// Residue in [0, p^k) for k <= absolute_precision(); requires v >= 0.
  Integer residue(long k) const;
  /// Largest k <= both absolute precisions with this = other mod p^k.
  long agreement(const PadicNumber& other) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    return a * b.inverse();
  }
  PadicNumber inverse() const;
  PadicNumber pow(long e) const;
  /// Multiplication by an exact nonzero rational; relative precision is kept.
  PadicNumber scaled(const Rational& c) const;

  /// `u * p^v + O(p^(v+N))`, or `O(p^A)` for a tracked zero.
  std::string to_string() const;
  /// Base-p expansion, e.g. `1 + 2^2 + 3*5^3 + O(5^7)`.
  std::string digits() const;

 private:
  PadicNumber(Prime p, bool zero, long v, Integer u, long n)
      : p_(p), zero_(zero), v_(v), u_(std::move(u)), n_(n) {}
  static PadicNumber canonical(Prime p, long shift, Integer x, long absolute_precision);

  Prime p_ = 2;
  bool zero_ = true;
  long v_ = 0;
  Integer u_ = 0;
  long n_ = 0;
};

/// Root of f in Z_p congruent to `start` mod p^start_precision, to absolute
/// precision N, by Newton iteration. Requires v_p(f(a)) > 2 v_p(f'(a)).
/// Throws PrecisionError if the Hensel condition fails.
PadicNumber hensel_lift(const LaurentPolynomial& f, Prime p, const Integer& start,
                        long start_precision, long N);

/// The (p-1)-th root of unity congruent to a mod p, to precision N.
PadicNumber teichmuller(const Integer& a, Prime p, long N);

/// Iwasawa-branch logarithm (log_p p = 0) of a nonzero element of Q_p.
/// The result is certified to absolute precision N, the relative precision
/// of the input. Throws PrecisionError when nothing can be certified.
PadicNumber padic_log(const PadicNumber& x);

}  // namespace pmahler
