#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

// p-adic valuation: an integer, or +infinity for zero. |x|_p = p^{-v}.
class Valuation {
 public:
  constexpr Valuation(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  long value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(*a.value_ + *b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Valuation() = default;
  std::optional<long> value_;
};

Valuation vp(const Integer& x, Prime p);
/// v_p(numerator) - v_p(denominator).
Valuation vp(const Rational& x, Prime p);

/// min_i v_p(a_i); the p-adic Mahler measure is p^{-result}.
long gauss_norm_valuation(const LaurentPolynomial& f, Prime p);

struct PolygonVertex {
  long exponent;
  long valuation;
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

// A segment of slope m and horizontal length l accounts for exactly l roots
// of p-adic valuation -m.
struct PolygonSegment {
  Rational slope;
  long length;
  PolygonVertex start;
  Rational root_valuation() const { return -slope; }
  friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

struct NewtonPolygon {
  Prime prime;
  std::vector<PolygonVertex> vertices;
  std::vector<PolygonSegment> segments;

  bool has_slope_zero() const;
  /// Sum of slope * length over segments of positive slope, i.e. the total
  /// -v_p of the roots outside the closed unit disc.
  Rational outside_weight() const;
};

/// Lower convex hull of {(i, v_p(a_i))} for f shifted to minimal exponent 0.
NewtonPolygon newton_polygon(const LaurentPolynomial& f, Prime p);

/// Multiset of root valuations, ascending.
std::vector<Rational> root_valuations(const LaurentPolynomial& f, Prime p);

}  // namespace pmahler
