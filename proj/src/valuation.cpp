#include "pmahler/valuation.hpp"

#include <algorithm>

#include "pmahler/errors.hpp"

namespace pmahler {

long Valuation::value() const {
  if (!value_) throw DomainError("valuation is infinite");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Valuation vp(const Integer& x, Prime p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return valuation(x, p);
}

Valuation vp(const Rational& x, Prime p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

long gauss_norm_valuation(const LaurentPolynomial& f, Prime p) {
  if (f.is_zero()) throw DomainError("Gauss norm of the zero polynomial");
  long best = vp(f.terms().begin()->second, p).value();
  for (const auto& [e, c] : f.terms()) best = std::min(best, vp(c, p).value());
  return best;
}

bool NewtonPolygon::has_slope_zero() const {
  return std::any_of(segments.begin(), segments.end(),
                     [](const PolygonSegment& s) { return s.slope == 0; });
}

Rational NewtonPolygon::outside_weight() const {
  Rational total = 0;
  for (const auto& s : segments) {
    if (s.slope > 0) total += s.slope * s.length;
  }
  return total;
}

NewtonPolygon newton_polygon(const LaurentPolynomial& f, Prime p) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  const long shift = f.min_exponent();
  std::vector<PolygonVertex> points;
  for (const auto& [e, c] : f.terms()) points.push_back({e - shift, vp(c, p).value()});

  // Monotone chain, lower hull; points arrive sorted by exponent.
  std::vector<PolygonVertex> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b unless it lies strictly below segment a -> pt.
      const Integer cross = Integer(b.exponent - a.exponent) * (pt.valuation - a.valuation) -
                            Integer(b.valuation - a.valuation) * (pt.exponent - a.exponent);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }

  NewtonPolygon polygon{p, hull, {}};
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long length = hull[i + 1].exponent - hull[i].exponent;
    Rational slope(hull[i + 1].valuation - hull[i].valuation, length);
    slope.canonicalize();
    polygon.segments.push_back({slope, length, hull[i]});
  }
  return polygon;
}

std::vector<Rational> root_valuations(const LaurentPolynomial& f, Prime p) {
  const NewtonPolygon polygon = newton_polygon(f, p);
  std::vector<Rational> out;
  for (const auto& s : polygon.segments) {
    for (long k = 0; k < s.length; ++k) out.push_back(s.root_valuation());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pmahler
