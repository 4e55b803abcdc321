#include "pmahler/mahler.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "pmahler/errors.hpp"
#include "pmahler/resultant.hpp"
#include "pmahler/roots.hpp"
#include "pmahler/valuation.hpp"

namespace pmahler {

namespace {

constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();

long double log_plus_error(const RootEnclosure& root, long double* value) {
  const long double r = std::abs(root.center);
  auto log_plus = [](long double x) { return x > 1 ? std::log(x) : 0.0L; };
  *value = log_plus(r);
  const long double hi = log_plus(r + root.radius) - *value;
  const long double lo = *value - log_plus(std::max(r - root.radius, 0.0L));
  return std::max(hi, lo);
}

// Least-squares slope of y against x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

std::string place_name(Place place) {
  return place == kInfinity ? std::string("inf") : std::to_string(place);
}

LogMeasure LogMeasure::finite(Place p, const Rational& coefficient) {
  LogMeasure m;
  m.place = p;
  m.log_p_coefficient = coefficient;
  m.value = coefficient.get_d() * std::log(static_cast<double>(p));
  m.abs_error = 0;
  return m;
}

LogMeasure LogMeasure::archimedean(double value, double abs_error) {
  LogMeasure m;
  m.place = kInfinity;
  m.value = value;
  m.abs_error = abs_error;
  return m;
}

std::string LogMeasure::to_string() const {
  std::ostringstream out;
  if (exact()) {
    out << pmahler::to_string(log_p_coefficient) << " log " << place;
  } else {
    out.precision(12);
    out << value << " +- ";
    out.precision(2);
    out << abs_error;
  }
  return out.str();
}

LogMeasure mahler_euclidean(const LaurentPolynomial& f, double tol) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const LaurentPolynomial g = f.shifted(-f.min_exponent());
  const Rational lead = g.leading_coefficient();
  const double log_lead =
      log_abs(Integer(lead.get_num())) - log_abs(Integer(lead.get_den()));
  long double value = log_lead;
  long double error = 4 * kDoubleEps * (std::abs(log_lead) + 1);
  if (!g.is_constant()) {
    for (const auto& [factor, multiplicity] : squarefree_decomposition(g)) {
      for (const RootEnclosure& root : isolate_roots(factor)) {
        long double contribution = 0;
        const long double e = log_plus_error(root, &contribution);
        value += multiplicity * contribution;
        error += multiplicity * (e + 4 * kDoubleEps * (contribution + 1));
      }
    }
  }
  if (error > tol) {
    std::ostringstream msg;
    msg << "Mahler measure certified only to " << static_cast<double>(error)
        << ", requested " << tol;
    throw ConvergenceError(msg.str());
  }
  return LogMeasure::archimedean(static_cast<double>(value), static_cast<double>(error));
}

LogMeasure mahler_padic(const LaurentPolynomial& f, Prime p) {
  const long gauss = gauss_norm_valuation(f, p);
  const NewtonPolygon polygon = newton_polygon(f, p);
  const long lead_valuation = vp(f.leading_coefficient(), p).value();
  if (Rational(lead_valuation) - polygon.outside_weight() != gauss) {
    throw std::logic_error("Gauss norm and Newton polygon Jensen product disagree");
  }
  return LogMeasure::finite(p, Rational(-gauss));
}

std::vector<unsigned long> ConvergenceReport::ns() const {
  std::vector<unsigned long> out;
  for (const auto& s : samples) out.push_back(s.n);
  return out;
}

std::vector<double> ConvergenceReport::estimates() const {
  std::vector<double> out;
  for (const auto& s : samples) out.push_back(s.estimate);
  return out;
}

ConvergenceReport resultant_limit_estimate(const LaurentPolynomial& f, Place place,
                                           unsigned long n_max, bool skip_p_multiples) {
  if (f.is_zero()) throw DomainError("resultant limit of the zero polynomial");
  if (!f.has_integer_coefficients()) throw DomainError("resultant limit needs integer coefficients");
  if (n_max < 8) throw DomainError("n_max must be at least 8");
  const bool finite = place != kInfinity;
  if (finite) require_prime(place);

  ConvergenceReport report;
  report.place = place;
  report.closed_form = finite ? mahler_padic(f, place) : mahler_euclidean(f);

  std::vector<unsigned long> ns;
  for (unsigned long n = 1; n <= n_max; ++n) {
    if (finite && skip_p_multiples && n % place == 0) continue;
    ns.push_back(n);
  }
  const std::vector<Integer> values = cyclic_resultants(f, ns, CyclicVariant::nu);
  const double log_p = finite ? std::log(static_cast<double>(place)) : 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const unsigned long n = ns[i];
    if (values[i] == 0) {
      report.zero_resultant_ns.push_back(n);
      continue;
    }
    ConvergenceSample s{n, 0, std::nullopt, !finite || n % place != 0};
    if (finite) {
      Rational q(-valuation(values[i], place), static_cast<long>(n));
      q.canonicalize();
      s.exact = q;
      s.estimate = q.get_d() * log_p;
    } else {
      s.estimate = log_abs(values[i]) / static_cast<double>(n);
    }
    report.samples.push_back(std::move(s));
  }
  if (report.samples.empty()) {
    throw DomainError("every sampled cyclic resultant vanishes");
  }

  std::vector<const ConvergenceSample*> restricted;
  for (const auto& s : report.samples) {
    if (s.restricted) restricted.push_back(&s);
  }
  if (restricted.size() < 4) throw DomainError("too few nonzero restricted samples");
  const std::size_t quartile = std::max<std::size_t>(restricted.size() / 4, 4);
  const std::size_t tail_start = restricted.size() - quartile;

  if (finite) {
    // n * estimate = -v_p(R) is an integer sequence; an exact affine tail
    // a*n + b pins the limit to a.
    const std::size_t window = std::min<std::size_t>(8, restricted.size());
    std::vector<Rational> xs, ys;
    for (std::size_t i = restricted.size() - window; i < restricted.size(); ++i) {
      xs.emplace_back(static_cast<long>(restricted[i]->n));
      ys.push_back(*restricted[i]->exact * xs.back());
    }
    const Rational slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
    bool affine = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      affine = affine && ys[i] == ys.front() + slope * (xs[i] - xs.front());
    }
    if (affine) {
      report.exact_limit = slope;
      report.limit = slope.get_d() * log_p;
      report.notes.push_back("restricted tail exactly affine over " + std::to_string(window) +
                             " samples");
    } else {
      report.limit = restricted.back()->estimate;
      report.notes.push_back("restricted tail not affine; limit is the last estimate");
    }
  } else {
    std::vector<double> x, y, x_prev, y_prev;
    for (std::size_t i = tail_start; i < restricted.size(); ++i) {
      x.push_back(static_cast<double>(restricted[i]->n));
      y.push_back(restricted[i]->estimate * x.back());
    }
    const std::size_t prev_start = tail_start >= quartile ? tail_start - quartile : 0;
    for (std::size_t i = prev_start; i < tail_start; ++i) {
      x_prev.push_back(static_cast<double>(restricted[i]->n));
      y_prev.push_back(restricted[i]->estimate * x_prev.back());
    }
    report.limit = fitted_slope(x, y);
    if (x_prev.size() >= 2) {
      report.abs_error = std::abs(report.limit - fitted_slope(x_prev, y_prev));
    }
    report.notes.push_back("limit from a least-squares fit of log|R| against n");
  }

  double spread = 0;
  for (std::size_t i = tail_start; i < restricted.size(); ++i) {
    spread = std::max(spread, std::abs(restricted[i]->estimate - report.limit));
  }
  report.abs_error = std::max(report.abs_error, std::abs(restricted.back()->estimate - report.limit));
  if (!report.exact_limit) report.abs_error = std::max(report.abs_error, spread);

  const double target = report.closed_form.value;
  const double slack = 8 * kDoubleEps * (std::abs(target) + 1);
  report.error_shrinking = true;
  for (std::size_t i = tail_start + 1; i < restricted.size(); ++i) {
    const double before = std::abs(restricted[i - 1]->estimate - target);
    const double after = std::abs(restricted[i]->estimate - target);
    if (after > before + slack) report.error_shrinking = false;
  }
  const std::size_t all_tail = report.samples.size() - report.samples.size() / 4;
  for (std::size_t i = all_tail; i < report.samples.size(); ++i) {
    report.unrestricted_band =
        std::max(report.unrestricted_band, std::abs(report.samples[i].estimate - target));
  }
  return report;
}

}  // namespace pmahler
