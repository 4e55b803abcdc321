#include "pmahler/roots.hpp"

#include <cmath>
#include <numbers>

#include "pmahler/errors.hpp"

namespace pmahler {

namespace {

// Coefficients are rounded to double precision; this is their relative error.
constexpr long double kCoefficientError = 0x1p-52L;
constexpr long double kUnitRoundoff = std::numeric_limits<long double>::epsilon() / 2;

struct Evaluation {
  Complex value;
  Complex derivative;
  long double error;  // bound on |value - f(z)| for the exact polynomial f
};

Evaluation evaluate(const std::vector<long double>& asc, const std::vector<long double>& abs_asc,
                    Complex z) {
  Complex v = 0, d = 0;
  long double magnitude = 0;
  const long double r = std::abs(z);
  for (std::size_t i = asc.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + asc[i];
    magnitude = magnitude * r + abs_asc[i];
  }
  const long double n = static_cast<long double>(asc.size());
  const long double horner = (2 * n + 4) * kUnitRoundoff / (1 - (2 * n + 4) * kUnitRoundoff);
  return {v, d, (horner + kCoefficientError) * magnitude * 1.0001L};
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const LaurentPolynomial& squarefree,
                                         const RootFinderOptions& options) {
  if (squarefree.is_zero() || squarefree.min_exponent() < 0) {
    throw DomainError("isolate_roots expects a nonzero ordinary polynomial");
  }
  const long degree = squarefree.max_exponent();
  if (degree < 1) throw DomainError("isolate_roots expects a nonconstant polynomial");

  std::vector<long double> asc(static_cast<std::size_t>(degree + 1), 0);
  for (const auto& [e, c] : squarefree.terms()) asc[static_cast<std::size_t>(e)] = c.get_d();
  std::vector<long double> abs_asc(asc.size());
  for (std::size_t i = 0; i < asc.size(); ++i) abs_asc[i] = std::abs(asc[i]);
  const long double lead = asc.back();

  long double cauchy = 0;
  for (long i = 0; i < degree; ++i) cauchy = std::max(cauchy, abs_asc[i] / std::abs(lead));
  cauchy += 1;
  const long double radius = std::sqrt(cauchy);
  const long double golden = std::numbers::pi_v<long double> * (3 - std::sqrt(5.0L));

  const auto n = static_cast<std::size_t>(degree);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, golden * static_cast<long double>(k) + 0.4L);
  }

  auto enclose = [&]() -> std::vector<RootEnclosure> {
    std::vector<RootEnclosure> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Evaluation ev = evaluate(asc, abs_asc, z[i]);
      long double denom = std::abs(lead);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= std::abs(z[i] - z[j]);
      }
      if (!(denom > 0) || !std::isfinite(denom)) return {};
      const long double r = static_cast<long double>(n) * (std::abs(ev.value) + ev.error) / denom;
      out[i] = {z[i], r * (1 + 64 * static_cast<long double>(n) * kUnitRoundoff)};
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius) return {};
      }
    }
    return out;
  };

  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    long double largest_step = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Evaluation ev = evaluate(asc, abs_asc, z[i]);
      if (ev.value == Complex(0)) continue;
      const Complex ratio = ev.value / ev.derivative;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      }
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (largest_step < 64 * kUnitRoundoff) {
      std::vector<RootEnclosure> out = enclose();
      if (!out.empty()) return out;
    }
  }
  std::vector<RootEnclosure> out = enclose();
  if (!out.empty()) return out;
  throw ConvergenceError("root isolation did not converge within " +
                         std::to_string(options.max_iterations) + " iterations");
}

}  // namespace pmahler
