#include "pmahler/pure.hpp"

#include <sstream>

#include "pmahler/errors.hpp"
#include "pmahler/resultant.hpp"
#include "pmahler/valuation.hpp"

namespace pmahler {

namespace {

constexpr Prime kResidueSearchLimit = 1000000;

void require_integral(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("purely p-adic measure of the zero polynomial");
  if (!f.has_integer_coefficients()) {
    throw DomainError("purely p-adic measure needs integer coefficients");
  }
}

Rational p_power(Prime p, long k) {
  const Integer q = prime_power(p, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(q) : Rational(1) / Rational(q);
}

PadicNumber log_of_integer(const Integer& x, Prime p, long N) {
  return padic_log(PadicNumber::from_integer(x, p, N));
}

// Simple unit roots of the residual polynomial of one polygon segment,
// lifted to precision N; empty if the segment is not fully liftable.
std::optional<std::vector<LiftedRoot>> lift_segment(const LaurentPolynomial& f, Prime p,
                                                    const PolygonSegment& segment, long N) {
  if (segment.slope.get_den() != 1 || p > kResidueSearchLimit) return std::nullopt;
  const long m = segment.slope.get_num().get_si();
  const long c0 = segment.start.valuation - m * segment.start.exponent;
  LaurentPolynomial::Terms terms;
  for (const auto& [i, a] : f.terms()) terms[i] = a * p_power(p, -m * i - c0);
  const LaurentPolynomial g(std::move(terms), "s");
  const LaurentPolynomial dg = g.derivative();

  std::vector<LiftedRoot> out;
  for (unsigned long s = 1; s < p; ++s) {
    const Rational gs = g.evaluate(Rational(s));
    if (gs.get_num() % p != 0) continue;
    if (dg.evaluate(Rational(s)).get_num() % p == 0) return std::nullopt;  // repeated residue
    out.push_back({m, hensel_lift(g, p, s, 1, N), g});
  }
  if (static_cast<long>(out.size()) != segment.length) return std::nullopt;
  return out;
}

// Longest prefix shared by the trailing window, capped at N digits.
PadicNumber stabilized(const std::vector<PureSample>& samples, long N) {
  const PadicNumber& last = samples.back().estimate;
  long digits = N;
  for (std::size_t i = samples.size() - kStabilizationWindow; i + 1 < samples.size(); ++i) {
    digits = std::min(digits, samples[i].estimate.agreement(last));
  }
  if (digits < 1) {
    throw PrecisionError("no p-adic digit stabilized up to n = " + std::to_string(samples.back().n));
  }
  return last.truncated(digits);
}

}  // namespace

std::string to_string(PureMethod method) {
  switch (method) {
    case PureMethod::estimator: return "estimator";
    case PureMethod::closed_form: return "closed_form";
    case PureMethod::norm_shortcut: return "norm_shortcut";
  }
  return "unknown";
}

std::string PurePadicResult::to_string() const {
  return value.digits() + " [" + pmahler::to_string(method) + "]";
}

bool mp_defined_check(const LaurentPolynomial& f, Prime p) {
  if (f.is_zero()) throw DomainError("purely p-adic measure of the zero polynomial");
  return !newton_polygon(f, p).has_slope_zero();
}

PurePadicResult mp_estimator(const LaurentPolynomial& f, Prime p, unsigned long n_budget, long N) {
  require_integral(f);
  if (!mp_defined_check(f, p)) {
    throw DomainError("f may vanish on |z|_p = 1; m_p is indeterminate");
  }
  if (N < 3) throw PrecisionError("estimator precision must be at least 3");
  std::vector<unsigned long> ns;
  for (unsigned long n = 1; n <= n_budget; ++n) {
    if (n % p != 0) ns.push_back(n);
  }
  if (ns.size() < kStabilizationWindow) {
    throw DomainError("n_budget leaves fewer than " + std::to_string(kStabilizationWindow) +
                      " exponents coprime to p");
  }
  const std::vector<Integer> values = cyclic_resultants(f, ns, CyclicVariant::full);

  PurePadicResult result;
  result.prime = p;
  result.method = PureMethod::estimator;
  result.heuristic_certificate = true;
  const long working = N + 4;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (values[i] == 0) {
      throw DomainError("R(f, t^" + std::to_string(ns[i]) + " - 1) vanishes");
    }
    const PadicNumber s =
        log_of_integer(values[i], p, working).scaled(Rational(1) / Rational(ns[i]));
    result.samples.push_back({ns[i], s});
  }
  result.value = stabilized(result.samples, N);
  result.notes.push_back("stabilized over the last " + std::to_string(kStabilizationWindow) +
                         " estimates (heuristic certificate)");
  return result;
}

PurePadicResult mp_closed_form(const LaurentPolynomial& f, Prime p, long N) {
  require_integral(f);
  if (!mp_defined_check(f, p)) {
    throw DomainError("f may vanish on |z|_p = 1; m_p is indeterminate");
  }
  const LaurentPolynomial g = normalize(f);
  const Integer lead = g.leading_coefficient().get_num();
  const Integer constant = g.coefficient(0).get_num();
  PurePadicResult result;
  result.prime = p;
  result.method = PureMethod::closed_form;

  std::vector<PolygonSegment> outside, inside;
  for (const PolygonSegment& s : newton_polygon(g, p).segments) {
    (s.slope > 0 ? outside : inside).push_back(s);
  }
  if (outside.empty()) {
    result.value = log_of_integer(lead, p, N);
    result.notes.push_back("no roots outside the unit disc: log_p of the leading coefficient");
    return result;
  }
  if (inside.empty()) {
    result.method = PureMethod::norm_shortcut;
    result.value = log_of_integer(constant, p, N);
    result.notes.push_back("all roots outside the unit disc: log_p of the constant term");
    return result;
  }

  auto lift_all = [&](const std::vector<PolygonSegment>& segments)
      -> std::optional<std::vector<LiftedRoot>> {
    std::vector<LiftedRoot> roots;
    for (const PolygonSegment& s : segments) {
      auto lifted = lift_segment(g, p, s, N);
      if (!lifted) return std::nullopt;
      roots.insert(roots.end(), lifted->begin(), lifted->end());
    }
    return roots;
  };

  // log_p alpha = log_p(unit) because log_p p = 0.
  if (auto roots = lift_all(outside)) {
    PadicNumber value = log_of_integer(lead, p, N);
    for (const LiftedRoot& r : *roots) value = value + padic_log(r.unit);
    result.value = value;
    result.roots = std::move(*roots);
    result.notes.push_back("log_p a_0 plus Hensel-lifted roots outside the unit disc");
    return result;
  }
  // Jensen through the inside roots: product of all roots is +-a_l / a_0.
  if (auto roots = lift_all(inside)) {
    PadicNumber value = log_of_integer(constant, p, N);
    for (const LiftedRoot& r : *roots) value = value - padic_log(r.unit);
    result.value = value;
    result.roots = std::move(*roots);
    result.notes.push_back("log_p of the constant term minus Hensel-lifted roots inside the unit disc");
    return result;
  }
  throw UnsupportedError("roots on both sides of the unit circle are not all Hensel-liftable in Q_p");
}

PurePadicResult hbar_p(const LaurentPolynomial& f, Prime p, unsigned long n_budget, long N,
                       bool solenoid_convention) {
  require_integral(f);
  const LaurentPolynomial g = normalize(f);
  const bool monic = g.leading_coefficient() == 1;
  if (!monic && !solenoid_convention) {
    throw DomainError("non-monic f needs the solenoid convention for hbar_p");
  }
  PurePadicResult result = mp_estimator(g, p, n_budget, N);
  result.notes.push_back("|Fix(phi^n)| = |R(f, t^n - 1)|; hbar_p equals m_p");
  try {
    const PurePadicResult closed = mp_closed_form(g, p, N);
    const long agree = result.value.agreement(closed.value);
    result.cross_check_digits = agree;
    if (agree < std::min(result.value.absolute_precision(), closed.value.absolute_precision())) {
      throw PrecisionError("hbar_p estimator disagrees with the closed form of m_p");
    }
  } catch (const UnsupportedError&) {
    result.notes.push_back("closed form unavailable; no cross-check");
  }
  return result;
}

PurePadicResult pure_link_growth(const LaurentPolynomial& A, unsigned d, Prime p,
                                 unsigned long n_budget, long N) {
  require_integral(A);
  if (d == 0) throw DomainError("component count must be positive");
  const auto [multiplicity, H] = split_unit_root(normalize(A));
  if (multiplicity != d - 1) {
    throw DomainError("A has (t - 1)-multiplicity " + std::to_string(multiplicity) +
                      ", expected d - 1 = " + std::to_string(d - 1));
  }
  PurePadicResult reference = mp_estimator(H, p, n_budget, N);
  const Integer h1 = abs(Integer(H.evaluate(1).get_num()));

  std::vector<unsigned long> ns;
  for (const PureSample& s : reference.samples) ns.push_back(s.n);
  const std::vector<Integer> link = cyclic_resultants(A, ns, CyclicVariant::nu);
  const std::vector<Integer> hosokawa = cyclic_resultants(H, ns, CyclicVariant::full);

  PurePadicResult result;
  result.prime = p;
  result.method = PureMethod::estimator;
  result.heuristic_certificate = true;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    Integer growth = abs(link[i]) * h1;
    const Integer scale = prime_power(ns[i], d - 1);  // n^{d-1}; n need not be prime here
    if (growth % scale != 0 || growth / scale != abs(hosokawa[i])) {
      throw std::logic_error("|R(A, nu_n)| |H(1)| / n^(d-1) differs from |R(H, t^n - 1)|");
    }
    growth /= scale;
    result.samples.push_back(
        {ns[i], log_of_integer(growth, p, N + 4).scaled(Rational(1) / Rational(ns[i]))});
  }
  result.value = stabilized(result.samples, N);
  result.cross_check_digits = result.value.agreement(reference.value);
  if (*result.cross_check_digits <
      std::min(result.value.absolute_precision(), reference.value.absolute_precision())) {
    throw PrecisionError("link growth limit disagrees with m_p(H)");
  }
  result.notes.push_back("H = A / (t - 1)^" + std::to_string(d - 1) + " = " + H.to_string());
  return result;
}

}  // namespace pmahler
