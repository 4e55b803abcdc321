#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/padic.hpp"

namespace pmahler {

enum class PureMethod { estimator, closed_form, norm_shortcut };

std::string to_string(PureMethod method);

// A root alpha = p^{-m} * unit of f, with the unit Hensel-lifted from a
// simple root of the residual polynomial g(s) = p^c f(p^{-m} s).
struct LiftedRoot {
  long scale_exponent;  // m, so v_p(alpha) = -m
  PadicNumber unit;
  LaurentPolynomial residual;  // g in Z[s], variable "s"
};

struct PureSample {
  unsigned long n;
  PadicNumber estimate;  // log_p(R(f, t^n - 1)) / n
};

struct PurePadicResult {
  Prime prime = 2;
  PadicNumber value;
  PureMethod method = PureMethod::estimator;
  /// The estimator's precision comes from observed stabilization, which is
  /// evidence rather than proof.
  bool heuristic_certificate = false;
  std::vector<LiftedRoot> roots;
  std::vector<PureSample> samples;
  /// Agreement in digits with an independent route, when one was run.
  std::optional<long> cross_check_digits;
  std::vector<std::string> notes;

  long certified_digits() const { return value.absolute_precision(); }
  /// Digit expansion followed by the method tag, e.g. "1 + 2^3 + O(2^5) [estimator]".
  std::string to_string() const;
};

/// True iff the Newton polygon has no slope-0 segment, so f has no zero on
/// |z|_p = 1. False means "indeterminate", not "undefined".
bool mp_defined_check(const LaurentPolynomial& f, Prime p);

/// Window of trailing estimates whose common prefix is declared certified.
inline constexpr std::size_t kStabilizationWindow = 8;

/// Limit of log_p(R(f, t^n - 1)) / n over n <= n_budget coprime to p, to at
/// most N digits. Throws DomainError if m_p is not known to be defined or a
/// resultant vanishes, PrecisionError if fewer than one digit stabilizes.
PurePadicResult mp_estimator(const LaurentPolynomial& f, Prime p, unsigned long n_budget, long N);

/// m_p(f) = log_p a_0 + sum over |alpha|_p > 1 of log_p alpha, through
/// Hensel-lifted roots or the constant-term shortcut. Throws
/// UnsupportedError when the outside (or inside) roots are not all
/// liftable in Q_p.
PurePadicResult mp_closed_form(const LaurentPolynomial& f, Prime p, long N);

/// Purely p-adic entropy: the estimator read through |Fix(phi^n)| =
/// |R(f, t^n - 1)|, checked against the closed form when available. Non-monic
/// f needs the solenoid convention.
PurePadicResult hbar_p(const LaurentPolynomial& f, Prime p, unsigned long n_budget, long N,
                       bool solenoid_convention = true);

/// m_p(H) for A = (t - 1)^{d-1} H from the growth of |R(A, nu_n)| |H(1)| / n^{d-1},
/// after checking that quantity equals |R(H, t^n - 1)| exactly for each n.
PurePadicResult pure_link_growth(const LaurentPolynomial& A, unsigned d, Prime p,
                                 unsigned long n_budget, long N);

}  // namespace pmahler
