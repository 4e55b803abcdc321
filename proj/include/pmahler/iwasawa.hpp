#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

enum class InvariantSource { analytic, fitted };

std::string to_string(InvariantSource source);

struct IwasawaInvariants {
  Prime prime = 2;
  long lambda = 0;
  long mu = 0;
  /// Only the fitted route determines nu.
  std::optional<long> nu;
  /// Smallest r from which e_r = lambda r + mu p^r + nu holds (fitted only).
  long r0 = 1;
  InvariantSource source = InvariantSource::analytic;
};

/// mu_p(A) = min_i v_p(a_i).
long mu_invariant(const LaurentPolynomial& A, Prime p);

/// Number of roots T of A(1 + T) / p^mu with v_p(T) > 0, read off the Newton
/// polygon in T. Throws DomainError if qhs3_check fails.
long lambda_invariant(const LaurentPolynomial& A, Prime p);

/// True iff no cyclotomic polynomial Phi_{p^r}, r >= 1, divides A, so that
/// every R(A, nu_{p^r}) is nonzero. The trivial root t = 1 is permitted: it
/// never enters R(A, nu_n), and link polynomials always carry it.
bool qhs3_check(const LaurentPolynomial& A, Prime p);

/// e_r = v_p(R(A, nu_{p^r})) for r = 1..r_max.
std::vector<long> tower_valuations(const LaurentPolynomial& A, Prime p, long r_max);

/// Exact fit of e_r = lambda r + mu p^r + nu on a trailing window of
/// r = 1..r_max. Throws ConvergenceError if no window of length >= 3 fits
/// with lambda, mu >= 0 (raise r_max), DomainError if qhs3_check fails.
IwasawaInvariants fit_invariants(const LaurentPolynomial& A, Prime p, long r_max = 6);

struct ConsistencyReport {
  IwasawaInvariants analytic;
  IwasawaInvariants fitted;
  std::vector<long> tower;  // e_1..e_{r_max}
  bool lambda_agrees = false;
  bool mu_agrees = false;
  /// log m_p(A) = -mu log p.
  bool mahler_agrees = false;
  bool consistent() const { return lambda_agrees && mu_agrees && mahler_agrees; }
};

ConsistencyReport verify_consistency(const LaurentPolynomial& A, Prime p, long r_max = 6);

}  // namespace pmahler
