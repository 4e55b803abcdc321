#pragma once

#include <span>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer bareiss_determinant(IntegerMatrix m);

/// Sylvester matrix of integer polynomials given by descending coefficients.
IntegerMatrix sylvester_matrix(const std::vector<Integer>& f_desc,
                               const std::vector<Integer>& g_desc);

/// Signed resultant a^{deg g} b^{deg f} prod(alpha_i - beta_j) of the
/// normalizations of f and g, via the Sylvester determinant.
/// R(0, g) = R(f, 0) = 0; R(c, g) = c^{deg g} for a constant c.
Rational resultant(const LaurentPolynomial& f, const LaurentPolynomial& g);

enum class CyclicVariant {
  full,  // R(f, t^n - 1)
  nu,    // R(f, nu_n)
};

/// Cyclic resultant of normalize(f) by companion-matrix powering. Requires
/// integer coefficients, f != 0 and n >= 1.
Integer cyclic_resultant(const LaurentPolynomial& f, unsigned long n, CyclicVariant variant);

/// Same quantity through the Sylvester determinant (slow; used as oracle).
Integer cyclic_resultant_sylvester(const LaurentPolynomial& f, unsigned long n,
                                   CyclicVariant variant);

/// cyclic_resultant for each n, evaluated concurrently.
std::vector<Integer> cyclic_resultants(const LaurentPolynomial& f,
                                       std::span<const unsigned long> ns,
                                       CyclicVariant variant);

}  // namespace pmahler
