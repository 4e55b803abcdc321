#include "pmahler/homology.hpp"

#include "pmahler/errors.hpp"
#include "pmahler/resultant.hpp"

namespace pmahler {

HomologyOrder homology_order(const LaurentPolynomial& A, unsigned long n, unsigned components) {
  if (A.is_zero()) throw DomainError("homology order of the zero polynomial");
  if (components == 0) throw DomainError("component count must be positive");
  return {abs(cyclic_resultant(A, n, CyclicVariant::nu)), components >= 2};
}

HomologyOrder homology_order(const LaurentPolynomial& A, unsigned long n) {
  if (A.is_zero()) throw DomainError("homology order of the zero polynomial");
  const bool knot = abs(A.evaluate(1)) == 1;
  return homology_order(A, n, knot ? 1U : 2U);
}

}  // namespace pmahler
