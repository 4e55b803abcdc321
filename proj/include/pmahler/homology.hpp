#pragma once

#include "pmahler/laurent.hpp"
#include "pmahler/numeric.hpp"

namespace pmahler {

struct HomologyOrder {
  Integer order;  // |R(A, nu_n)|
  /// For links the true |H_1(M_n)| differs from `order` by a bounded factor
  /// that the polynomial alone does not determine.
  bool caveat;
};

/// |R(A, nu_n)|, with the caveat set when components >= 2.
HomologyOrder homology_order(const LaurentPolynomial& A, unsigned long n, unsigned components);

/// Same, treating A as a knot polynomial iff |A(1)| = 1.
HomologyOrder homology_order(const LaurentPolynomial& A, unsigned long n);

}  // namespace pmahler
