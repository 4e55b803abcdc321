#pragma once

#include <complex>
#include <vector>

#include "pmahler/laurent.hpp"

namespace pmahler {

using Complex = std::complex<long double>;

// Disc guaranteed to contain exactly one root of the input polynomial.
struct RootEnclosure {
  Complex center;
  long double radius;
};

struct RootFinderOptions {
  int max_iterations = 200;
};

/// Enclosures for all complex roots of a square-free ordinary polynomial of
/// degree >= 1, by Aberth-Ehrlich iteration followed by Weierstrass
/// inclusion discs. Throws ConvergenceError if the discs cannot be separated
/// within the iteration cap.
std::vector<RootEnclosure> isolate_roots(const LaurentPolynomial& squarefree,
                                         const RootFinderOptions& options = {});

}  // namespace pmahler
