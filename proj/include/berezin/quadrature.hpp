#pragma once

#include <vector>

namespace berezin {

struct QuadratureRule {
    std::vector<double> nodes;    // ascending, inside (-1, 1)
    std::vector<double> weights;  // positive, summing to 2
};

// n-point Gauss-Legendre rule on [-1, 1]; integrates polynomials of degree
// <= 2n-1 exactly.  Nodes are found by Newton iteration from Chebyshev-type
// initial guesses and refined to machine precision.
QuadratureRule gauss_legendre(int n);

// Legendre polynomial P_k(t) by the three-term recurrence, |t| <= 1.
double legendre_p(int k, double t);

}
