#pragma once

#include "berezin/half_int.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/wigner.hpp"

namespace berezin {

// Euler parametrization of SU(2); Haar density (1/16 pi^2) sin(beta).
struct EulerAngles {
    double alpha = 0.0;  // [0, 2 pi)
    double beta = 0.0;   // [0, pi]
    double gamma = 0.0;  // [0, 4 pi)
};

// Character of the spin-J representation: sin((2J+1) psi) / sin(psi) with
// cos(psi) = cos(beta/2) cos((alpha+gamma)/2).  Near sin(psi) = 0 the limit
// value is used: 2J+1 at psi ~ 0 and (-1)^{2J} (2J+1) at psi ~ pi.
double su2_character(HalfInt J, const EulerAngles& g);

// Eigenvalue of the zonal Markov kernel on spherical harmonics of degree k,
// computed as (1/2) integral of kernel(arccos t) P_k(t) over [-1, 1] with an
// `order`-point Gauss-Legendre rule.  Exact up to rounding when
// order >= 2j + k + 2.
double funk_hecke_eigenvalue(HalfInt j, HalfInt m, int k, int order);
double funk_hecke_eigenvalue(const ZonalKernel& kernel, int k, const QuadratureRule& rule);

// Pairing of the kernel profile with the spin-J character over the whole
// group: (1/16 pi^2) triple integral of u(beta) chi_J sin(beta) over the
// Euler box, Gauss-Legendre with `order` points per axis
// (order >= 4j + 4J + 8).  For integer J <= 2j this reproduces the exact
// eigenvalue; it vanishes for every other J.
double character_inner_product(HalfInt j, HalfInt m, HalfInt J, int order);

}
