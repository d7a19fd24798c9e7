#pragma once

#include "berezin/half_int.hpp"

namespace berezin {

// Wigner small-d matrix element d^j_{m1 m2}(beta) via the factorial sum.
// For 2j > 60 the prefactor square roots and half-angle powers are carried
// in log space to dodge overflow and underflow.
double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double beta);

// Transition kernel profile as a function of the geodesic angle on the
// sphere: gamma -> (2j+1) d^j_{mm}(gamma)^2.  Equals 2j+1 at gamma = 0 and
// stays within [0, 2j+1].
class ZonalKernel {
public:
    ZonalKernel(HalfInt j, HalfInt m);

    HalfInt j() const { return j_; }
    HalfInt m() const { return m_; }
    double dim() const { return j_.twice() + 1.0; }
    double operator()(double gamma) const;

private:
    HalfInt j_, m_;
};

inline ZonalKernel zonal_kernel(HalfInt j, HalfInt m) { return {j, m}; }

}
