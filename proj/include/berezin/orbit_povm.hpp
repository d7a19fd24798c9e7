#pragma once

#include "berezin/dense_matrix.hpp"
#include "berezin/finite_group.hpp"
#include "berezin/irreps.hpp"

#include <stdexcept>
#include <vector>

namespace berezin {

// Thrown when a vector sits too close to the stabilizer decision boundary;
// perturb the vector and retry.
struct ill_conditioned_vector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orbit measurement data on Omega = G/K: the acting irrep, the fiducial unit
// vector, its phase stabilizer K, one representative per coset, and the
// kernel profile u(g) = n |<rho(g)v, v>|^2.
struct OrbitPOVM {
    FiniteGroup group;
    Irrep irrep;
    std::vector<cdouble> vector;
    std::vector<int> stabilizer;   // sorted element indices of K
    std::vector<int> cosetReps;    // smallest element index per coset
    std::vector<double> uValues;   // per group element
};

// K = { g : rho(g) v = e^{i theta} v }.  Membership defect
// ||rho(g)v - <rho(g)v,v> v|| must clear a guard band: accept below 1e-10,
// reject above 1e-6, throw ill_conditioned_vector in between.
std::vector<int> phase_stabilizer(const FiniteGroup& g, const Irrep& rep,
                                  const std::vector<cdouble>& v);

// u(g) = n |<rho(g)v, v>|^2.
std::vector<double> u_function(const FiniteGroup& g, const Irrep& rep,
                               const std::vector<cdouble>& v);

// true iff the convolution algebra of bi-K-invariant functions is
// commutative, tested by convolving indicators of all double-coset pairs.
bool gelfand_check(const FiniteGroup& g, const std::vector<int>& k);

OrbitPOVM make_orbit_povm(const FiniteGroup& g, const Irrep& rep,
                          std::vector<cdouble> v);

// Markov matrix of the transform on Omega: M[s][t] = u(t^-1 s) |K|/|G|,
// independent of the coset lifts (asserted on construction).  Real
// symmetric, nonnegative entries, rows summing to 1.
DenseMatrix berezin_matrix(const OrbitPOVM& povm);

// u_hat(phi) = (1/|G|) sum_x u(x) phi(x^-1).
DenseMatrix fourier_coefficient(const std::vector<double>& u, const FiniteGroup& g,
                                const Irrep& rep);

// Character prediction for a Gelfand pair: <u, chi_phi> with multiplicity
// dim phi, zero-padded to |Omega| after dropping the values that vanish.
// Requires gelfand_check to pass.  Sorted descending.
std::vector<double> predicted_spectrum_gelfand(const OrbitPOVM& povm,
                                               const std::vector<Irrep>& irreps);

// General prediction: eigenvalues of u_hat(phi), each repeated dim phi
// times, zero-padded to |Omega|.  Valid for any pair.  Sorted by real part
// descending.
std::vector<cdouble> predicted_spectrum_general(const OrbitPOVM& povm,
                                                const std::vector<Irrep>& irreps);

// true iff u_hat(phi) has rank <= 1 (relative tolerance 1e-9 on singular
// values) and its only possibly-nonzero eigenvalue equals tr u_hat(phi).
bool rank_one_check(const std::vector<double>& u, const FiniteGroup& g, const Irrep& rep);

// u(x) = sum_phi dim(phi) tr(u_hat(phi) phi(x)); consistency check used by
// the verification suites.
std::vector<double> fourier_inversion(const std::vector<DenseMatrix>& coefficients,
                                      const FiniteGroup& g, const std::vector<Irrep>& irreps);

}
