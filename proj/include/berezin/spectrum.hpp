#pragma once

#include "berezin/half_int.hpp"
#include "berezin/rational.hpp"

#include <vector>

namespace berezin {

struct SpectrumEntry {
    int J = 0;
    Rational lambda;
    int multiplicity = 0;  // 2J + 1
};

// Exact spectrum of the transition operator for one (j, m): one entry per
// J = 0..2j.  Always satisfies lambda_0 = 1, 0 <= lambda_J <= 1 and
// sum_J (2J+1) lambda_J = 2j+1, all as exact rational identities.
struct SpectrumTable {
    HalfInt j, m;
    std::vector<SpectrumEntry> entries;

    Rational weighted_sum() const;  // sum_J (2J+1) lambda_J
};

// Evaluates eigenvalues for a fixed j.  Construction precomputes factorials
// up to 4j+2 and the binomial rows needed by the defining sum, so scans over
// m and J amortize the setup.
class SpectrumCalculator {
public:
    explicit SpectrumCalculator(HalfInt j);

    HalfInt j() const { return HalfInt::from_twice(tj_); }
    Rational eigenvalue(HalfInt m, int J) const;
    Rational cg_squared(HalfInt m, int J) const;
    SpectrumTable table(HalfInt m) const;

private:
    int tj_ = 0;
    std::vector<mpz_class> fact_;                // 0 .. 4j+2
    std::vector<std::vector<mpz_class>> binom_;  // Pascal rows 0 .. 2j

    // sum_z (-1)^z C(2j-J, z) C(J, d-z)^2 with d = j - m; out-of-range
    // binomials are zero, which truncates the support automatically.
    mpz_class signed_sum(int d, int J) const;
    void check_m(HalfInt m) const;
    void check_J(int J) const;
};

// Eigenvalue lambda_J of the Berezin transform for spin j and weight m,
// exact.  J must lie in [0, 2j]; j - m must be an integer with |m| <= j.
Rational eigenvalue(HalfInt j, HalfInt m, int J);

// Squared Clebsch-Gordan coefficient |<j,m; j,-m | J,0>|^2
// = lambda_J (2J+1)/(2j+1).
Rational cg_squared(HalfInt j, HalfInt m, int J);

SpectrumTable spectrum(HalfInt j, HalfInt m);

// Highest-weight eigenvalue (2j)!(2j+1)! / ((2j-J)!(2j+J+1)!).
Rational highest_weight_closed_form(HalfInt j, int J);

// 1 - max_{1 <= J <= 2j} lambda_J, exact.  Requires j >= 1/2.
Rational spectral_gap(HalfInt j, HalfInt m);

struct OscillationProfile {
    std::vector<int> minima;    // strict interior local minima, ascending J
    std::vector<int> maxima;    // strict interior local maxima
    std::vector<int> plateaus;  // left index J of each exact tie lambda_J == lambda_{J+1}
};

OscillationProfile oscillation_profile(const SpectrumTable& table);
OscillationProfile oscillation_profile(HalfInt j, HalfInt m);

// true iff lambda_1 strictly exceeds lambda_J for every 2 <= J <= 2j.
bool dominance(const SpectrumTable& table);
bool dominance(HalfInt j, HalfInt m);

// lambda_k at m = j-d minus the linear model 1 - k(k+1)(2d+1)/(2j), exact.
Rational asymptotic_residual(HalfInt j, int d, int k);

}
