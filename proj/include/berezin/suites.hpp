#pragma once

#include "berezin/half_int.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace berezin {

// Outcome of one verification suite: a pass flag, the worst deviation seen
// by the floating suites (0 for the exact ones), per-failure descriptions,
// and a machine-readable per-case report.
struct SuiteResult {
    std::string name;
    bool pass = true;
    double maxDeviation = 0.0;
    std::vector<std::string> failures;
    nlohmann::json cases = nlohmann::json::array();

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

// Exact rational identities for every valid m up to 2j = tjMax: top
// eigenvalue 1, range [0,1], weighted sum 2j+1, the m^2/(j(j+1)) identity
// and m -> -m symmetry.  Zero tolerance.
SuiteResult verify_exact_identities(int tjMax);

// Highest-weight closed form, strict monotonicity and gap 1/(j+1).
SuiteResult verify_highest_weight(int tjMax);

// Second-highest weight: descent to floor(sqrt(2j)), ascent to
// floor(sqrt(6j)), descent after; dominance of lambda_1; gap formula.
SuiteResult verify_second_highest(int tjMax);

// Exactly d strict local minima and maxima, no plateaus, at m = j - d.
SuiteResult verify_oscillation_counts(HalfInt j, const std::vector<int>& ds);

// Quadrature eigenvalues against the exact ones for all 2j <= tjMax,
// including the vanishing band k in (2j, 2j+4].
SuiteResult verify_funk_hecke(int tjMax, int order);

// Group-average character pairings against the exact eigenvalues, all
// J in {0, 1/2, ..., 2j+1}.
SuiteResult verify_characters(int tjMax);

// Finite-group oracle over the catalog; empty filter runs every case.
SuiteResult verify_finite(const std::string& groupFilter);

// Residuals against the linear model scaled by (2j)^2: bounded and varying
// by less than a factor 2 across doublings of 2j.
SuiteResult verify_asymptotic();

// Chain estimates against the exact subleading eigenvalues, plus bit-exact
// repeat-run determinism.
SuiteResult verify_chain();

}
