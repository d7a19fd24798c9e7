// Acceptance suite: every release-gating criterion, one pass/fail line each.
// Exit status is the number of failed criteria.

#include "berezin/suites.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

namespace {

struct Criterion {
    const char* label;
    berezin::SuiteResult (*run)();
};

berezin::SuiteResult run_exact() { return berezin::verify_exact_identities(200); }
berezin::SuiteResult run_highest() { return berezin::verify_highest_weight(200); }
berezin::SuiteResult run_second() { return berezin::verify_second_highest(400); }
berezin::SuiteResult run_oscillation() {
    return berezin::verify_oscillation_counts(berezin::HalfInt::from_int(100), {1, 2, 3, 4});
}
berezin::SuiteResult run_funk_hecke() { return berezin::verify_funk_hecke(30, 200); }
berezin::SuiteResult run_characters() { return berezin::verify_characters(10); }
berezin::SuiteResult run_finite() { return berezin::verify_finite(""); }
berezin::SuiteResult run_asymptotic() { return berezin::verify_asymptotic(); }
berezin::SuiteResult run_chain() { return berezin::verify_chain(); }

}

int main() {
    const std::vector<Criterion> criteria = {
        {"1. exact identities, all m, 2j <= 200 (rational, zero tolerance)", run_exact},
        {"2. highest-weight closed form, strict decrease, gap 1/(j+1), 2j <= 200", run_highest},
        {"3. second-highest weight shape, dominance, gap formula, 5 <= 2j <= 400", run_second},
        {"4. j = 100, d in {1,2,3,4}: d strict minima and maxima, no plateaus", run_oscillation},
        {"5. quadrature oracle vs exact spectrum, 2j <= 30, tol 1e-9", run_funk_hecke},
        {"6. character-integral oracle, 2j <= 10, all J in halves, tol 1e-6", run_characters},
        {"7. finite-group oracle: commutative and general catalog cases, tol 1e-9", run_finite},
        {"8. scaled residuals bounded, factor < 2 across doublings, 2j <= 512", run_asymptotic},
        {"9. chain estimates within 3 SE of 1/3, 5/6, 0; bit-exact reruns", run_chain},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        berezin::SuiteResult result = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s (max dev %.3g, %.1fs)\n", result.pass ? "PASS" : "FAIL", c.label,
                    result.maxDeviation, secs);
        if (!result.pass) {
            ++failed;
            int shown = 0;
            for (const auto& f : result.failures) {
                std::printf("       %s\n", f.c_str());
                if (++shown == 10) {
                    std::printf("       ... %zu more\n", result.failures.size() - 10);
                    break;
                }
            }
        }
        std::fflush(stdout);
    }
    return failed;
}
