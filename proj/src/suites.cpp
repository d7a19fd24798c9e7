#include "berezin/suites.hpp"

#include "berezin/chain.hpp"
#include "berezin/eigensolvers.hpp"
#include "berezin/orbit_povm.hpp"
#include "berezin/parallel.hpp"
#include "berezin/spectrum.hpp"
#include "berezin/sphere_oracle.hpp"
#include "berezin/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace berezin {

namespace {

std::string spin_case(int tj, int tm) {
    return "j=" + HalfInt::from_twice(tj).str() + " m=" + HalfInt::from_twice(tm).str();
}

void merge_fragment(SuiteResult& into, SuiteResult&& part) {
    into.pass = into.pass && part.pass;
    into.maxDeviation = std::max(into.maxDeviation, part.maxDeviation);
    for (auto& f : part.failures) into.failures.push_back(std::move(f));
    for (auto& c : part.cases) into.cases.push_back(std::move(c));
}

// Runs one fragment per 2j value concurrently and merges in 2j order.
SuiteResult over_spins(std::string name, int tjFirst, int tjMax,
                       const std::function<void(int, SuiteResult&)>& body) {
    SuiteResult res;
    res.name = std::move(name);
    if (tjMax < tjFirst) return res;
    std::vector<SuiteResult> parts(tjMax - tjFirst + 1);
    parallel_for(tjFirst, tjMax + 1, [&](int tj) { body(tj, parts[tj - tjFirst]); });
    for (auto& p : parts) merge_fragment(res, std::move(p));
    return res;
}

}

SuiteResult verify_exact_identities(int tjMax) {
    return over_spins("exact", 0, tjMax, [](int tj, SuiteResult& res) {
        SpectrumCalculator calc(HalfInt::from_twice(tj));
        for (int d = 0; 2 * d <= tj; ++d) {
            const int tm = tj - 2 * d;
            SpectrumTable table = calc.table(HalfInt::from_twice(tm));
            SpectrumTable mirror = tm == 0 ? table : calc.table(HalfInt::from_twice(-tm));

            if (!(table.entries[0].lambda == Rational(1)))
                res.fail(spin_case(tj, tm) + ": lambda_0 != 1");
            for (const auto& e : table.entries) {
                if (e.multiplicity != 2 * e.J + 1)
                    res.fail(spin_case(tj, tm) + ": multiplicity mismatch at J=" + std::to_string(e.J));
                if (e.lambda < Rational(0) || e.lambda > Rational(1))
                    res.fail(spin_case(tj, tm) + ": lambda out of [0,1] at J=" + std::to_string(e.J));
            }
            if (!(table.weighted_sum() == Rational(tj + 1)))
                res.fail(spin_case(tj, tm) + ": weighted sum != 2j+1");
            if (tj >= 1) {
                Rational expected(static_cast<long>(tm) * tm, static_cast<long>(tj) * (tj + 2));
                if (!(table.entries[1].lambda == expected))
                    res.fail(spin_case(tj, tm) + ": lambda_1 != m^2/(j(j+1))");
            }
            for (int J = 0; J <= tj; ++J)
                if (!(table.entries[J].lambda == mirror.entries[J].lambda)) {
                    res.fail(spin_case(tj, tm) + ": m -> -m symmetry fails at J=" + std::to_string(J));
                    break;
                }
        }
    });
}

SuiteResult verify_highest_weight(int tjMax) {
    return over_spins("highest-weight", 0, tjMax, [](int tj, SuiteResult& res) {
        HalfInt j = HalfInt::from_twice(tj);
        SpectrumTable table = spectrum(j, j);
        for (int J = 0; J <= tj; ++J)
            if (!(table.entries[J].lambda == highest_weight_closed_form(j, J))) {
                res.fail(spin_case(tj, tj) + ": closed form mismatch at J=" + std::to_string(J));
                break;
            }
        for (int J = 1; J <= tj; ++J)
            if (!(table.entries[J].lambda < table.entries[J - 1].lambda)) {
                res.fail(spin_case(tj, tj) + ": sequence not strictly decreasing at J=" + std::to_string(J));
                break;
            }
        if (tj >= 1) {
            if (!(table.entries[tj].lambda > Rational(0)))
                res.fail(spin_case(tj, tj) + ": lambda_2j not positive");
            if (!(spectral_gap(j, j) == Rational(2, tj + 2)))
                res.fail(spin_case(tj, tj) + ": gap != 1/(j+1)");
        }
    });
}

SuiteResult verify_second_highest(int tjMax) {
    return over_spins("second-highest", 5, tjMax, [](int tj, SuiteResult& res) {
        HalfInt j = HalfInt::from_twice(tj);
        HalfInt m = HalfInt::from_twice(tj - 2);
        SpectrumTable table = spectrum(j, m);

        for (int J = 1; J <= tj; ++J) {
            const Rational& prev = table.entries[J - 1].lambda;
            const Rational& cur = table.entries[J].lambda;
            const long jsq = static_cast<long>(J) * J;
            bool ok;
            if (jsq <= tj)
                ok = cur < prev;  // descent up to floor(sqrt(2j))
            else if (jsq <= 3L * tj)
                ok = cur > prev;  // ascent up to floor(sqrt(6j))
            else
                ok = cur < prev;  // descent to the end
            if (!ok) {
                res.fail(spin_case(tj, tj - 2) + ": monotonicity pattern breaks at J=" + std::to_string(J));
                break;
            }
        }
        if (!dominance(table))
            res.fail(spin_case(tj, tj - 2) + ": lambda_1 is not dominant");

        // 3/j - 4/(j(j+1)) with j = tj/2
        Rational jr(tj, 2);
        Rational expected = Rational(3) / jr - Rational(4) / (jr * (jr + Rational(1)));
        if (!(spectral_gap(j, m) == expected))
            res.fail(spin_case(tj, tj - 2) + ": gap formula mismatch");
    });
}

SuiteResult verify_oscillation_counts(HalfInt j, const std::vector<int>& ds) {
    SuiteResult res;
    res.name = "oscillation";
    SpectrumCalculator calc(j);
    for (int d : ds) {
        HalfInt m = HalfInt::from_twice(j.twice() - 2 * d);
        OscillationProfile p = oscillation_profile(calc.table(m));
        std::string label = spin_case(j.twice(), m.twice());
        if (static_cast<int>(p.minima.size()) != d)
            res.fail(label + ": expected " + std::to_string(d) + " minima, got " +
                     std::to_string(p.minima.size()));
        if (static_cast<int>(p.maxima.size()) != d)
            res.fail(label + ": expected " + std::to_string(d) + " maxima, got " +
                     std::to_string(p.maxima.size()));
        if (!p.plateaus.empty()) res.fail(label + ": unexpected plateau");
        res.cases.push_back({{"d", d},
                             {"minima", p.minima},
                             {"maxima", p.maxima},
                             {"plateaus", p.plateaus}});
    }
    return res;
}

SuiteResult verify_funk_hecke(int tjMax, int order) {
    QuadratureRule rule = gauss_legendre(order);
    return over_spins("funk-hecke", 0, tjMax, [&rule](int tj, SuiteResult& res) {
        SpectrumCalculator calc(HalfInt::from_twice(tj));
        for (int tm = -tj; tm <= tj; tm += 2) {
            ZonalKernel kernel(HalfInt::from_twice(tj), HalfInt::from_twice(tm));
            for (int k = 0; k <= tj + 4; ++k) {
                double numeric = funk_hecke_eigenvalue(kernel, k, rule);
                double expected =
                    k <= tj ? calc.eigenvalue(HalfInt::from_twice(tm), k).to_double() : 0.0;
                double dev = std::abs(numeric - expected);
                res.maxDeviation = std::max(res.maxDeviation, dev);
                if (dev > tol::funk_hecke_match)
                    res.fail(spin_case(tj, tm) + " k=" + std::to_string(k) +
                             ": |numeric - exact| = " + std::to_string(dev));
            }
        }
        res.cases.push_back({{"j", HalfInt::from_twice(tj).str()},
                             {"maxDeviation", res.maxDeviation}});
    });
}

SuiteResult verify_characters(int tjMax) {
    return over_spins("su2-characters", 0, tjMax, [](int tj, SuiteResult& res) {
        SpectrumCalculator calc(HalfInt::from_twice(tj));
        for (int tm = -tj; tm <= tj; tm += 2) {
            for (int tJ = 0; tJ <= 2 * tj + 2; ++tJ) {
                const int order = 2 * tj + 2 * tJ + 8;
                double numeric = character_inner_product(HalfInt::from_twice(tj),
                                                         HalfInt::from_twice(tm),
                                                         HalfInt::from_twice(tJ), order);
                double expected = 0.0;
                if (tJ % 2 == 0 && tJ / 2 <= tj)
                    expected = calc.eigenvalue(HalfInt::from_twice(tm), tJ / 2).to_double();
                double dev = std::abs(numeric - expected);
                res.maxDeviation = std::max(res.maxDeviation, dev);
                if (dev > tol::character_match)
                    res.fail(spin_case(tj, tm) + " J=" + HalfInt::from_twice(tJ).str() +
                             ": |integral - expected| = " + std::to_string(dev));
            }
        }
        res.cases.push_back({{"j", HalfInt::from_twice(tj).str()},
                             {"maxDeviation", res.maxDeviation}});
    });
}

namespace {

struct FiniteCase {
    std::string group;
    int irrepIndex;
    std::vector<cdouble> vector;
    bool expectGelfand;
    bool checkRankOne;
};

std::vector<cdouble> normalized(std::vector<cdouble> v) {
    double n = 0.0;
    for (const auto& c : v) n += std::norm(c);
    n = std::sqrt(n);
    for (auto& c : v) c /= n;
    return v;
}

void run_finite_case(const FiniteCase& fc, SuiteResult& res) {
    FiniteGroup group = make_group(fc.group);
    auto irreps = irreps_of(group);
    OrbitPOVM povm = make_orbit_povm(group, irreps[fc.irrepIndex], fc.vector);

    const bool gelfand = gelfand_check(group, povm.stabilizer);
    if (gelfand != fc.expectGelfand)
        res.fail(fc.group + " irrep " + std::to_string(fc.irrepIndex) +
                 ": gelfand_check = " + (gelfand ? "true" : "false"));

    auto computed = symmetric_eigenvalues(berezin_matrix(povm));

    double dev = 0.0;
    nlohmann::json predictedJson = nlohmann::json::array();
    if (gelfand) {
        auto predicted = predicted_spectrum_gelfand(povm, irreps);
        for (std::size_t i = 0; i < predicted.size(); ++i) {
            dev = std::max(dev, std::abs(predicted[i] - computed[i]));
            predictedJson.push_back(predicted[i]);
        }
        if (fc.checkRankOne)
            for (std::size_t p = 0; p < irreps.size(); ++p)
                if (!rank_one_check(povm.uValues, group, irreps[p]))
                    res.fail(fc.group + ": rank_one_check fails for irrep " + std::to_string(p));
    } else {
        auto predicted = predicted_spectrum_general(povm, irreps);
        for (std::size_t i = 0; i < predicted.size(); ++i) {
            dev = std::max(dev, std::abs(predicted[i].imag()));
            dev = std::max(dev, std::abs(predicted[i].real() - computed[i]));
            predictedJson.push_back({predicted[i].real(), predicted[i].imag()});
        }
    }
    res.maxDeviation = std::max(res.maxDeviation, dev);
    if (dev > tol::spectrum_match)
        res.fail(fc.group + " irrep " + std::to_string(fc.irrepIndex) +
                 ": spectrum deviation " + std::to_string(dev));

    nlohmann::json vectorJson = nlohmann::json::array();
    for (const auto& c : fc.vector) vectorJson.push_back({c.real(), c.imag()});
    res.cases.push_back({{"group", fc.group},
                         {"irrep", fc.irrepIndex},
                         {"vector", vectorJson},
                         {"stabilizerOrder", povm.stabilizer.size()},
                         {"omega", povm.cosetReps.size()},
                         {"gelfand", gelfand},
                         {"predicted", predictedJson},
                         {"computed", computed},
                         {"maxDeviation", dev}});
}

}

SuiteResult verify_finite(const std::string& groupFilter) {
    SuiteResult res;
    res.name = "finite";

    std::vector<FiniteCase> cases;
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k < n; ++k)
            cases.push_back({"cyclic(" + std::to_string(n) + ")", k, {1.0}, true, true});

    // dihedral(4): the 2-dim block with the first basis vector
    {
        auto irreps = irreps_of(make_dihedral(4));
        for (std::size_t p = 0; p < irreps.size(); ++p)
            if (irreps[p].dim == 2)
                cases.push_back({"dihedral(4)", static_cast<int>(p), {1.0, 0.0}, true, true});
    }
    // symmetric3: 2-dim irrep with a generic vector
    {
        auto irreps = irreps_of(make_symmetric3());
        for (std::size_t p = 0; p < irreps.size(); ++p)
            if (irreps[p].dim == 2)
                cases.push_back({"symmetric3", static_cast<int>(p),
                                 normalized({1.0, 0.5}), false, false});
    }
    // frobenius21: both 3-dim irreps with a generic vector
    {
        auto irreps = irreps_of(make_frobenius21());
        for (std::size_t p = 0; p < irreps.size(); ++p)
            if (irreps[p].dim == 3)
                cases.push_back({"frobenius21", static_cast<int>(p),
                                 normalized({1.0, 0.5, 1.0 / 3.0}), false, false});
    }

    for (const auto& fc : cases) {
        if (!groupFilter.empty() && fc.group.rfind(groupFilter, 0) != 0) continue;
        run_finite_case(fc, res);
    }
    if (res.cases.empty()) res.fail("no catalog case matches group filter '" + groupFilter + "'");
    return res;
}

SuiteResult verify_asymptotic() {
    SuiteResult res;
    res.name = "asymptotic";
    const int tjs[] = {64, 128, 256, 512};
    for (int d = 0; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) {
            double prev = 0.0;
            nlohmann::json row{{"d", d}, {"k", k}, {"scaled", nlohmann::json::array()}};
            for (int i = 0; i < 4; ++i) {
                const int tj = tjs[i];
                Rational r = asymptotic_residual(HalfInt::from_twice(tj), d, k);
                Rational scaled = r * Rational(static_cast<long>(tj) * tj);
                double v = std::abs(scaled.to_double());
                row["scaled"].push_back(scaled.to_double());
                if (v > 2000.0)
                    res.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) +
                             " 2j=" + std::to_string(tj) + ": |r (2j)^2| = " + std::to_string(v) +
                             " exceeds bound");
                if (i > 0) {
                    double ratio = v / prev;
                    if (!(ratio > 0.5 && ratio < 2.0))
                        res.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                 " 2j=" + std::to_string(tj) + ": doubling ratio " +
                                 std::to_string(ratio) + " outside (1/2, 2)");
                }
                prev = v;
            }
            res.cases.push_back(std::move(row));
        }
    return res;
}

SuiteResult verify_chain() {
    SuiteResult res;
    res.name = "chain";
    struct ChainCase {
        int tj, tm;
        double target;
        std::uint64_t seed;
    };
    const ChainCase casesToRun[] = {
        {1, 1, 1.0 / 3.0, 42}, {10, 10, 5.0 / 6.0, 43}, {10, 0, 0.0, 44}};

    for (const auto& cc : casesToRun) {
        ChainConfig config;
        config.j = HalfInt::from_twice(cc.tj);
        config.m = HalfInt::from_twice(cc.tm);
        config.steps = 100000;
        config.burnIn = 1000;
        config.seed = cc.seed;

        GapEstimate est = estimate_lambda1(config);
        GapEstimate rerun = estimate_lambda1(config);
        std::string label = spin_case(cc.tj, cc.tm);

        if (est.lambda1Hat != rerun.lambda1Hat || est.stdError != rerun.stdError ||
            est.acceptanceRate != rerun.acceptanceRate)
            res.fail(label + ": repeat run is not bit-identical");

        double dev = std::abs(est.lambda1Hat - cc.target);
        res.maxDeviation = std::max(res.maxDeviation, dev);
        if (dev > 3.0 * est.stdError)
            res.fail(label + ": |estimate - target| = " + std::to_string(dev) + " > 3 SE = " +
                     std::to_string(3.0 * est.stdError));
        res.cases.push_back({{"j", config.j.str()},
                             {"m", config.m.str()},
                             {"seed", cc.seed},
                             {"lambda1Hat", est.lambda1Hat},
                             {"stdError", est.stdError},
                             {"acceptanceRate", est.acceptanceRate},
                             {"target", cc.target}});
    }
    return res;
}

}
