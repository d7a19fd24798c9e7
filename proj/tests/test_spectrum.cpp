#include "berezin/spectrum.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using berezin::cg_squared;
using berezin::dominance;
using berezin::eigenvalue;
using berezin::factorial;
using berezin::HalfInt;
using berezin::highest_weight_closed_form;
using berezin::oscillation_profile;
using berezin::Rational;
using berezin::spectral_gap;
using berezin::spectrum;
using berezin::SpectrumCalculator;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// Independent oracle: the squared Clebsch-Gordan coefficient from the Racah
// single-sum formula, assembled with plain factorials and exact rationals.
// Deliberately a different algebraic arrangement than the production code.
Rational lambda_oracle(int tj, int tm, int J) {
    const int d = (tj - tm) / 2;    // j - m
    const int jpm = (tj + tm) / 2;  // j + m

    Rational pre1(factorial(tj - J) * factorial(J) * factorial(J), factorial(tj + J + 1));
    mpz_class pre2 = factorial(J) * factorial(J) * factorial(jpm) * factorial(jpm) *
                     factorial(d) * factorial(d);

    Rational sum(0);
    for (int z = std::max(0, d - J); z <= std::min(tj - J, d); ++z) {
        mpz_class den = factorial(z) * factorial(tj - J - z) * factorial(d - z) *
                        factorial(d - z) * factorial(J - d + z) * factorial(J - d + z);
        Rational term(z % 2 ? -1 : 1, 1);
        sum += term / Rational(den, 1);
    }
    return Rational(tj + 1) * pre1 * Rational(pre2, 1) * sum * sum;
}

}

TEST_CASE("eigenvalue matches the independent coefficient oracle") {
    for (int tj = 0; tj <= 20; ++tj) {
        SpectrumCalculator calc(h(tj));
        for (int tm = -tj; tm <= tj; tm += 2)
            for (int J = 0; J <= tj; ++J)
                REQUIRE(calc.eigenvalue(h(tm), J) == lambda_oracle(tj, tm, J));
    }
}

TEST_CASE("frozen eigenvalues") {
    CHECK(eigenvalue(h(2), h(2), 2) == Rational(1, 10));
    CHECK(eigenvalue(h(2), h(2), 1) == Rational(1, 2));
    CHECK(eigenvalue(h(2), h(0), 2) == Rational(2, 5));
    CHECK(eigenvalue(h(2), h(0), 1) == Rational(0));
    CHECK(eigenvalue(h(1), h(1), 1) == Rational(1, 3));

    // every spectrum starts at 1
    for (int tj : {0, 1, 2, 5, 9, 31})
        for (int tm = -tj; tm <= tj; tm += 4)
            CHECK(eigenvalue(h(tj), h(tm), 0) == Rational(1));
}

TEST_CASE("eigenvalue argument validation") {
    CHECK_THROWS_AS(eigenvalue(h(2), h(2), 3), std::invalid_argument);   // J > 2j
    CHECK_THROWS_AS(eigenvalue(h(2), h(2), -1), std::invalid_argument);  // J < 0
    CHECK_THROWS_AS(eigenvalue(h(2), h(1), 1), std::invalid_argument);   // parity
    CHECK_THROWS_AS(eigenvalue(h(2), h(4), 1), std::invalid_argument);   // |m| > j
    CHECK_THROWS_AS(eigenvalue(h(-2), h(0), 0), std::invalid_argument);  // j < 0
}

TEST_CASE("squared coupling coefficients") {
    // J = 0 coefficient is 1/(2j+1)
    for (int tj : {1, 2, 3, 8, 15})
        for (int tm = -tj; tm <= tj; tm += 2)
            CHECK(cg_squared(h(tj), h(tm), 0) == Rational(1, tj + 1));

    CHECK(cg_squared(h(2), h(2), 1) == Rational(1, 2));

    // completeness: the coefficients sum to 1
    for (auto [tj, tm] : {std::pair{3, 1}, {4, 0}, {7, 5}, {10, -6}}) {
        Rational total(0);
        for (int J = 0; J <= tj; ++J) total += cg_squared(h(tj), h(tm), J);
        CHECK(total == Rational(1));
    }
}

TEST_CASE("spectrum tables") {
    auto half = spectrum(h(1), h(1));
    REQUIRE(half.entries.size() == 2);
    CHECK(half.entries[0].lambda == Rational(1));
    CHECK(half.entries[0].multiplicity == 1);
    CHECK(half.entries[1].lambda == Rational(1, 3));
    CHECK(half.entries[1].multiplicity == 3);

    auto one = spectrum(h(2), h(2));
    REQUIRE(one.entries.size() == 3);
    CHECK(one.entries[1].lambda == Rational(1, 2));
    CHECK(one.entries[2].lambda == Rational(1, 10));
    CHECK(one.entries[2].multiplicity == 5);
    CHECK(one.weighted_sum() == Rational(3));

    auto threehalf = spectrum(h(3), h(1));
    REQUIRE(threehalf.entries.size() == 4);
    CHECK(threehalf.entries[1].lambda == Rational(1, 15));
    CHECK(threehalf.entries[2].lambda == Rational(1, 5));
    CHECK(threehalf.entries[3].lambda == Rational(9, 35));

    // m and -m give identical tables
    for (auto [tj, tm] : {std::pair{5, 3}, {8, 4}, {13, 7}}) {
        auto plus = spectrum(h(tj), h(tm));
        auto minus = spectrum(h(tj), h(-tm));
        for (int J = 0; J <= tj; ++J) CHECK(plus.entries[J].lambda == minus.entries[J].lambda);
    }

    // weighted sums equal 2j+1
    for (auto [tj, tm] : {std::pair{6, 0}, {9, 5}, {12, 12}})
        CHECK(spectrum(h(tj), h(tm)).weighted_sum() == Rational(tj + 1));
}

TEST_CASE("highest weight closed form") {
    for (int tj : {1, 2, 3, 10, 41}) {
        CHECK(highest_weight_closed_form(h(tj), 0) == Rational(1));
        CHECK(highest_weight_closed_form(h(tj), 1) == Rational(tj, tj + 2));  // j/(j+1)
    }
    CHECK(highest_weight_closed_form(h(2), 2) == Rational(1, 10));
    CHECK_THROWS_AS(highest_weight_closed_form(h(2), 3), std::invalid_argument);

    // agrees with the generic formula along m = j
    for (int tj = 0; tj <= 24; ++tj) {
        SpectrumCalculator calc(h(tj));
        for (int J = 0; J <= tj; ++J)
            CHECK(calc.eigenvalue(h(tj), J) == highest_weight_closed_form(h(tj), J));
    }
}

TEST_CASE("spectral gaps") {
    CHECK(spectral_gap(h(1), h(1)) == Rational(2, 3));
    for (int tj : {1, 2, 3, 9, 40})
        CHECK(spectral_gap(h(tj), h(tj)) == Rational(2, tj + 2));  // 1/(j+1)
    CHECK(spectral_gap(h(7), h(5)) == Rational(38, 63));
    CHECK_THROWS_AS(spectral_gap(h(0), h(0)), std::invalid_argument);
}

TEST_CASE("oscillation profiles") {
    // strictly decreasing along m = j: no interior extrema
    auto flat = oscillation_profile(h(12), h(12));
    CHECK(flat.minima.empty());
    CHECK(flat.maxima.empty());
    CHECK(flat.plateaus.empty());

    auto second = oscillation_profile(h(200), h(198));
    CHECK(second.minima == std::vector<int>{14});
    CHECK(second.maxima == std::vector<int>{24});
    CHECK(second.plateaus.empty());

    auto fourth = oscillation_profile(h(200), h(192));
    CHECK(fourth.minima.size() == 4);
    CHECK(fourth.maxima.size() == 4);
    CHECK(fourth.plateaus.empty());
}

TEST_CASE("dominance of the degree-one eigenvalue") {
    CHECK(dominance(h(5), h(3)));
    CHECK(dominance(h(200), h(192)));
    for (int tj : {2, 3, 7, 21}) CHECK(dominance(h(tj), h(tj)));
    CHECK_THROWS_AS(dominance(h(1), h(1)), std::invalid_argument);
    // at m = 0 the degree-one eigenvalue vanishes, so it cannot dominate
    CHECK_FALSE(dominance(h(4), h(0)));
}

TEST_CASE("residuals against the linear model") {
    // d = 0, k = 1: j/(j+1) - (1 - 1/j) = 1/(j(j+1))
    for (int tj : {2, 4, 10, 64}) {
        Rational jr(tj, 2);
        CHECK(berezin::asymptotic_residual(h(tj), 0, 1) ==
              Rational(1) / (jr * (jr + Rational(1))));
    }
    CHECK(berezin::asymptotic_residual(h(1), 0, 1) == Rational(4, 3));
    CHECK_THROWS_AS(berezin::asymptotic_residual(h(4), 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(berezin::asymptotic_residual(h(4), 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(berezin::asymptotic_residual(h(4), 0, 0), std::invalid_argument);
}
