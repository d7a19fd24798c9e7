#include "berezin/sphere_oracle.hpp"
#include "berezin/spectrum.hpp"
#include "berezin/wigner.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace berezin;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
constexpr double kPi = 3.14159265358979323846;

}

TEST_CASE("rotation matrix elements at the identity") {
    for (int tj : {0, 1, 2, 5, 11})
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int tm2 = -tj; tm2 <= tj; tm2 += 2) {
                double d = wigner_small_d(h(tj), h(tm1), h(tm2), 0.0);
                CHECK(d == doctest::Approx(tm1 == tm2 ? 1.0 : 0.0).epsilon(1e-14));
            }
}

TEST_CASE("extremal matrix element is the half-angle cosine power") {
    for (int tj : {1, 2, 7, 20, 100})  // includes the log-space branch
        for (double beta : {0.1, 0.7, 1.9, 2.8}) {
            double expected = std::pow(std::cos(beta / 2.0), tj);
            CHECK(wigner_small_d(h(tj), h(tj), h(tj), beta) ==
                  doctest::Approx(expected).epsilon(1e-11));
        }
}

TEST_CASE("middle element of the spin-one block is the cosine") {
    for (double beta : {0.0, 0.4, 1.3, 2.2, kPi})
        CHECK(wigner_small_d(h(2), h(0), h(0), beta) ==
              doctest::Approx(std::cos(beta)).epsilon(1e-13));
}

TEST_CASE("rows of the rotation block are unit vectors") {
    for (int tj = 0; tj <= 30; ++tj)
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int grid = 0; grid < 50; ++grid) {
                double beta = kPi * (grid + 0.5) / 50.0;
                double sum = 0.0;
                for (int tm2 = -tj; tm2 <= tj; tm2 += 2) {
                    double d = wigner_small_d(h(tj), h(tm1), h(tm2), beta);
                    sum += d * d;
                }
                CHECK(std::abs(sum - 1.0) <= 1e-11);
            }
}

TEST_CASE("matrix element argument validation") {
    CHECK_THROWS_AS(wigner_small_d(h(2), h(1), h(0), 0.3), std::invalid_argument);
    CHECK_THROWS_AS(wigner_small_d(h(2), h(4), h(0), 0.3), std::invalid_argument);
    CHECK_THROWS_AS(wigner_small_d(h(-1), h(1), h(1), 0.3), std::invalid_argument);
}

TEST_CASE("zonal kernel values") {
    for (auto [tj, tm] : {std::pair{1, 1}, {4, 2}, {9, -3}}) {
        ZonalKernel kernel(h(tj), h(tm));
        CHECK(kernel(0.0) == doctest::Approx(tj + 1.0).epsilon(1e-12));
        for (int grid = 0; grid <= 40; ++grid) {
            double gamma = kPi * grid / 40.0;
            double v = kernel(gamma);
            CHECK(v >= -1e-12);
            CHECK(v <= tj + 1.0 + 1e-12);
        }
    }

    // highest weight kernel: (2j+1) cos^(4j)(gamma/2)
    ZonalKernel top(h(6), h(6));
    for (double gamma : {0.3, 1.0, 2.4})
        CHECK(top(gamma) == doctest::Approx(7.0 * std::pow(std::cos(gamma / 2.0), 12)).epsilon(1e-12));

    ZonalKernel half(h(1), h(1));
    CHECK(half(kPi) == doctest::Approx(0.0));

    CHECK_THROWS_AS(ZonalKernel(h(2), h(4)), std::invalid_argument);
    CHECK_THROWS_AS(ZonalKernel(h(2), h(1)), std::invalid_argument);
}

TEST_CASE("kernel mass is one") {
    // degree-0 projection equals 1: the kernel is a transition density
    for (auto [tj, tm] : {std::pair{0, 0}, {1, 1}, {6, 6}, {7, 3}, {12, 0}})
        CHECK(std::abs(funk_hecke_eigenvalue(h(tj), h(tm), 0, tj + 10) - 1.0) <= 1e-12);
}

TEST_CASE("quadrature eigenvalues match the exact spectrum") {
    for (int tj = 0; tj <= 12; ++tj) {
        SpectrumCalculator calc(h(tj));
        for (int tm = -tj; tm <= tj; tm += 2) {
            ZonalKernel kernel(h(tj), h(tm));
            auto rule = gauss_legendre(200);
            for (int k = 0; k <= tj; ++k) {
                double numeric = funk_hecke_eigenvalue(kernel, k, rule);
                double exact = calc.eigenvalue(h(tm), k).to_double();
                CHECK(std::abs(numeric - exact) <= 1e-9);
            }
            // beyond the band the kernel is orthogonal to the harmonics
            for (int k = tj + 1; k <= tj + 4; ++k)
                CHECK(std::abs(funk_hecke_eigenvalue(kernel, k, rule)) <= 1e-9);
        }
    }

    // degree-1 value along the highest weight: j/(j+1)
    for (int tj : {1, 2, 8, 20})
        CHECK(std::abs(funk_hecke_eigenvalue(h(tj), h(tj), 1, 200) -
                       static_cast<double>(tj) / (tj + 2)) <= 1e-10);
}

TEST_CASE("quadrature order must cover the integrand degree") {
    CHECK_THROWS_AS(funk_hecke_eigenvalue(h(10), h(10), 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(funk_hecke_eigenvalue(h(2), h(0), -1, 50), std::invalid_argument);
}

TEST_CASE("group characters") {
    EulerAngles id{0.0, 0.0, 0.0};
    for (int tJ : {0, 1, 2, 3, 10})
        CHECK(su2_character(h(tJ), id) == doctest::Approx(tJ + 1.0).epsilon(1e-12));

    // J = 0 character is constant 1
    for (double a : {0.2, 3.0})
        for (double b : {0.1, 2.0})
            CHECK(su2_character(h(0), {a, b, 1.3}) == doctest::Approx(1.0).epsilon(1e-12));

    // J = 1/2 character is twice the half-trace
    for (double a : {0.0, 1.1, 4.4})
        for (double b : {0.3, 2.9}) {
            double cpsi = std::cos(b / 2.0) * std::cos((a + 1.7) / 2.0);
            CHECK(su2_character(h(1), {a, b, 1.7}) == doctest::Approx(2.0 * cpsi).epsilon(1e-12));
        }

    // antipode: chi picks up the central sign (-1)^{2J}
    EulerAngles antipode{0.0, 0.0, 2.0 * kPi};
    CHECK(su2_character(h(2), antipode) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(su2_character(h(1), antipode) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(su2_character(h(3), antipode) == doctest::Approx(-4.0).epsilon(1e-9));
}

TEST_CASE("character pairings reproduce the spectrum and vanish off the band") {
    for (int tj : {0, 1, 2, 4, 5}) {
        SpectrumCalculator calc(h(tj));
        for (int tm = -tj; tm <= tj; tm += 2) {
            for (int tJ = 0; tJ <= 2 * tj + 2; ++tJ) {
                int order = 2 * tj + 2 * tJ + 8;
                double numeric = character_inner_product(h(tj), h(tm), h(tJ), order);
                double expected = 0.0;
                if (tJ % 2 == 0 && tJ / 2 <= tj)
                    expected = calc.eigenvalue(h(tm), tJ / 2).to_double();
                CHECK(std::abs(numeric - expected) <= 1e-6);
            }
        }
    }
}

TEST_CASE("character pairing validates the order bound") {
    CHECK_THROWS_AS(character_inner_product(h(2), h(0), h(2), 11), std::invalid_argument);
}
