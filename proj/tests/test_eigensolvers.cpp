#include "berezin/eigensolvers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

using berezin::cdouble;
using berezin::DenseMatrix;
using berezin::general_eigenvalues;
using berezin::singular_values;
using berezin::symmetric_eigenvalues;

namespace {

DenseMatrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = u(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

DenseMatrix random_complex(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cdouble(u(rng), u(rng));
    return m;
}

}

TEST_CASE("symmetric solver on fixed matrices") {
    auto ones = symmetric_eigenvalues(DenseMatrix::identity(5));
    REQUIRE(ones.size() == 5);
    for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    DenseMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    auto diag = symmetric_eigenvalues(d);
    CHECK(diag[0] == doctest::Approx(3.0));
    CHECK(diag[1] == doctest::Approx(2.0));
    CHECK(diag[2] == doctest::Approx(1.0));

    // characteristic polynomial x^2 - 1
    DenseMatrix swap(2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    auto pm = symmetric_eigenvalues(swap);
    CHECK(pm[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pm[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("symmetric solver rejects bad input") {
    DenseMatrix a(2);
    a(0, 1) = 1.0;
    a(1, 0) = 0.5;
    CHECK_THROWS_AS(symmetric_eigenvalues(a), std::invalid_argument);

    DenseMatrix c(2);
    c(0, 0) = cdouble(0.0, 1.0);
    CHECK_THROWS_AS(symmetric_eigenvalues(c), std::invalid_argument);
}

TEST_CASE("symmetric solver satisfies trace and Frobenius identities") {
    std::mt19937_64 rng(7);
    for (int n : {2, 5, 17, 60, 200}) {
        DenseMatrix m = random_symmetric(n, rng);
        auto eig = symmetric_eigenvalues(m);
        double sum = 0.0, sq = 0.0;
        for (double v : eig) {
            sum += v;
            sq += v * v;
        }
        double fro = m.frobenius_norm();
        CHECK(std::abs(sum - m.trace().real()) <= 1e-9 * std::max(1.0, fro));
        CHECK(std::abs(sq - fro * fro) <= 1e-9 * std::max(1.0, fro * fro));
    }
}

TEST_CASE("general solver on fixed matrices") {
    DenseMatrix one(1);
    one(0, 0) = cdouble(2.5, -1.0);
    auto single = general_eigenvalues(one);
    REQUIRE(single.size() == 1);
    CHECK(std::abs(single[0] - cdouble(2.5, -1.0)) <= 1e-14);

    DenseMatrix rot(2);
    rot(0, 0) = cdouble(0.0, 1.0);
    rot(1, 1) = cdouble(0.0, -1.0);
    auto pair = general_eigenvalues(rot);
    std::sort(pair.begin(), pair.end(),
              [](cdouble a, cdouble b) { return a.imag() > b.imag(); });
    CHECK(std::abs(pair[0] - cdouble(0.0, 1.0)) <= 1e-12);
    CHECK(std::abs(pair[1] - cdouble(0.0, -1.0)) <= 1e-12);

    DenseMatrix nil(2);
    nil(0, 1) = 1.0;
    auto zz = general_eigenvalues(nil);
    CHECK(std::abs(zz[0]) <= 1e-12);
    CHECK(std::abs(zz[1]) <= 1e-12);
}

TEST_CASE("general solver dimension cap") {
    CHECK_THROWS_AS(general_eigenvalues(DenseMatrix(33)), std::invalid_argument);
    CHECK(general_eigenvalues(DenseMatrix(0)).empty());
}

TEST_CASE("general solver eigenvalue sums match traces") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 5, 8, 16, 32}) {
        DenseMatrix m = random_complex(n, rng);
        auto eig = general_eigenvalues(m);
        REQUIRE(static_cast<int>(eig.size()) == n);
        cdouble sum = 0.0;
        for (auto v : eig) sum += v;
        CHECK(std::abs(sum - m.trace()) <= 1e-9 * std::max(1.0, m.frobenius_norm()));
    }
}

TEST_CASE("general solver agrees with the symmetric one") {
    std::mt19937_64 rng(13);
    for (int n : {2, 4, 7}) {
        DenseMatrix m = random_symmetric(n, rng);
        auto sym = symmetric_eigenvalues(m);
        auto gen = general_eigenvalues(m);
        std::sort(gen.begin(), gen.end(),
                  [](cdouble a, cdouble b) { return a.real() > b.real(); });
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(gen[i].imag()) <= 1e-10);
            CHECK(std::abs(gen[i].real() - sym[i]) <= 1e-9);
        }
    }
}

TEST_CASE("general solver resolves repeated and defective eigenvalues") {
    // Jordan block with eigenvalue 2, algebraic multiplicity 3
    DenseMatrix jb(3);
    for (int i = 0; i < 3; ++i) jb(i, i) = 2.0;
    jb(0, 1) = 1.0;
    jb(1, 2) = 1.0;
    auto eig = general_eigenvalues(jb);
    for (auto v : eig) CHECK(std::abs(v - cdouble(2.0)) <= 2e-5);  // cube-root sensitivity
}

TEST_CASE("singular values of a rank-one matrix") {
    // outer product (1, 2i)^T (3, 4): singular values {5 sqrt 5, 0}
    DenseMatrix m(2);
    m(0, 0) = 3.0;
    m(0, 1) = 4.0;
    m(1, 0) = cdouble(0.0, 6.0);
    m(1, 1) = cdouble(0.0, 8.0);
    auto sv = singular_values(m);
    CHECK(sv[0] == doctest::Approx(5.0 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(std::abs(sv[1]) <= 1e-7);
}
