#include "berezin/sphere_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace berezin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// chi_J as the Chebyshev polynomial U_{2J}(cos psi); identical to the
// sin-ratio form but free of the sin(psi) = 0 branches, which makes it the
// right evaluator inside quadrature loops.
double chebyshev_u(int n, double x) {
    double u0 = 1.0, u1 = 2.0 * x;
    if (n == 0) return u0;
    for (int i = 2; i <= n; ++i) {
        double u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

}

double su2_character(HalfInt J, const EulerAngles& g) {
    if (J.twice() < 0) throw std::invalid_argument("su2_character: J must be nonnegative");
    const double cpsi = std::cos(g.beta / 2.0) * std::cos((g.alpha + g.gamma) / 2.0);
    const double psi = std::acos(std::clamp(cpsi, -1.0, 1.0));
    const double spsi = std::sin(psi);
    const double dim = J.twice() + 1.0;
    if (std::abs(spsi) < 1e-9) {
        if (cpsi > 0.0) return dim;                      // psi ~ 0
        return (J.twice() % 2 == 0) ? dim : -dim;        // psi ~ pi, sign (-1)^{2J}
    }
    return std::sin(dim * psi) / spsi;
}

double funk_hecke_eigenvalue(const ZonalKernel& kernel, int k, const QuadratureRule& rule) {
    if (k < 0) throw std::invalid_argument("funk_hecke_eigenvalue: negative degree");
    const int required = kernel.j().twice() + k + 2;
    if (static_cast<int>(rule.nodes.size()) < required)
        throw std::invalid_argument("funk_hecke_eigenvalue: quadrature order too low");

    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i];
        acc += rule.weights[i] * kernel(std::acos(t)) * legendre_p(k, t);
    }
    return 0.5 * acc;
}

double funk_hecke_eigenvalue(HalfInt j, HalfInt m, int k, int order) {
    ZonalKernel kernel(j, m);
    if (k < 0) throw std::invalid_argument("funk_hecke_eigenvalue: negative degree");
    if (order < j.twice() + k + 2)
        throw std::invalid_argument("funk_hecke_eigenvalue: quadrature order too low");
    return funk_hecke_eigenvalue(kernel, k, gauss_legendre(order));
}

double character_inner_product(HalfInt j, HalfInt m, HalfInt J, int order) {
    if (J.twice() < 0) throw std::invalid_argument("character_inner_product: J >= 0 required");
    if (order < 2 * j.twice() + 2 * J.twice() + 8)
        throw std::invalid_argument("character_inner_product: order below 4j + 4J + 8");

    ZonalKernel kernel(j, m);
    const int tJ = J.twice();
    const QuadratureRule rule = gauss_legendre(order);
    const int n = order;

    // beta axis: fold the kernel value, sin(beta) and the jacobians into one
    // weight per node
    std::vector<double> wbeta(n), cbeta2(n);
    for (int b = 0; b < n; ++b) {
        double beta = 0.5 * kPi * (rule.nodes[b] + 1.0);
        wbeta[b] = rule.weights[b] * (0.5 * kPi) * std::sin(beta) * kernel(beta);
        cbeta2[b] = std::cos(beta / 2.0);
    }
    // alpha and gamma enter only through cos((alpha+gamma)/2)
    std::vector<double> chalf(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        double alpha = kPi * (rule.nodes[a] + 1.0);
        for (int c = 0; c < n; ++c) {
            double gamma = 2.0 * kPi * (rule.nodes[c] + 1.0);
            chalf[static_cast<std::size_t>(a) * n + c] = std::cos(0.5 * (alpha + gamma));
        }
    }

    double total = 0.0;
    for (int a = 0; a < n; ++a) {
        double wa = rule.weights[a] * kPi;
        double inner = 0.0;
        for (int c = 0; c < n; ++c) {
            double wc = rule.weights[c] * 2.0 * kPi;
            double v = chalf[static_cast<std::size_t>(a) * n + c];
            double s = 0.0;
            for (int b = 0; b < n; ++b) s += wbeta[b] * chebyshev_u(tJ, cbeta2[b] * v);
            inner += wc * s;
        }
        total += wa * inner;
    }
    return total / (16.0 * kPi * kPi);
}

}
