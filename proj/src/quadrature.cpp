#include "berezin/quadrature.hpp"

#include "berezin/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

// P_n(x) and P_n'(x) in one pass.
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}

QuadratureRule gauss_legendre(int n) {
    if (n < 1 || n > tol::max_quadrature_points)
        throw std::invalid_argument("gauss_legendre: n out of range");

    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i-th largest root
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        if (n % 2 == 1 && i == half - 1) x = 0.0;

        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, x, p, dp);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        legendre_pair(n, x, p, dp);

        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

double legendre_p(int k, double t) {
    if (k < 0) throw std::invalid_argument("legendre_p: negative degree");
    if (std::abs(t) > 1.0) throw std::invalid_argument("legendre_p: |t| > 1");
    if (k == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int i = 2; i <= k; ++i) {
        double p2 = ((2 * i - 1) * t * p1 - (i - 1) * p0) / i;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}
