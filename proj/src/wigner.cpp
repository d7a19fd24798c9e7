#include "berezin/wigner.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

const std::array<double, 171>& factorial_table() {
    static const auto table = [] {
        std::array<double, 171> f{};
        f[0] = 1.0;
        for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
        return f;
    }();
    return table;
}

double lfact(int n) { return std::lgamma(n + 1.0); }

// base^p with 0^0 = 1; log-space variant returns log(base^p) or -inf
double ipow(double base, int p) {
    if (p == 0) return 1.0;
    return std::pow(base, p);
}

}

double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double beta) {
    const int tj = j.twice(), tm1 = m1.twice(), tm2 = m2.twice();
    if (tj < 0) throw std::invalid_argument("wigner_small_d: j must be nonnegative");
    if (!j.same_parity(m1) || !j.same_parity(m2))
        throw std::invalid_argument("wigner_small_d: m parity does not match j");
    if (std::abs(tm1) > tj || std::abs(tm2) > tj)
        throw std::invalid_argument("wigner_small_d: |m| exceeds j");

    const int jpm2 = (tj + tm2) / 2, jmm2 = (tj - tm2) / 2;
    const int jpm1 = (tj + tm1) / 2, jmm1 = (tj - tm1) / 2;
    const int dm = (tm2 - tm1) / 2;  // m2 - m1, an integer
    // factorial arguments j+m2-k, k, j-m1-k, k-m2+m1 must stay nonnegative
    const int klo = std::max(0, dm);
    const int khi = std::min(jpm2, jmm1);

    const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);

    double sum = 0.0;
    if (tj <= 60) {
        const auto& f = factorial_table();
        // product of square roots, not square root of the product: the
        // latter can overflow already at 2j = 60
        const double pref =
            std::sqrt(f[jpm2]) * std::sqrt(f[jmm2]) * std::sqrt(f[jpm1]) * std::sqrt(f[jmm1]);
        for (int k = klo; k <= khi; ++k) {
            int cpow = tj - 2 * k + dm;
            int spow = 2 * k - dm;
            double denom = f[jpm2 - k] * f[k] * f[jmm1 - k] * f[k - dm];
            double term = pref / denom * ipow(c, cpow) * ipow(s, spow);
            sum += ((k - dm) % 2 == 0 ? 1.0 : -1.0) * term;
        }
    } else {
        const double lpref = 0.5 * (lfact(jpm2) + lfact(jmm2) + lfact(jpm1) + lfact(jmm1));
        const double lc = c > 0.0 ? std::log(c) : 0.0;
        const double ls = s > 0.0 ? std::log(s) : 0.0;
        for (int k = klo; k <= khi; ++k) {
            int cpow = tj - 2 * k + dm;
            int spow = 2 * k - dm;
            if ((c == 0.0 && cpow > 0) || (s == 0.0 && spow > 0)) continue;
            double lterm = lpref - lfact(jpm2 - k) - lfact(k) - lfact(jmm1 - k) -
                           lfact(k - dm) + cpow * lc + spow * ls;
            sum += ((k - dm) % 2 == 0 ? 1.0 : -1.0) * std::exp(lterm);
        }
    }
    return sum;
}

ZonalKernel::ZonalKernel(HalfInt j, HalfInt m) : j_(j), m_(m) {
    if (j.twice() < 0) throw std::invalid_argument("kernel needs j >= 0");
    if (!j.same_parity(m)) throw std::invalid_argument("j - m must be an integer");
    if (m.abs() > j) throw std::invalid_argument("|m| must not exceed j");
}

double ZonalKernel::operator()(double gamma) const {
    double d = wigner_small_d(j_, m_, m_, gamma);
    return (j_.twice() + 1.0) * d * d;
}

}
