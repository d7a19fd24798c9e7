#include "berezin/spectrum.hpp"

#include <stdexcept>

namespace berezin {

namespace {

void check_spin_pair(HalfInt j, HalfInt m) {
    if (j.twice() < 0) throw std::invalid_argument("spin j must be nonnegative");
    if (!j.same_parity(m))
        throw std::invalid_argument("j - m must be an integer (parity mismatch)");
    if (m.abs() > j) throw std::invalid_argument("|m| must not exceed j");
}

}

Rational SpectrumTable::weighted_sum() const {
    Rational s;
    for (const auto& e : entries) s += Rational(e.multiplicity) * e.lambda;
    return s;
}

SpectrumCalculator::SpectrumCalculator(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("spin j must be nonnegative");
    tj_ = j.twice();

    fact_.resize(2 * tj_ + 3);
    fact_[0] = 1;
    for (int i = 1; i < static_cast<int>(fact_.size()); ++i) fact_[i] = fact_[i - 1] * i;

    binom_.resize(tj_ + 1);
    for (int n = 0; n <= tj_; ++n) {
        binom_[n].resize(n + 1);
        binom_[n][0] = 1;
        binom_[n][n] = 1;
        for (int k = 1; k < n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + binom_[n - 1][k];
    }
}

void SpectrumCalculator::check_m(HalfInt m) const {
    check_spin_pair(HalfInt::from_twice(tj_), m);
}

void SpectrumCalculator::check_J(int J) const {
    if (J < 0 || J > tj_)
        throw std::invalid_argument("J must lie in [0, 2j]");
}

mpz_class SpectrumCalculator::signed_sum(int d, int J) const {
    const int zlo = std::max(0, d - J);
    const int zhi = std::min(d, tj_ - J);
    const auto& rowA = binom_[tj_ - J];
    const auto& rowB = binom_[J];

    mpz_class acc = 0, term;
    for (int z = zlo; z <= zhi; ++z) {
        const mpz_class& b = rowB[d - z];
        mpz_mul(term.get_mpz_t(), b.get_mpz_t(), b.get_mpz_t());
        mpz_mul(term.get_mpz_t(), term.get_mpz_t(), rowA[z].get_mpz_t());
        if (z & 1)
            mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        else
            mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
    }
    return acc;
}

Rational SpectrumCalculator::eigenvalue(HalfInt m, int J) const {
    check_m(m);
    check_J(J);
    const int d = (tj_ - m.twice()) / 2;

    // prefactor (2j)!(2j+1)! / ((2j-J)!(2j+J+1)!) kept as a ratio of short
    // falling/rising products to cheapen the final reduction
    mpz_class num = 1, den = 1;
    for (int i = 0; i < J; ++i) num *= tj_ - i;
    for (int i = 2; i <= J + 1; ++i) den *= tj_ + i;

    mpz_class s = signed_sum(d, J);
    num *= s * s;
    const mpz_class& c = binom_[tj_][d];
    den *= c * c;
    return Rational(num, den);
}

Rational SpectrumCalculator::cg_squared(HalfInt m, int J) const {
    return eigenvalue(m, J) * Rational(2 * J + 1, tj_ + 1);
}

SpectrumTable SpectrumCalculator::table(HalfInt m) const {
    check_m(m);
    const int d = (tj_ - m.twice()) / 2;
    const mpz_class& c = binom_[tj_][d];
    mpz_class c2 = c * c;

    SpectrumTable t;
    t.j = HalfInt::from_twice(tj_);
    t.m = m;
    t.entries.reserve(tj_ + 1);

    mpz_class falling = 1, rising = 1, num;
    for (int J = 0; J <= tj_; ++J) {
        if (J > 0) {
            falling *= tj_ - J + 1;
            rising *= tj_ + J + 1;
        }
        mpz_class s = signed_sum(d, J);
        num = falling * s;
        num *= s;
        t.entries.push_back({J, Rational(num, rising * c2), 2 * J + 1});
    }
    return t;
}

Rational eigenvalue(HalfInt j, HalfInt m, int J) {
    return SpectrumCalculator(j).eigenvalue(m, J);
}

Rational cg_squared(HalfInt j, HalfInt m, int J) {
    return SpectrumCalculator(j).cg_squared(m, J);
}

SpectrumTable spectrum(HalfInt j, HalfInt m) {
    return SpectrumCalculator(j).table(m);
}

Rational highest_weight_closed_form(HalfInt j, int J) {
    if (j.twice() < 0) throw std::invalid_argument("spin j must be nonnegative");
    const int tj = j.twice();
    if (J < 0 || J > tj) throw std::invalid_argument("J must lie in [0, 2j]");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < J; ++i) num *= tj - i;
    for (int i = 2; i <= J + 1; ++i) den *= tj + i;
    return Rational(num, den);
}

Rational spectral_gap(HalfInt j, HalfInt m) {
    check_spin_pair(j, m);
    if (j.twice() < 1)
        throw std::invalid_argument("spectral_gap requires j >= 1/2");
    SpectrumTable t = spectrum(j, m);
    Rational best = t.entries[1].lambda;
    for (std::size_t i = 2; i < t.entries.size(); ++i)
        if (t.entries[i].lambda > best) best = t.entries[i].lambda;
    return Rational(1) - best;
}

OscillationProfile oscillation_profile(const SpectrumTable& table) {
    OscillationProfile p;
    const auto& e = table.entries;
    const int last = static_cast<int>(e.size()) - 1;
    for (int J = 1; J < last; ++J) {
        if (e[J - 1].lambda > e[J].lambda && e[J].lambda < e[J + 1].lambda)
            p.minima.push_back(J);
        if (e[J - 1].lambda < e[J].lambda && e[J].lambda > e[J + 1].lambda)
            p.maxima.push_back(J);
    }
    for (int J = 0; J < last; ++J)
        if (e[J].lambda == e[J + 1].lambda) p.plateaus.push_back(J);
    return p;
}

OscillationProfile oscillation_profile(HalfInt j, HalfInt m) {
    return oscillation_profile(spectrum(j, m));
}

bool dominance(const SpectrumTable& table) {
    const auto& e = table.entries;
    if (e.size() < 3) throw std::invalid_argument("dominance requires j >= 1");
    for (std::size_t i = 2; i < e.size(); ++i)
        if (!(e[1].lambda > e[i].lambda)) return false;
    return true;
}

bool dominance(HalfInt j, HalfInt m) {
    check_spin_pair(j, m);
    if (j.twice() < 2) throw std::invalid_argument("dominance requires j >= 1");
    return dominance(spectrum(j, m));
}

Rational asymptotic_residual(HalfInt j, int d, int k) {
    const int tj = j.twice();
    if (tj <= 0) throw std::invalid_argument("asymptotic_residual requires j > 0");
    if (d < 0 || d > tj) throw std::invalid_argument("need 0 <= d <= 2j");
    if (k < 1 || k > tj) throw std::invalid_argument("need 1 <= k <= 2j");
    HalfInt m = HalfInt::from_twice(tj - 2 * d);
    Rational lam = eigenvalue(j, m, k);
    return lam - Rational(1) + Rational(static_cast<long>(k) * (k + 1) * (2 * d + 1), tj);
}

}
