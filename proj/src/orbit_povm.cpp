#include "berezin/orbit_povm.hpp"

#include "berezin/eigensolvers.hpp"
#include "berezin/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace berezin {

namespace {

std::vector<cdouble> apply(const DenseMatrix& m, const std::vector<cdouble>& v) {
    std::vector<cdouble> out(v.size(), cdouble{});
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

cdouble inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

void check_unit(const Irrep& rep, const std::vector<cdouble>& v) {
    if (static_cast<int>(v.size()) != rep.dim)
        throw std::invalid_argument("vector length does not match irrep dimension");
    double n2 = 0.0;
    for (const auto& c : v) n2 += std::norm(c);
    if (std::abs(std::sqrt(n2) - 1.0) > tol::unit_vector)
        throw std::invalid_argument("vector is not normalized");
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& k) {
    std::vector<char> member(g.order, 0);
    for (int e : k) member[e] = 1;
    if (!member[g.identity]) return false;
    for (int a : k) {
        if (!member[g.inv(a)]) return false;
        for (int b : k)
            if (!member[g.mul(a, b)]) return false;
    }
    return true;
}

// partition of the elements into double cosets K x K
std::vector<std::vector<int>> double_cosets(const FiniteGroup& g, const std::vector<int>& k) {
    std::vector<int> assigned(g.order, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < g.order; ++x) {
        if (assigned[x] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> coset;
        for (int a : k)
            for (int b : k) {
                int y = g.mul(g.mul(a, x), b);
                if (assigned[y] < 0) {
                    assigned[y] = id;
                    coset.push_back(y);
                }
            }
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

std::vector<double> convolve(const FiniteGroup& g, const std::vector<double>& f,
                             const std::vector<double>& h) {
    std::vector<double> out(g.order, 0.0);
    for (int x = 0; x < g.order; ++x) {
        double s = 0.0;
        for (int t = 0; t < g.order; ++t) s += f[t] * h[g.mul(g.inv(t), x)];
        out[x] = s / g.order;
    }
    return out;
}

}

std::vector<int> phase_stabilizer(const FiniteGroup& g, const Irrep& rep,
                                  const std::vector<cdouble>& v) {
    check_unit(rep, v);
    std::vector<int> k;
    for (int a = 0; a < g.order; ++a) {
        auto w = apply(rep.matrices[a], v);
        cdouble phase = inner(w, v);
        double defect2 = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) defect2 += std::norm(w[i] - phase * v[i]);
        double defect = std::sqrt(defect2);
        if (defect <= tol::stabilizer_accept && std::abs(phase) >= 1.0 - tol::stabilizer_accept) {
            k.push_back(a);
        } else if (defect < tol::stabilizer_reject) {
            throw ill_conditioned_vector(
                "stabilizer membership is numerically ambiguous for element " +
                std::to_string(a) + "; perturb the vector and retry");
        }
    }
    if (!is_subgroup(g, k))
        throw std::logic_error("phase stabilizer is not a subgroup");
    return k;
}

std::vector<double> u_function(const FiniteGroup& g, const Irrep& rep,
                               const std::vector<cdouble>& v) {
    check_unit(rep, v);
    std::vector<double> u(g.order);
    for (int a = 0; a < g.order; ++a)
        u[a] = rep.dim * std::norm(inner(apply(rep.matrices[a], v), v));
    return u;
}

bool gelfand_check(const FiniteGroup& g, const std::vector<int>& k) {
    if (!is_subgroup(g, k)) throw std::invalid_argument("K is not a subgroup");
    auto cosets = double_cosets(g, k);
    std::vector<std::vector<double>> indicators;
    indicators.reserve(cosets.size());
    for (const auto& c : cosets) {
        std::vector<double> f(g.order, 0.0);
        for (int x : c) f[x] = 1.0;
        indicators.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < indicators.size(); ++i)
        for (std::size_t j = i + 1; j < indicators.size(); ++j) {
            auto ab = convolve(g, indicators[i], indicators[j]);
            auto ba = convolve(g, indicators[j], indicators[i]);
            for (int x = 0; x < g.order; ++x)
                if (std::abs(ab[x] - ba[x]) > tol::gelfand_convolution) return false;
        }
    return true;
}

OrbitPOVM make_orbit_povm(const FiniteGroup& g, const Irrep& rep, std::vector<cdouble> v) {
    OrbitPOVM povm;
    povm.stabilizer = phase_stabilizer(g, rep, v);
    povm.uValues = u_function(g, rep, v);
    povm.group = g;
    povm.irrep = rep;
    povm.vector = std::move(v);

    if (g.order % static_cast<int>(povm.stabilizer.size()) != 0)
        throw std::logic_error("|K| does not divide |G|");

    // left cosets xK, represented by their smallest element
    std::vector<char> seen(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        povm.cosetReps.push_back(x);
        for (int s : povm.stabilizer) seen[g.mul(x, s)] = 1;
    }
    if (povm.cosetReps.size() * povm.stabilizer.size() != static_cast<std::size_t>(g.order))
        throw std::logic_error("coset decomposition failed");

    // kernel profile sanity: u(e) = n, range, symmetry, bi-K-invariance
    const auto& u = povm.uValues;
    if (std::abs(u[g.identity] - rep.dim) > tol::bi_invariance)
        throw std::logic_error("u(e) != dim");
    for (int x = 0; x < g.order; ++x) {
        if (u[x] < -tol::bi_invariance || u[x] > rep.dim + tol::bi_invariance)
            throw std::logic_error("u out of range");
        if (std::abs(u[x] - u[g.inv(x)]) > tol::bi_invariance)
            throw std::logic_error("u is not symmetric under inversion");
        for (int a : povm.stabilizer)
            for (int b : povm.stabilizer)
                if (std::abs(u[g.mul(g.mul(a, x), b)] - u[x]) > tol::bi_invariance)
                    throw std::logic_error("u is not bi-K-invariant");
    }
    return povm;
}

DenseMatrix berezin_matrix(const OrbitPOVM& povm) {
    const auto& g = povm.group;
    const int nOmega = static_cast<int>(povm.cosetReps.size());
    const double mass = static_cast<double>(povm.stabilizer.size()) / g.order;

    DenseMatrix m(nOmega);
    for (int s = 0; s < nOmega; ++s)
        for (int t = 0; t < nOmega; ++t) {
            // value must not depend on which lifts of the cosets we take
            double ref = povm.uValues[g.mul(g.inv(povm.cosetReps[t]), povm.cosetReps[s])];
            for (int a : povm.stabilizer)
                for (int b : povm.stabilizer) {
                    int lifted = g.mul(g.inv(g.mul(povm.cosetReps[t], b)),
                                       g.mul(povm.cosetReps[s], a));
                    if (std::abs(povm.uValues[lifted] - ref) > tol::bi_invariance_fatal)
                        throw std::logic_error("kernel value depends on the coset lift");
                }
            m(s, t) = ref * mass;
        }

    for (int s = 0; s < nOmega; ++s) {
        double row = 0.0;
        for (int t = 0; t < nOmega; ++t) row += m(s, t).real();
        if (std::abs(row - 1.0) > tol::markov_row_sum)
            throw std::logic_error("transition matrix row does not sum to 1");
    }
    return m;
}

DenseMatrix fourier_coefficient(const std::vector<double>& u, const FiniteGroup& g,
                                const Irrep& rep) {
    DenseMatrix acc(rep.dim);
    for (int x = 0; x < g.order; ++x) {
        const DenseMatrix& m = rep.matrices[g.inv(x)];
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j) acc(i, j) += u[x] * m(i, j);
    }
    acc *= cdouble(1.0 / g.order);
    return acc;
}

namespace {

template <typename T>
std::vector<T> pad_and_sort(std::vector<T> values, int target, double dropBelow) {
    std::vector<T> kept;
    for (const auto& v : values)
        if (std::abs(v) > dropBelow) kept.push_back(v);
    if (static_cast<int>(kept.size()) > target)
        throw std::logic_error("more predicted nonzero eigenvalues than dim Omega");
    kept.resize(target, T{});
    return kept;
}

}

std::vector<double> predicted_spectrum_gelfand(const OrbitPOVM& povm,
                                               const std::vector<Irrep>& irreps) {
    if (!gelfand_check(povm.group, povm.stabilizer))
        throw std::invalid_argument("predicted_spectrum_gelfand requires a Gelfand pair");
    const auto& g = povm.group;
    std::vector<double> values;
    for (const auto& rep : irreps) {
        cdouble ip = 0.0;
        for (int x = 0; x < g.order; ++x) ip += povm.uValues[x] * std::conj(rep.character(x));
        ip /= static_cast<double>(g.order);
        if (std::abs(ip.imag()) > tol::spectrum_match)
            throw std::logic_error("character pairing has a nonreal value");
        for (int c = 0; c < rep.dim; ++c) values.push_back(ip.real());
    }
    auto out = pad_and_sort(values, static_cast<int>(povm.cosetReps.size()),
                            tol::fourier_zero_drop);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

std::vector<cdouble> predicted_spectrum_general(const OrbitPOVM& povm,
                                                const std::vector<Irrep>& irreps) {
    std::vector<cdouble> values;
    for (const auto& rep : irreps) {
        auto eigs = general_eigenvalues(fourier_coefficient(povm.uValues, povm.group, rep));
        for (int c = 0; c < rep.dim; ++c) values.insert(values.end(), eigs.begin(), eigs.end());
    }
    auto out = pad_and_sort(values, static_cast<int>(povm.cosetReps.size()),
                            tol::fourier_zero_drop);
    std::sort(out.begin(), out.end(), [](cdouble a, cdouble b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return out;
}

bool rank_one_check(const std::vector<double>& u, const FiniteGroup& g, const Irrep& rep) {
    DenseMatrix uhat = fourier_coefficient(u, g, rep);
    auto sv = singular_values(uhat);
    if (sv.empty() || sv[0] <= tol::fourier_zero_drop) return true;  // u_hat == 0
    for (std::size_t i = 1; i < sv.size(); ++i)
        if (sv[i] > tol::rank_one * sv[0]) return false;

    auto eigs = general_eigenvalues(uhat);
    cdouble top = 0.0;
    for (const auto& e : eigs)
        if (std::abs(e) > std::abs(top)) top = e;
    return std::abs(top - uhat.trace()) <= tol::rank_one;
}

std::vector<double> fourier_inversion(const std::vector<DenseMatrix>& coefficients,
                                      const FiniteGroup& g, const std::vector<Irrep>& irreps) {
    if (coefficients.size() != irreps.size())
        throw std::invalid_argument("one coefficient block per irrep required");
    std::vector<double> out(g.order, 0.0);
    for (int x = 0; x < g.order; ++x) {
        cdouble s = 0.0;
        for (std::size_t p = 0; p < irreps.size(); ++p)
            s += static_cast<double>(irreps[p].dim) *
                 (coefficients[p] * irreps[p].matrices[x]).trace();
        out[x] = s.real();
    }
    return out;
}

}
