#include "berezin/irreps.hpp"

#include "berezin/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

constexpr double kPi = 3.14159265358979323846;

cdouble root_of_unity(int k, int n) {
    double t = 2.0 * kPi * k / n;
    return {std::cos(t), std::sin(t)};
}

void validate_irrep(const FiniteGroup& g, const Irrep& rep) {
    const int n = g.order;
    if (static_cast<int>(rep.matrices.size()) != n)
        throw std::logic_error("irrep matrix list has wrong length");

    for (int a = 0; a < n; ++a) {
        const DenseMatrix& m = rep.matrices[a];
        if (m.dim() != rep.dim) throw std::logic_error("irrep matrix dimension mismatch");
        DenseMatrix prod = m * m.adjoint();
        DenseMatrix id = DenseMatrix::identity(rep.dim);
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j)
                if (std::abs(prod(i, j) - id(i, j)) > tol::irrep_unitarity)
                    throw std::logic_error("irrep matrix is not unitary");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            DenseMatrix prod = rep.matrices[a] * rep.matrices[b];
            const DenseMatrix& target = rep.matrices[g.mul(a, b)];
            for (int i = 0; i < rep.dim; ++i)
                for (int j = 0; j < rep.dim; ++j)
                    if (std::abs(prod(i, j) - target(i, j)) > tol::irrep_homomorphism)
                        throw std::logic_error("irrep is not a homomorphism");
        }

    // Schur test: <chi, chi> = 1
    double schur = 0.0;
    for (int a = 0; a < n; ++a) schur += std::norm(rep.character(a));
    schur /= n;
    if (std::abs(schur - 1.0) > tol::irrep_schur)
        throw std::logic_error("representation is not irreducible");
}

Irrep one_dim(const FiniteGroup& g, const std::vector<cdouble>& values) {
    Irrep rep;
    rep.dim = 1;
    rep.matrices.reserve(g.order);
    for (int a = 0; a < g.order; ++a) {
        DenseMatrix m(1);
        m(0, 0) = values[a];
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

std::vector<Irrep> cyclic_irreps(const FiniteGroup& g, int n) {
    std::vector<Irrep> out;
    for (int k = 0; k < n; ++k) {
        std::vector<cdouble> chi(n);
        for (int l = 0; l < n; ++l) chi[l] = root_of_unity(k * l, n);
        out.push_back(one_dim(g, chi));
    }
    return out;
}

std::vector<Irrep> dihedral_irreps(const FiniteGroup& g, int n) {
    std::vector<Irrep> out;
    auto build_1d = [&](auto rot, auto refl) {
        std::vector<cdouble> chi(2 * n);
        for (int a = 0; a < n; ++a) {
            chi[a] = rot(a);
            chi[n + a] = refl(a);
        }
        out.push_back(one_dim(g, chi));
    };
    build_1d([](int) { return 1.0; }, [](int) { return 1.0; });
    build_1d([](int) { return 1.0; }, [](int) { return -1.0; });
    if (n % 2 == 0) {
        build_1d([](int a) { return a % 2 ? -1.0 : 1.0; }, [](int a) { return a % 2 ? -1.0 : 1.0; });
        build_1d([](int a) { return a % 2 ? -1.0 : 1.0; }, [](int a) { return a % 2 ? 1.0 : -1.0; });
    }

    // 2-dim blocks: r^a acts as rotation by 2*pi*h*a/n, s r^a as a reflection
    for (int h = 1; 2 * h < n; ++h) {
        Irrep rep;
        rep.dim = 2;
        rep.matrices.reserve(2 * n);
        for (int a = 0; a < n; ++a) {
            double t = 2.0 * kPi * h * a / n;
            DenseMatrix m(2);
            m(0, 0) = std::cos(t);
            m(0, 1) = -std::sin(t);
            m(1, 0) = std::sin(t);
            m(1, 1) = std::cos(t);
            rep.matrices.push_back(std::move(m));
        }
        for (int a = 0; a < n; ++a) {
            // diag(1,-1) * rotation
            double t = 2.0 * kPi * h * a / n;
            DenseMatrix m(2);
            m(0, 0) = std::cos(t);
            m(0, 1) = -std::sin(t);
            m(1, 0) = -std::sin(t);
            m(1, 1) = -std::cos(t);
            rep.matrices.push_back(std::move(m));
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Irrep> symmetric3_irreps(const FiniteGroup& g) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto parity = [](const int* p) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2 ? -1.0 : 1.0;
    };

    std::vector<cdouble> triv(6, 1.0), sgn(6);
    for (int a = 0; a < 6; ++a) sgn[a] = parity(perms[a]);

    std::vector<Irrep> out;
    out.push_back(one_dim(g, triv));
    out.push_back(one_dim(g, sgn));

    // permutation action restricted to the plane orthogonal to (1,1,1),
    // in the orthonormal basis u1 = (1,-1,0)/sqrt2, u2 = (1,1,-2)/sqrt6
    const double basis[2][3] = {{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
                                {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
    Irrep std2;
    std2.dim = 2;
    for (int a = 0; a < 6; ++a) {
        DenseMatrix m(2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                // (P_sigma u_c)_i = u_c[sigma^{-1}(i)]; entry = <u_r, P u_c>
                double dot = 0.0;
                for (int i = 0; i < 3; ++i) dot += basis[r][perms[a][i]] * basis[c][i];
                m(r, c) = dot;
            }
        std2.matrices.push_back(std::move(m));
    }
    out.push_back(std::move(std2));
    return out;
}

std::vector<Irrep> quaternion8_irreps(const FiniteGroup& g) {
    // element index = 2u + (negative ? 1 : 0) with units 1, i, j, k
    auto sign_of = [](int a) { return a % 2 ? -1.0 : 1.0; };
    auto unit_of = [](int a) { return a / 2; };

    std::vector<Irrep> out;
    for (int which = 0; which < 4; ++which) {
        std::vector<cdouble> chi(8);
        for (int a = 0; a < 8; ++a) {
            int u = unit_of(a);
            double v = 1.0;
            if (which > 0 && u != 0 && u != which) v = -1.0;
            chi[a] = v;
        }
        out.push_back(one_dim(g, chi));
    }

    Irrep two;
    two.dim = 2;
    const cdouble I(0.0, 1.0);
    std::vector<DenseMatrix> units(4, DenseMatrix(2));
    units[0](0, 0) = 1.0;
    units[0](1, 1) = 1.0;
    units[1](0, 0) = I;
    units[1](1, 1) = -I;
    units[2](0, 1) = 1.0;
    units[2](1, 0) = -1.0;
    units[3](0, 1) = I;
    units[3](1, 0) = I;
    for (int a = 0; a < 8; ++a) {
        DenseMatrix m = units[unit_of(a)];
        m *= sign_of(a);
        two.matrices.push_back(std::move(m));
    }
    out.push_back(std::move(two));
    return out;
}

std::vector<Irrep> frobenius21_irreps(const FiniteGroup& g) {
    std::vector<Irrep> out;

    // three characters of the C3 quotient
    for (int k = 0; k < 3; ++k) {
        std::vector<cdouble> chi(21);
        for (int a = 0; a < 21; ++a) chi[a] = root_of_unity(k * (a / 7), 3);
        out.push_back(one_dim(g, chi));
    }

    // two 3-dim monomial irreps, one per orbit {1,2,4}, {3,6,5} of x -> 2x mod 7
    static const int pow2[3] = {1, 2, 4};
    for (int s : {1, 3}) {
        Irrep rep;
        rep.dim = 3;
        for (int a = 0; a < 21; ++a) {
            int sa = a % 7, ta = a / 7;
            // rho(a^sa b^ta) = D^sa P^ta with D = diag(w^s, w^2s, w^4s)
            DenseMatrix d(3);
            for (int i = 0; i < 3; ++i) d(i, i) = root_of_unity(s * pow2[i] * sa, 7);
            DenseMatrix p(3);
            // P e0 = e2, P e1 = e0, P e2 = e1
            p(2, 0) = 1.0;
            p(0, 1) = 1.0;
            p(1, 2) = 1.0;
            DenseMatrix pt = DenseMatrix::identity(3);
            for (int t = 0; t < ta; ++t) pt = pt * p;
            rep.matrices.push_back(d * pt);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}

std::vector<Irrep> irreps_of(const FiniteGroup& g) {
    std::vector<Irrep> out;
    if (g.name.rfind("cyclic(", 0) == 0)
        out = cyclic_irreps(g, g.order);
    else if (g.name.rfind("dihedral(", 0) == 0)
        out = dihedral_irreps(g, g.order / 2);
    else if (g.name == "symmetric3")
        out = symmetric3_irreps(g);
    else if (g.name == "quaternion8")
        out = quaternion8_irreps(g);
    else if (g.name == "frobenius21")
        out = frobenius21_irreps(g);
    else
        throw std::invalid_argument("no irrep catalog for group '" + g.name + "'");

    int dimsq = 0;
    for (const auto& rep : out) {
        validate_irrep(g, rep);
        dimsq += rep.dim * rep.dim;
    }
    if (dimsq != g.order)
        throw std::logic_error("irrep catalog incomplete: sum dim^2 != |G|");
    return out;
}

}
