#include "berezin/finite_group.hpp"

#include <array>
#include <algorithm>
#include <stdexcept>

namespace berezin {

void FiniteGroup::validate() const {
    const int n = order;
    if (n <= 0 || static_cast<int>(product.size()) != n || static_cast<int>(inverse.size()) != n)
        throw std::logic_error("group table has wrong shape");
    for (const auto& row : product) {
        if (static_cast<int>(row.size()) != n) throw std::logic_error("group table has wrong shape");
        for (int v : row)
            if (v < 0 || v >= n) throw std::logic_error("group table entry out of range");
    }
    for (int g = 0; g < n; ++g)
        if (mul(identity, g) != g || mul(g, identity) != g)
            throw std::logic_error("identity law fails");
    for (int g = 0; g < n; ++g)
        if (mul(g, inv(g)) != identity || mul(inv(g), g) != identity)
            throw std::logic_error("inverse law fails");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("associativity fails");
}

namespace {

FiniteGroup finish(FiniteGroup g) {
    const int n = g.order;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.product[a][b] == g.identity) g.inverse[a] = b;
    g.validate();
    return g;
}

}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    FiniteGroup g;
    g.name = "cyclic(" + std::to_string(n) + ")";
    g.order = n;
    g.identity = 0;
    g.product.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.product[a][b] = (a + b) % n;
    return finish(std::move(g));
}

// Elements 0..n-1 are rotations r^a, n..2n-1 are reflections s r^a.
FiniteGroup make_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
    FiniteGroup g;
    g.name = "dihedral(" + std::to_string(n) + ")";
    g.order = 2 * n;
    g.identity = 0;
    g.product.assign(2 * n, std::vector<int>(2 * n));
    auto mod = [n](int x) { return ((x % n) + n) % n; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            g.product[a][b] = mod(a + b);              // r^a r^b
            g.product[a][n + b] = n + mod(b - a);      // r^a (s r^b) = s r^(b-a)
            g.product[n + a][b] = n + mod(a + b);      // (s r^a) r^b
            g.product[n + a][n + b] = mod(b - a);      // (s r^a)(s r^b) = r^(b-a)
        }
    return finish(std::move(g));
}

FiniteGroup make_symmetric3() {
    // permutations of {0,1,2} in lexicographic order
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("permutation lookup failed");
    };
    FiniteGroup g;
    g.name = "symmetric3";
    g.order = 6;
    g.identity = 0;
    g.product.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            g.product[a][b] = index_of(comp);
        }
    return finish(std::move(g));
}

// Elements encoded as unit u in {1,i,j,k} and sign s: index = 2u + s.
FiniteGroup make_quaternion8() {
    // unit product table and sign of the product
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    FiniteGroup g;
    g.name = "quaternion8";
    g.order = 8;
    g.identity = 0;
    g.product.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : +1;
            int ub = b / 2, sb = b % 2 ? -1 : +1;
            int u = unit[ua][ub];
            int s = sa * sb * sign[ua][ub];
            g.product[a][b] = 2 * u + (s < 0 ? 1 : 0);
        }
    return finish(std::move(g));
}

// Elements (s, t) with s mod 7, t mod 3, index s + 7t;
// (s1,t1)(s2,t2) = (s1 + s2 * 2^t1 mod 7, t1 + t2 mod 3).
FiniteGroup make_frobenius21() {
    static const int pow2[3] = {1, 2, 4};
    FiniteGroup g;
    g.name = "frobenius21";
    g.order = 21;
    g.identity = 0;
    g.product.assign(21, std::vector<int>(21));
    for (int a = 0; a < 21; ++a)
        for (int b = 0; b < 21; ++b) {
            int s1 = a % 7, t1 = a / 7;
            int s2 = b % 7, t2 = b / 7;
            int s = (s1 + s2 * pow2[t1]) % 7;
            int t = (t1 + t2) % 3;
            g.product[a][b] = s + 7 * t;
        }
    return finish(std::move(g));
}

FiniteGroup make_group(const std::string& spec) {
    if (spec == "symmetric3") return make_symmetric3();
    if (spec == "quaternion8") return make_quaternion8();
    if (spec == "frobenius21") return make_frobenius21();
    auto open = spec.find('(');
    auto close = spec.find(')');
    if (open != std::string::npos && close == spec.size() - 1 && close > open + 1) {
        std::string family = spec.substr(0, open);
        int n = 0;
        try {
            n = std::stoi(spec.substr(open + 1, close - open - 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group parameter in '" + spec + "'");
        }
        if (family == "cyclic") return make_cyclic(n);
        if (family == "dihedral") return make_dihedral(n);
    }
    throw std::invalid_argument("unknown group spec '" + spec + "'");
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

bool is_abelian(const FiniteGroup& g) {
    return static_cast<int>(center(g).size()) == g.order;
}

}
