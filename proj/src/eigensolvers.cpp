#include "berezin/eigensolvers.hpp"

#include "berezin/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

// Jacobi on a real symmetric matrix stored densely; returns the diagonal.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double frob = 0.0;
    for (double v : a) frob += v * v;
    frob = std::sqrt(frob);
    if (frob == 0.0) return std::vector<double>(n, 0.0);

    const double stop = 1e-14 * frob;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        if (std::sqrt(off) <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    return eig;
}

// Householder reduction to upper Hessenberg form, in place.
void to_hessenberg(std::vector<cdouble>& h, int n) {
    auto at = [&](int i, int j) -> cdouble& { return h[static_cast<std::size_t>(i) * n + j]; };
    std::vector<cdouble> v(n);

    for (int k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(at(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm <= 1e-300) continue;

        cdouble x0 = at(k + 1, k);
        cdouble phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cdouble(1.0);
        cdouble alpha = -phase * xnorm;

        // v = x - alpha e1, normalized
        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = at(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm += std::norm(v[i]);
        }
        vnorm = std::sqrt(vnorm);
        if (vnorm <= 1e-300) continue;
        for (int i = k + 1; i < n; ++i) v[i] /= vnorm;

        // H := (I - 2 v v^H) H
        for (int j = k; j < n; ++j) {
            cdouble dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * at(i, j);
            dot *= 2.0;
            for (int i = k + 1; i < n; ++i) at(i, j) -= dot * v[i];
        }
        // H := H (I - 2 v v^H)
        for (int i = 0; i < n; ++i) {
            cdouble dot = 0.0;
            for (int j = k + 1; j < n; ++j) dot += at(i, j) * v[j];
            dot *= 2.0;
            for (int j = k + 1; j < n; ++j) at(i, j) -= dot * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) at(i, k) = 0.0;
    }
}

// Roots of the 2x2 block [[a, b], [c, d]].
void eig2x2(cdouble a, cdouble b, cdouble c, cdouble d, cdouble& l1, cdouble& l2) {
    cdouble tr = a + d;
    cdouble disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
    l1 = 0.5 * (tr + disc);
    l2 = 0.5 * (tr - disc);
}

// Complex Givens rotation [[c, s], [-conj(s), c]] zeroing b against a.
void make_givens(cdouble a, cdouble b, double& c, cdouble& s) {
    double absa = std::abs(a);
    double norm = std::hypot(absa, std::abs(b));
    if (norm <= 1e-300) {
        c = 1.0;
        s = 0.0;
        return;
    }
    if (absa == 0.0) {
        c = 0.0;
        s = b == cdouble{} ? cdouble(1.0) : std::conj(b) / std::abs(b);
        return;
    }
    cdouble phase = a / absa;
    c = absa / norm;
    s = phase * std::conj(b) / norm;
}

std::vector<cdouble> hessenberg_qr_eigenvalues(std::vector<cdouble> h, int n) {
    auto at = [&](int i, int j) -> cdouble& { return h[static_cast<std::size_t>(i) * n + j]; };

    double scale = 0.0;
    for (const auto& v : h) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::vector<cdouble>(n, cdouble{});
    const double eps = 1e-16;

    std::vector<cdouble> eig;
    eig.reserve(n);
    std::vector<double> gc(n);
    std::vector<cdouble> gs(n);

    int hi = n - 1;
    int iter = 0;
    while (hi >= 0) {
        if (hi == 0) {
            eig.push_back(at(0, 0));
            --hi;
            continue;
        }

        // deflate negligible subdiagonals
        int lo = hi;
        while (lo > 0) {
            double sd = std::abs(at(lo, lo - 1));
            double local = std::abs(at(lo - 1, lo - 1)) + std::abs(at(lo, lo));
            if (sd <= eps * std::max(local, scale)) {
                at(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (std::abs(at(hi, hi - 1)) == 0.0) {
            eig.push_back(at(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (lo == hi - 1) {
            // active block is 2x2: solve directly
            cdouble l1, l2;
            eig2x2(at(lo, lo), at(lo, hi), at(hi, lo), at(hi, hi), l1, l2);
            eig.push_back(l1);
            eig.push_back(l2);
            hi = lo - 1;
            iter = 0;
            continue;
        }

        if (++iter > 40 * n)
            throw std::runtime_error("general_eigenvalues: QR iteration failed to converge");

        // Wilkinson shift from the trailing 2x2, exceptional shift when stuck
        cdouble shift;
        if (iter % 13 == 0) {
            shift = at(hi, hi) + cdouble(1.5 * (std::abs(at(hi, hi - 1)) + (hi >= 2 ? std::abs(at(hi - 1, hi - 2)) : 0.0)));
        } else {
            cdouble l1, l2;
            eig2x2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi), l1, l2);
            shift = (std::abs(l1 - at(hi, hi)) < std::abs(l2 - at(hi, hi))) ? l1 : l2;
        }

        // explicit shifted QR step on the active block via Givens rotations
        for (int i = lo; i <= hi; ++i) at(i, i) -= shift;
        for (int i = lo; i < hi; ++i) {
            make_givens(at(i, i), at(i + 1, i), gc[i], gs[i]);
            double c = gc[i];
            cdouble s = gs[i];
            for (int j = i; j <= hi; ++j) {
                cdouble t1 = at(i, j), t2 = at(i + 1, j);
                at(i, j) = c * t1 + s * t2;
                at(i + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (int i = lo; i < hi; ++i) {
            double c = gc[i];
            cdouble s = gs[i];
            int rend = std::min(i + 1, hi);
            for (int r = lo; r <= rend; ++r) {
                cdouble t1 = at(r, i), t2 = at(r, i + 1);
                at(r, i) = c * t1 + std::conj(s) * t2;
                at(r, i + 1) = -s * t1 + c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) at(i, i) += shift;
    }
    return eig;
}

}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
    const int n = m.dim();
    const double tolerance = tol::hermitian_defect * std::max(1.0, m.max_abs());
    if (m.max_imag() > tolerance)
        throw std::invalid_argument("symmetric_eigenvalues: matrix has complex entries");
    if (m.hermitian_defect() > tolerance)
        throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.5 * (m(i, j).real() + m(j, i).real());
            a[static_cast<std::size_t>(i) * n + j] = v;
        }

    auto eig = jacobi_eigenvalues(std::move(a), n);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<cdouble> general_eigenvalues(const DenseMatrix& m) {
    const int n = m.dim();
    if (n > tol::max_general_dim)
        throw std::invalid_argument("general_eigenvalues: dimension exceeds cap");
    if (n == 0) return {};
    if (n == 1) return {m(0, 0)};

    std::vector<cdouble> h(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i) * n + j] = m(i, j);
    to_hessenberg(h, n);
    return hessenberg_qr_eigenvalues(std::move(h), n);
}

std::vector<double> singular_values(const DenseMatrix& m) {
    const int n = m.dim();
    DenseMatrix gram = m.adjoint() * m;

    // embed the hermitian Gram matrix as a real symmetric 2n x 2n matrix;
    // every eigenvalue shows up twice
    DenseMatrix embed(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = gram(i, j).real(), im = gram(i, j).imag();
            embed(i, j) = re;
            embed(n + i, n + j) = re;
            embed(i, n + j) = -im;
            embed(n + i, j) = im;
        }

    auto eig = symmetric_eigenvalues(embed);  // descending, pairs
    std::vector<double> sv(n);
    for (int i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, eig[2 * i]));
    return sv;
}

}
