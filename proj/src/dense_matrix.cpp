#include "berezin/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix product: dimension mismatch");
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            cdouble aik = (*this)(i, k);
            if (aik == cdouble{}) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(cdouble scale) {
    for (auto& v : a_) v *= scale;
    return *this;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cdouble DenseMatrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double DenseMatrix::hermitian_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

double DenseMatrix::max_imag() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v.imag()));
    return m;
}

}
