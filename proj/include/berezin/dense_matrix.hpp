#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace berezin {

using cdouble = std::complex<double>;

// Small dense complex matrix, row major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static DenseMatrix identity(int n);

    int dim() const { return n_; }
    cdouble& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cdouble& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix& operator+=(const DenseMatrix& rhs);
    DenseMatrix& operator*=(cdouble scale);
    DenseMatrix adjoint() const;

    cdouble trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // max_ij |A_ij - conj(A_ji)|
    double hermitian_defect() const;
    // max imaginary part magnitude over all entries
    double max_imag() const;

private:
    int n_ = 0;
    std::vector<cdouble> a_;
};

}
