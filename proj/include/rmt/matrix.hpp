#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace rmt {

using cdouble = std::complex<double>;

/// Dense row-major matrix. Kept deliberately small: storage, element access,
/// and the few whole-matrix operations the lab needs.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{}) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    T trace() const {
        T s{};
        for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const {
        double m = 0;
        for (const T& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using CMatrix = Matrix<cdouble>;
using RMatrix = Matrix<double>;

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    assert(a.cols() == b.rows());
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            cdouble aik = a(i, k);
            if (aik == cdouble{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// tr(A * B) without forming the product.
inline cdouble trace_of_product(const CMatrix& a, const CMatrix& b) {
    assert(a.cols() == b.rows() && a.rows() == b.cols());
    cdouble s{};
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
    return s;
}

/// max_ij |A_ij - conj(A_ji)|; zero exactly for our Hermitian samplers.
inline double hermiticity_defect(const CMatrix& a) {
    assert(a.rows() == a.cols());
    double m = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline bool is_real(const CMatrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j).imag() != 0.0) return false;
    return true;
}

} // namespace rmt
