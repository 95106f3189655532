#ifndef DIVRING_MATRIX_RING_HPP
#define DIVRING_MATRIX_RING_HPP

#include <vector>

#include "divring/algebra.hpp"

namespace divring {

/// Matrix with entries in one shared algebra. Row-major storage; all
/// entries conform to the algebra dimension.
template <ScalarBackend S>
class DMatrix {
public:
    DMatrix() = default;
    DMatrix(const FiniteAlgebra<S>& alg, int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * cols, alg.zero()) {
        if (rows <= 0 || cols <= 0)
            throw ShapeMismatch("matrix shape must be positive");
    }

    static DMatrix identity(const FiniteAlgebra<S>& alg, int n) {
        DMatrix m(alg, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = alg.unit();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    AlgebraElement<S>& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const AlgebraElement<S>& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    DMatrix transposed() const {
        DMatrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.entries_.reserve(entries_.size());
        for (int i = 0; i < cols_; ++i)
            for (int j = 0; j < rows_; ++j)
                t.entries_.push_back(at(j, i));
        return t;
    }

    friend DMatrix operator+(const DMatrix& a, const DMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix shapes differ");
        DMatrix c = a;
        for (size_t i = 0; i < c.entries_.size(); ++i)
            c.entries_[i] = c.entries_[i] + b.entries_[i];
        return c;
    }

    friend bool operator==(const DMatrix& a, const DMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (size_t i = 0; i < a.entries_.size(); ++i)
            if (!(a.entries_[i] == b.entries_[i]))
                return false;
        return true;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<AlgebraElement<S>> entries_;
};

template <ScalarBackend S>
DMatrix<S> transpose(const DMatrix<S>& a) {
    return a.transposed();
}

/// Row-by-column product with factors in written order:
/// C_i^j = sum_k A_i^k B_k^j.
template <ScalarBackend S>
DMatrix<S> rc_product(const FiniteAlgebra<S>& alg, const DMatrix<S>& a, const DMatrix<S>& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("rc product needs A.cols == B.rows");
    DMatrix<S> c(alg, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            AlgebraElement<S> sum = alg.zero();
            for (int k = 0; k < a.cols(); ++k)
                sum = sum + multiply(alg, a.at(i, k), b.at(k, j));
            c.at(i, j) = sum;
        }
    return c;
}

/// The transpose-dual product, defined by
/// cr(A,B) = (rc(B^T, A^T))^T, which works out entrywise to
/// C_i^j = sum_k B_k^j A_i^k (factors in reversed order).
template <ScalarBackend S>
DMatrix<S> cr_product(const FiniteAlgebra<S>& alg, const DMatrix<S>& a, const DMatrix<S>& b) {
    if (b.rows() != a.cols())
        throw ShapeMismatch("cr product needs B.rows == A.cols");
    DMatrix<S> c(alg, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            AlgebraElement<S> sum = alg.zero();
            for (int k = 0; k < a.cols(); ++k)
                sum = sum + multiply(alg, b.at(k, j), a.at(i, k));
            c.at(i, j) = sum;
        }
    return c;
}

/// Linear combination sum_i x^i v_i of 1 x c rows with the coefficients
/// multiplying every entry from the left.
template <ScalarBackend S>
DMatrix<S> rcd_combination(const FiniteAlgebra<S>& alg,
                           const std::vector<AlgebraElement<S>>& coeffs,
                           const std::vector<DMatrix<S>>& rows) {
    if (coeffs.size() != rows.size() || rows.empty())
        throw ShapeMismatch("coefficient and row counts differ or are empty");
    const int cols = rows.front().cols();
    for (const auto& r : rows)
        if (r.rows() != 1 || r.cols() != cols)
            throw ShapeMismatch("rows must all be 1 x c");
    DMatrix<S> out(alg, 1, cols);
    for (size_t s = 0; s < rows.size(); ++s)
        for (int j = 0; j < cols; ++j)
            out.at(0, j) = out.at(0, j) + multiply(alg, coeffs[s], rows[s].at(0, j));
    return out;
}

} // namespace divring

#endif
