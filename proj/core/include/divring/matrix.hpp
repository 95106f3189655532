#ifndef DIVRING_MATRIX_HPP
#define DIVRING_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "divring/scalar.hpp"

namespace divring {

/// Dense matrix over the base field. Row-major; entry (i,j) is row i,
/// column j. This is the coordinate workhorse shared by every module;
/// matrices over the algebra itself live in matrix_ring.hpp.
template <ScalarBackend S>
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {}

    static FieldMatrix identity(int n) {
        FieldMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = scalar_traits<S>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int a, int b) {
        if (a == b)
            return;
        for (int j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    FieldMatrix transposed() const {
        FieldMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
        a.require_same_shape(b);
        FieldMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i)
            c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }

    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
        a.require_same_shape(b);
        FieldMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i)
            c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product shape mismatch");
        FieldMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (scalar_traits<S>::is_zero(aik))
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    friend FieldMatrix operator*(const S& s, const FieldMatrix& m) {
        FieldMatrix c(m.rows_, m.cols_);
        for (size_t i = 0; i < m.data_.size(); ++i)
            c.data_[i] = s * m.data_[i];
        return c;
    }

    /// Elementwise; tolerance-based on the float backend.
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!scalar_traits<S>::eq(a.data_[i], b.data_[i]))
                return false;
        return true;
    }

    bool is_zero() const {
        for (const S& v : data_)
            if (!scalar_traits<S>::is_zero(v))
                return false;
        return true;
    }

private:
    void require_same_shape(const FieldMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw ShapeMismatch("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> data_;
};

namespace detail {

/// Brings the first lead_cols columns of m into reduced row echelon form,
/// treating any further columns as augmented right-hand sides. The pivot
/// of each column is the first row from the top carrying a nonzero entry;
/// rows are never reordered by magnitude, so the result is deterministic.
/// The exact backend uses the fraction-free (Bareiss) update. Returns the
/// pivot columns in increasing order.
template <ScalarBackend S>
std::vector<int> reduced_row_echelon(FieldMatrix<S>& m, int lead_cols) {
    using T = scalar_traits<S>;
    std::vector<int> pivots;
    int row = 0;
    S prev = T::one();
    for (int col = 0; col < lead_cols && row < m.rows(); ++col) {
        int found = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!T::is_zero(m(i, col))) {
                found = i;
                break;
            }
        }
        if (found < 0)
            continue;
        m.swap_rows(row, found);
        const S pivot = m(row, col);
        for (int i = row + 1; i < m.rows(); ++i) {
            if constexpr (T::is_exact) {
                for (int j = col + 1; j < m.cols(); ++j)
                    m(i, j) = (m(i, j) * pivot - m(i, col) * m(row, j)) / prev;
            } else {
                const S factor = m(i, col) / pivot;
                for (int j = col + 1; j < m.cols(); ++j)
                    m(i, j) = m(i, j) - factor * m(row, j);
            }
            m(i, col) = T::zero();
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        const int col = pivots[r];
        const S inv = T::one() / m(r, col);
        for (int j = col; j < m.cols(); ++j)
            m(r, j) = m(r, j) * inv;
        for (int i = 0; i < r; ++i) {
            const S factor = m(i, col);
            if (T::is_zero(factor))
                continue;
            for (int j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(r, j);
        }
    }
    return pivots;
}

} // namespace detail

template <ScalarBackend S>
int rank(FieldMatrix<S> m) {
    return static_cast<int>(detail::reduced_row_echelon(m, m.cols()).size());
}

/// Full description of the solution set of A x = b.
template <ScalarBackend S>
struct AffineSolution {
    bool solvable = false;
    /// Canonical particular solution: free variables are zero, so the
    /// support sits on the pivot columns. Empty when not solvable.
    std::vector<S> particular;
    /// Kernel basis read off the reduced echelon form, one vector per
    /// free column, in column order.
    std::vector<std::vector<S>> kernel;
};

/// Exact affine solve; the canonical representative and kernel basis are
/// uniquely determined by the reduced echelon form.
template <ScalarBackend S>
    requires scalar_traits<S>::is_exact
AffineSolution<S> solve_affine(const FieldMatrix<S>& a, const std::vector<S>& rhs) {
    using T = scalar_traits<S>;
    if (static_cast<int>(rhs.size()) != a.rows())
        throw ShapeMismatch("right-hand side length mismatch");
    const int n = a.cols();
    FieldMatrix<S> w(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            w(i, j) = a(i, j);
        w(i, n) = rhs[i];
    }
    const std::vector<int> pivots = detail::reduced_row_echelon(w, n);

    AffineSolution<S> out;
    for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
        if (!T::is_zero(w(i, n)))
            return out; // inconsistent row 0 = nonzero
    out.solvable = true;
    out.particular.assign(n, T::zero());
    for (size_t r = 0; r < pivots.size(); ++r)
        out.particular[pivots[r]] = w(static_cast<int>(r), n);

    std::vector<bool> is_pivot(n, false);
    for (int c : pivots)
        is_pivot[c] = true;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<S> v(n, T::zero());
        v[f] = T::one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w(static_cast<int>(r), f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <ScalarBackend S>
std::optional<FieldMatrix<S>> try_inverse(const FieldMatrix<S>& a) {
    if (a.rows() != a.cols())
        throw ShapeMismatch("only square matrices are invertible");
    const int n = a.rows();
    FieldMatrix<S> w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w(i, j) = a(i, j);
        w(i, n + i) = scalar_traits<S>::one();
    }
    if (static_cast<int>(detail::reduced_row_echelon(w, n).size()) < n)
        return std::nullopt;
    FieldMatrix<S> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = w(i, n + j);
    return inv;
}

inline FieldMatrix<Rat> exact_matrix(const FieldMatrix<double>& m) {
    FieldMatrix<Rat> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = scalar_traits<Rat>::from_double(m(i, j));
    return out;
}

inline FieldMatrix<double> float_matrix(const FieldMatrix<Rat>& m) {
    FieldMatrix<double> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_d();
    return out;
}

} // namespace divring

#endif
