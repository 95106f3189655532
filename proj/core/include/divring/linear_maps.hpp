#ifndef DIVRING_LINEAR_MAPS_HPP
#define DIVRING_LINEAR_MAPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "divring/algebra.hpp"
#include "divring/matrix.hpp"

namespace divring {

/// Coordinate matrix of a base-field-linear map: entry (i,j) holds f_i^j
/// and the map acts as y^j = sum_i x^i f_i^j. Note the row convention —
/// the matrix acting on coordinate columns is the transpose (see
/// to_operator / from_operator).
template <ScalarBackend S>
struct LinearMapMatrix {
    FieldMatrix<S> entries;

    LinearMapMatrix() = default;
    explicit LinearMapMatrix(FieldMatrix<S> m) : entries(std::move(m)) {
        if (entries.rows() != entries.cols())
            throw DimensionMismatch("map matrix must be square");
    }

    static LinearMapMatrix identity(int n) {
        return LinearMapMatrix(FieldMatrix<S>::identity(n));
    }

    int dim() const { return entries.rows(); }

    friend bool operator==(const LinearMapMatrix& a, const LinearMapMatrix& b) {
        return a.entries == b.entries;
    }
};

/// Standard components f^{kr} of the map x -> sum_{k,r} f^{kr} e_k x e_r,
/// stored at (k,r).
template <ScalarBackend S>
struct StandardComponents {
    FieldMatrix<S> comps;

    StandardComponents() = default;
    explicit StandardComponents(FieldMatrix<S> m) : comps(std::move(m)) {
        if (comps.rows() != comps.cols())
            throw DimensionMismatch("component array must be square");
    }

    static StandardComponents zero(int n) { return StandardComponents(FieldMatrix<S>(n, n)); }

    /// Components of the identity map: f^{uu} = 1 at the unit index.
    static StandardComponents identity(const FiniteAlgebra<S>& alg) {
        FieldMatrix<S> m(alg.dim(), alg.dim());
        m(alg.unit_index(), alg.unit_index()) = scalar_traits<S>::one();
        return StandardComponents(std::move(m));
    }

    int dim() const { return comps.rows(); }
    bool is_zero() const { return comps.is_zero(); }

    friend bool operator==(const StandardComponents& a, const StandardComponents& b) {
        return a.comps == b.comps;
    }
};

/// Solution of the conversion system: one canonical particular component
/// array plus a basis of the zero-map component space.
template <ScalarBackend S>
struct ConversionSolution {
    StandardComponents<S> particular;
    std::vector<StandardComponents<S>> kernel_basis;

    bool unique() const { return kernel_basis.empty(); }
};

/// Row-convention matrix of the operator given by a coordinate-column
/// matrix (such as left_mult_matrix), and back.
template <ScalarBackend S>
LinearMapMatrix<S> from_operator(const FieldMatrix<S>& column_action) {
    return LinearMapMatrix<S>(column_action.transposed());
}

template <ScalarBackend S>
FieldMatrix<S> to_operator(const LinearMapMatrix<S>& m) {
    return m.entries.transposed();
}

template <ScalarBackend S>
AlgebraElement<S> apply_coords(const FiniteAlgebra<S>& alg, const LinearMapMatrix<S>& m,
                               const AlgebraElement<S>& x) {
    require_element(alg, x);
    if (m.dim() != alg.dim())
        throw DimensionMismatch("map matrix does not conform to algebra dimension");
    AlgebraElement<S> y(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        if (scalar_traits<S>::is_zero(x[i]))
            continue;
        for (int j = 0; j < alg.dim(); ++j)
            y[j] = y[j] + x[i] * m.entries(i, j);
    }
    return y;
}

template <ScalarBackend S>
AlgebraElement<S> apply_standard(const FiniteAlgebra<S>& alg, const StandardComponents<S>& f,
                                 const AlgebraElement<S>& x) {
    require_element(alg, x);
    if (f.dim() != alg.dim())
        throw DimensionMismatch("component array does not conform to algebra dimension");
    AlgebraElement<S> y(alg.dim());
    for (int k = 0; k < alg.dim(); ++k)
        for (int r = 0; r < alg.dim(); ++r) {
            const S& c = f.comps(k, r);
            if (scalar_traits<S>::is_zero(c))
                continue;
            const AlgebraElement<S> sandwich = multiply(
                alg, multiply(alg, alg.basis_element(k), x), alg.basis_element(r));
            y = y + c * sandwich;
        }
    return y;
}

/// n^2 x n^2 matrix of the linear system relating the two
/// representations: vec(f_i^j) = M vec(f^{kr}) with
/// M[(i,j),(k,r)] = sum_p C_{ki}^p C_{pr}^j. Rows and columns are indexed
/// lexicographically; the result is memoized on the algebra.
template <ScalarBackend S>
const FieldMatrix<S>& conversion_matrix(const FiniteAlgebra<S>& alg) {
    return alg.conversion_matrix_memo([&alg] {
        const int n = alg.dim();
        std::vector<S> cube(static_cast<size_t>(n) * n * n, scalar_traits<S>::zero());
        auto at = [&](int i, int j, int k) -> S& {
            return cube[(static_cast<size_t>(i) * n + j) * n + k];
        };
        for (const auto& [key, v] : alg.constants())
            at(key[0], key[1], key[2]) = v;
        FieldMatrix<S> m(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int r = 0; r < n; ++r) {
                        S v = scalar_traits<S>::zero();
                        for (int p = 0; p < n; ++p)
                            v = v + at(k, i, p) * at(p, r, j);
                        m(i * n + j, k * n + r) = v;
                    }
        return m;
    });
}

/// f_i^j = sum_{k,r,p} f^{kr} C_{ki}^p C_{pr}^j, evaluated through the
/// conversion matrix so both directions share one system.
template <ScalarBackend S>
LinearMapMatrix<S> standard_to_coords(const FiniteAlgebra<S>& alg,
                                      const StandardComponents<S>& f) {
    const int n = alg.dim();
    if (f.dim() != n)
        throw DimensionMismatch("component array does not conform to algebra dimension");
    const FieldMatrix<S>& conv = conversion_matrix(alg);
    FieldMatrix<S> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S v = scalar_traits<S>::zero();
            for (int k = 0; k < n; ++k)
                for (int r = 0; r < n; ++r)
                    v = v + conv(i * n + j, k * n + r) * f.comps(k, r);
            out(i, j) = v;
        }
    return LinearMapMatrix<S>(std::move(out));
}

/// Solves the conversion system exactly. The particular solution is the
/// canonical minimum-support one (free components zero, component order
/// (k,r) lexicographic); the kernel basis spans the zero-map components.
/// nullopt when the matrix is not representable in standard form, which
/// can only happen when the conversion matrix is singular.
template <ScalarBackend S>
    requires scalar_traits<S>::is_exact
std::optional<ConversionSolution<S>> coords_to_standard(const FiniteAlgebra<S>& alg,
                                                        const LinearMapMatrix<S>& m) {
    const int n = alg.dim();
    if (m.dim() != n)
        throw DimensionMismatch("map matrix does not conform to algebra dimension");
    std::vector<S> rhs(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rhs[static_cast<size_t>(i) * n + j] = m.entries(i, j);
    const AffineSolution<S> sol = solve_affine(conversion_matrix(alg), rhs);
    if (!sol.solvable)
        return std::nullopt;

    auto unvec = [n](const std::vector<S>& v) {
        FieldMatrix<S> f(n, n);
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r)
                f(k, r) = v[static_cast<size_t>(k) * n + r];
        return StandardComponents<S>(std::move(f));
    };
    ConversionSolution<S> out;
    out.particular = unvec(sol.particular);
    for (const auto& v : sol.kernel)
        out.kernel_basis.push_back(unvec(v));
    return out;
}

/// Components of g after f (x -> g(f(x))): the composite coordinate
/// matrix is converted back, keeping the canonical representative. The
/// composite of two standard-form maps is again a sum of sandwich maps,
/// so the conversion cannot fail.
template <ScalarBackend S>
    requires scalar_traits<S>::is_exact
StandardComponents<S> compose(const FiniteAlgebra<S>& alg, const StandardComponents<S>& g,
                              const StandardComponents<S>& f) {
    const LinearMapMatrix<S> mf = standard_to_coords(alg, f);
    const LinearMapMatrix<S> mg = standard_to_coords(alg, g);
    // row convention: x (f then g) = x * (F G)
    LinearMapMatrix<S> composite(mf.entries * mg.entries);
    auto sol = coords_to_standard(alg, composite);
    if (!sol)
        throw Error("composition left the representable image; the table is inconsistent");
    return sol->particular;
}

/// Commutation tests against the one-sided multiplication operators,
/// entrywise on the stored arrays. Over the complex algebra
/// is_right_linear is exactly the Cauchy-Riemann condition
/// f_0^0 = f_1^1, f_0^1 = -f_1^0.
template <ScalarBackend S>
bool is_left_linear(const FiniteAlgebra<S>& alg, const LinearMapMatrix<S>& m) {
    if (m.dim() != alg.dim())
        throw DimensionMismatch("map matrix does not conform to algebra dimension");
    for (int k = 0; k < alg.dim(); ++k) {
        const FieldMatrix<S> r = right_mult_matrix(alg, alg.basis_element(k));
        if (!(m.entries * r == r * m.entries))
            return false;
    }
    return true;
}

template <ScalarBackend S>
bool is_right_linear(const FiniteAlgebra<S>& alg, const LinearMapMatrix<S>& m) {
    if (m.dim() != alg.dim())
        throw DimensionMismatch("map matrix does not conform to algebra dimension");
    for (int k = 0; k < alg.dim(); ++k) {
        const FieldMatrix<S> l = left_mult_matrix(alg, alg.basis_element(k));
        if (!(m.entries * l == l * m.entries))
            return false;
    }
    return true;
}

} // namespace divring

#endif
