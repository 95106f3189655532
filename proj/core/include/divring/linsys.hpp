#ifndef DIVRING_LINSYS_HPP
#define DIVRING_LINSYS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "divring/algebra.hpp"
#include "divring/matrix.hpp"
#include "divring/matrix_ring.hpp"

namespace divring {

/// sum_s a_s x b_s = rhs, one unknown x.
template <ScalarBackend S>
struct SandwichEquation {
    std::vector<std::pair<AlgebraElement<S>, AlgebraElement<S>>> terms;
    AlgebraElement<S> rhs;
};

/// sum_i x^i A_i^j = b^j: a row of unknowns against an m x n coefficient
/// matrix, coefficients acting from the right.
template <ScalarBackend S>
struct RcdSystem {
    DMatrix<S> coefficients;
    std::vector<AlgebraElement<S>> rhs; // length = coefficients.cols()
};

/// Affine solution set over the algebra. `particular` holds one value per
/// unknown; each kernel basis vector solves the homogeneous system.
template <ScalarBackend S>
struct SolveResult {
    std::vector<AlgebraElement<S>> particular;
    std::vector<std::vector<AlgebraElement<S>>> kernel_basis;

    int kernel_dim() const { return static_cast<int>(kernel_basis.size()); }
};

namespace detail {

template <ScalarBackend S>
std::vector<AlgebraElement<S>> unstack(const std::vector<S>& flat, int unknowns, int dim) {
    std::vector<AlgebraElement<S>> out;
    out.reserve(static_cast<size_t>(unknowns));
    for (int u = 0; u < unknowns; ++u) {
        AlgebraElement<S> x(dim);
        for (int c = 0; c < dim; ++c)
            x[c] = flat[static_cast<size_t>(u) * dim + c];
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace detail

/// Solves sum_s a_s x b_s = rhs by reducing the sandwich operator to the
/// base field: M = sum_s L(a_s) R(b_s) acting on coordinate columns.
/// Exact; nullopt when rhs is outside the operator image.
template <ScalarBackend S>
    requires scalar_traits<S>::is_exact
std::optional<SolveResult<S>> solve_sandwich(const FiniteAlgebra<S>& alg,
                                             const SandwichEquation<S>& eq) {
    if (eq.terms.empty())
        throw DimensionMismatch("sandwich equation needs at least one term");
    require_element(alg, eq.rhs);
    const int n = alg.dim();
    FieldMatrix<S> op(n, n);
    for (const auto& [a, b] : eq.terms)
        op = op + left_mult_matrix(alg, a) * right_mult_matrix(alg, b);
    const AffineSolution<S> sol = solve_affine(op, eq.rhs.coords);
    if (!sol.solvable)
        return std::nullopt;
    SolveResult<S> out;
    out.particular = detail::unstack(sol.particular, 1, n);
    for (const auto& v : sol.kernel)
        out.kernel_basis.push_back(detail::unstack(v, 1, n));
    return out;
}

/// Solves the rcd system by stacking right-multiplication blocks: the
/// equation for column j contributes block row j with block (j,i) equal
/// to R(A_i^j). Exact affine solution set over the algebra; the kernel
/// rows span a left subspace.
template <ScalarBackend S>
    requires scalar_traits<S>::is_exact
std::optional<SolveResult<S>> solve_rcd(const FiniteAlgebra<S>& alg, const RcdSystem<S>& sys) {
    const int m = sys.coefficients.rows();
    const int ncols = sys.coefficients.cols();
    if (static_cast<int>(sys.rhs.size()) != ncols)
        throw ShapeMismatch("right-hand side length must equal the column count");
    const int d = alg.dim();
    FieldMatrix<S> big(ncols * d, m * d);
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < m; ++i) {
            const FieldMatrix<S> block = right_mult_matrix(alg, sys.coefficients.at(i, j));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    big(j * d + r, i * d + c) = block(r, c);
        }
    std::vector<S> rhs(static_cast<size_t>(ncols) * d);
    for (int j = 0; j < ncols; ++j) {
        require_element(alg, sys.rhs[static_cast<size_t>(j)]);
        for (int r = 0; r < d; ++r)
            rhs[static_cast<size_t>(j) * d + r] = sys.rhs[static_cast<size_t>(j)][r];
    }
    const AffineSolution<S> sol = solve_affine(big, rhs);
    if (!sol.solvable)
        return std::nullopt;
    SolveResult<S> out;
    out.particular = detail::unstack(sol.particular, m, d);
    for (const auto& v : sol.kernel)
        out.kernel_basis.push_back(detail::unstack(v, m, d));
    return out;
}

} // namespace divring

#endif
