#ifndef DIVRING_GATEAUX_HPP
#define DIVRING_GATEAUX_HPP

#include <cmath>
#include <functional>
#include <optional>

#include "divring/linear_maps.hpp"
#include "divring/quaternion.hpp"

namespace divring {

/// Opaque float-backend map probed by finite differences. Must be
/// deterministic and total near the probed points.
using BlackBoxMap = std::function<AlgebraElement<double>(const AlgebraElement<double>&)>;

enum class DiffScheme { central, forward };

struct DiffConfig {
    double step = 1e-5;
    DiffScheme scheme = DiffScheme::central;
    double tol = 1e-6;
};

namespace detail {

inline AlgebraElement<double> probe(const BlackBoxMap& f, const AlgebraElement<double>& x) {
    AlgebraElement<double> y;
    try {
        y = f(x);
    } catch (const std::exception& e) {
        throw EvaluationFailure(std::string("map evaluation threw: ") + e.what());
    }
    if (y.dim() != x.dim())
        throw EvaluationFailure("map changed the coordinate dimension");
    for (int c = 0; c < y.dim(); ++c)
        if (!std::isfinite(y[c]))
            throw EvaluationFailure("map produced a non-finite coordinate");
    return y;
}

} // namespace detail

/// Finite-difference Jacobian in the row convention: entry (j,i) is the
/// directional difference of coordinate i along basis direction j,
/// central scheme (f(x0+h e_j) - f(x0-h e_j)) / 2h.
template <ScalarBackend S>
LinearMapMatrix<double> numerical_jacobian(const FiniteAlgebra<S>& alg, const BlackBoxMap& f,
                                           const AlgebraElement<double>& x0,
                                           const DiffConfig& cfg = {}) {
    const int n = alg.dim();
    if (x0.dim() != n)
        throw DimensionMismatch("probe point does not conform to algebra dimension");
    if (!(cfg.step > 0))
        throw EvaluationFailure("difference step must be positive");
    FieldMatrix<double> jac(n, n);
    const AlgebraElement<double> base =
        cfg.scheme == DiffScheme::forward ? detail::probe(f, x0) : AlgebraElement<double>(n);
    for (int j = 0; j < n; ++j) {
        AlgebraElement<double> plus = x0;
        plus[j] = plus[j] + cfg.step;
        const AlgebraElement<double> fp = detail::probe(f, plus);
        if (cfg.scheme == DiffScheme::central) {
            AlgebraElement<double> minus = x0;
            minus[j] = minus[j] - cfg.step;
            const AlgebraElement<double> fm = detail::probe(f, minus);
            for (int i = 0; i < n; ++i)
                jac(j, i) = (fp[i] - fm[i]) / (2.0 * cfg.step);
        } else {
            for (int i = 0; i < n; ++i)
                jac(j, i) = (fp[i] - base[i]) / cfg.step;
        }
    }
    return LinearMapMatrix<double>(std::move(jac));
}

/// Exact reconstruction of the standard components behind a float
/// Jacobian: entries are promoted to rationals by their exact binary
/// expansion and the conversion system is solved exactly. Present the
/// result through limit_denominator when readable fractions are wanted;
/// the returned values are the raw exact solution.
inline std::optional<ConversionSolution<Rat>> jacobian_to_standard(
    const FiniteAlgebra<Rat>& alg, const LinearMapMatrix<double>& jac) {
    return coords_to_standard(alg, LinearMapMatrix<Rat>(exact_matrix(jac.entries)));
}

inline std::optional<ConversionSolution<Rat>> jacobian_to_standard(
    const FiniteAlgebra<double>& alg, const LinearMapMatrix<double>& jac) {
    return jacobian_to_standard(exact_algebra(alg), jac);
}

/// Componentwise best rational approximations with the given denominator
/// bound, for display of solutions recovered from float data.
inline StandardComponents<Rat> rounded_components(const StandardComponents<Rat>& f,
                                                  unsigned long max_den = 1ul << 20) {
    FieldMatrix<Rat> out(f.dim(), f.dim());
    for (int k = 0; k < f.dim(); ++k)
        for (int r = 0; r < f.dim(); ++r)
            out(k, r) = limit_denominator(f.comps(k, r), max_den);
    return StandardComponents<Rat>(std::move(out));
}

/// Differential of |x|^2 in the direction h: h conj(x) + x conj(h).
/// The value is real; it is returned as the 0-coordinate after checking
/// that the imaginary part vanishes.
template <ScalarBackend S>
S norm_sq_differential(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x,
                       const AlgebraElement<S>& h) {
    require_hamilton(alg);
    const AlgebraElement<S> d = multiply(alg, h, conjugate(alg, x)) +
                                multiply(alg, x, conjugate(alg, h));
    for (int m = 1; m < 4; ++m)
        if (!scalar_traits<S>::is_zero(d[m]))
            throw NonRealProduct("norm differential has a nonzero imaginary coordinate");
    return d[0];
}

} // namespace divring

#endif
