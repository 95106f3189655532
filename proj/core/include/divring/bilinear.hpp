#ifndef DIVRING_BILINEAR_HPP
#define DIVRING_BILINEAR_HPP

#include <map>
#include <tuple>

#include "divring/algebra.hpp"

namespace divring {

/// Which way the two arguments are threaded through a sandwich term.
enum class VarOrder { xy, yx };

/// Standard components of a bilinear map: the xy class collects terms
/// e_p x e_q y e_r, the yx class terms e_p y e_q x e_r. Over a
/// noncommutative algebra the two classes are genuinely different.
template <ScalarBackend S>
struct BilinearComponents {
    using Key = std::tuple<VarOrder, int, int, int>; // (order, p, q, r)
    std::map<Key, S> comps;

    void set(VarOrder order, int p, int q, int r, S value) {
        comps[Key{order, p, q, r}] = std::move(value);
    }

    /// Same components with the two order classes exchanged; applying the
    /// result to (x, y) equals applying the original to (y, x).
    BilinearComponents swapped() const {
        BilinearComponents out;
        for (const auto& [key, v] : comps) {
            const auto [order, p, q, r] = key;
            const VarOrder flipped = order == VarOrder::xy ? VarOrder::yx : VarOrder::xy;
            out.comps.emplace(Key{flipped, p, q, r}, v);
        }
        return out;
    }
};

template <ScalarBackend S>
AlgebraElement<S> apply_bilinear(const FiniteAlgebra<S>& alg, const BilinearComponents<S>& b,
                                 const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
    require_element(alg, x);
    require_element(alg, y);
    AlgebraElement<S> out(alg.dim());
    for (const auto& [key, c] : b.comps) {
        const auto [order, p, q, r] = key;
        if (p < 0 || p >= alg.dim() || q < 0 || q >= alg.dim() || r < 0 || r >= alg.dim())
            throw DimensionMismatch("component index out of range");
        if (scalar_traits<S>::is_zero(c))
            continue;
        const AlgebraElement<S>& first = order == VarOrder::xy ? x : y;
        const AlgebraElement<S>& second = order == VarOrder::xy ? y : x;
        AlgebraElement<S> term = multiply(alg, alg.basis_element(p), first);
        term = multiply(alg, term, alg.basis_element(q));
        term = multiply(alg, term, second);
        term = multiply(alg, term, alg.basis_element(r));
        out = out + c * term;
    }
    return out;
}

/// Bilinearity reduces the all-pairs quantifier to basis pairs, so both
/// predicates check f on e_u, e_v only.
template <ScalarBackend S>
bool check_symmetric(const FiniteAlgebra<S>& alg, const BilinearComponents<S>& b) {
    for (int u = 0; u < alg.dim(); ++u)
        for (int v = 0; v < alg.dim(); ++v) {
            const auto eu = alg.basis_element(u);
            const auto ev = alg.basis_element(v);
            if (!(apply_bilinear(alg, b, eu, ev) == apply_bilinear(alg, b, ev, eu)))
                return false;
        }
    return true;
}

template <ScalarBackend S>
bool check_skew(const FiniteAlgebra<S>& alg, const BilinearComponents<S>& b) {
    for (int u = 0; u < alg.dim(); ++u)
        for (int v = 0; v < alg.dim(); ++v) {
            const auto eu = alg.basis_element(u);
            const auto ev = alg.basis_element(v);
            if (!(apply_bilinear(alg, b, eu, ev) == -apply_bilinear(alg, b, ev, eu)))
                return false;
        }
    return true;
}

template <ScalarBackend S>
BilinearComponents<S> scale(const S& factor, const BilinearComponents<S>& b) {
    BilinearComponents<S> out;
    for (const auto& [key, v] : b.comps)
        out.comps.emplace(key, factor * v);
    return out;
}

template <ScalarBackend S>
BilinearComponents<S> add(const BilinearComponents<S>& a, const BilinearComponents<S>& b) {
    BilinearComponents<S> out = a;
    for (const auto& [key, v] : b.comps) {
        auto it = out.comps.find(key);
        if (it == out.comps.end())
            out.comps.emplace(key, v);
        else
            it->second = it->second + v;
    }
    return out;
}

template <ScalarBackend S>
BilinearComponents<S> symmetrize(const BilinearComponents<S>& b) {
    const S half = scalar_traits<S>::one() / scalar_traits<S>::from_int(2);
    return scale(half, add(b, b.swapped()));
}

template <ScalarBackend S>
BilinearComponents<S> antisymmetrize(const BilinearComponents<S>& b) {
    const S half = scalar_traits<S>::one() / scalar_traits<S>::from_int(2);
    return scale(half, add(b, scale(-scalar_traits<S>::one(), b.swapped())));
}

} // namespace divring

#endif
