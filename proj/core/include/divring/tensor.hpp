#ifndef DIVRING_TENSOR_HPP
#define DIVRING_TENSOR_HPP

#include <utility>
#include <vector>

#include "divring/algebra.hpp"
#include "divring/matrix.hpp"

namespace divring {

/// Formal sum of pure tensors sum_s a_s (x) b_s over one algebra. The
/// term list is a representation, not a canonical value: splitting a
/// factor or moving a base-field scalar across the tensor sign changes
/// the list but not the canonical components.
template <ScalarBackend S>
struct Tensor2 {
    std::vector<std::pair<AlgebraElement<S>, AlgebraElement<S>>> terms;

    Tensor2() = default;
    explicit Tensor2(std::vector<std::pair<AlgebraElement<S>, AlgebraElement<S>>> t)
        : terms(std::move(t)) {}

    void add_term(AlgebraElement<S> a, AlgebraElement<S> b) {
        terms.emplace_back(std::move(a), std::move(b));
    }

    friend Tensor2 operator+(const Tensor2& s, const Tensor2& t) {
        Tensor2 out = s;
        out.terms.insert(out.terms.end(), t.terms.begin(), t.terms.end());
        return out;
    }
};

/// Canonical standard components f^{kr} of sum f^{kr} e_k (x) e_r,
/// uniquely determined by the tensor relative to the stored basis.
template <ScalarBackend S>
struct TensorComponents {
    FieldMatrix<S> comps;

    bool is_zero() const { return comps.is_zero(); }

    friend bool operator==(const TensorComponents& a, const TensorComponents& b) {
        return a.comps == b.comps;
    }
};

/// f^{kr} = sum_s a_s^k b_s^r.
template <ScalarBackend S>
TensorComponents<S> canonicalize(const FiniteAlgebra<S>& alg, const Tensor2<S>& t) {
    const int n = alg.dim();
    FieldMatrix<S> comps(n, n);
    for (const auto& [a, b] : t.terms) {
        require_element(alg, a);
        require_element(alg, b);
        for (int k = 0; k < n; ++k) {
            if (scalar_traits<S>::is_zero(a[k]))
                continue;
            for (int r = 0; r < n; ++r)
                comps(k, r) = comps(k, r) + a[k] * b[r];
        }
    }
    return TensorComponents<S>{std::move(comps)};
}

template <ScalarBackend S>
bool is_zero(const FiniteAlgebra<S>& alg, const Tensor2<S>& t) {
    return canonicalize(alg, t).is_zero();
}

/// (a (x) b)(c (x) d) = (ac) (x) (bd) extended to sums: all pairwise
/// products. The canonical form of the result does not depend on the
/// input representations.
template <ScalarBackend S>
Tensor2<S> tensor_mul(const FiniteAlgebra<S>& alg, const Tensor2<S>& s, const Tensor2<S>& t) {
    Tensor2<S> out;
    for (const auto& [a, b] : s.terms)
        for (const auto& [c, d] : t.terms) {
            if (a.dim() != c.dim() || b.dim() != d.dim())
                throw DimensionMismatch("tensor factors live in different algebras");
            out.add_term(multiply(alg, a, c), multiply(alg, b, d));
        }
    return out;
}

/// 1 (x) 1, the unit of the componentwise product.
template <ScalarBackend S>
Tensor2<S> unit_tensor(const FiniteAlgebra<S>& alg) {
    Tensor2<S> t;
    t.add_term(alg.unit(), alg.unit());
    return t;
}

} // namespace divring

#endif
