#ifndef DIVRING_QUATERNION_HPP
#define DIVRING_QUATERNION_HPP

#include <optional>
#include <string>
#include <vector>

#include "divring/algebra.hpp"

namespace divring {

/// Parameters of the generalized quaternion algebra E(F,a,b):
/// i^2 = a, j^2 = b, ij = k = -ji, with a*b != 0.
template <ScalarBackend S>
struct QuaternionParams {
    S a;
    S b;

    /// E(F,a,b) is a division algebra over an ordered field exactly when
    /// both parameters are negative.
    bool is_division() const {
        return scalar_traits<S>::is_negative(a) && scalar_traits<S>::is_negative(b);
    }
};

/// Pure-imaginary coordinates used by rotation.
template <ScalarBackend S>
struct Vector3 {
    S x;
    S y;
    S z;

    friend bool operator==(const Vector3& u, const Vector3& v) {
        return scalar_traits<S>::eq(u.x, v.x) && scalar_traits<S>::eq(u.y, v.y) &&
               scalar_traits<S>::eq(u.z, v.z);
    }
};

/// Builds E(F,a,b) on the basis (1,i,j,k). The products involving k all
/// follow from k = ij, ji = -ij and associativity:
///   ik = aj, ki = -aj, jk = -bi, kj = bi, k^2 = -ab.
/// E(F,-1,-1) is the Hamilton table (ij=k, jk=i, ki=j, squares -1).
template <ScalarBackend S>
FiniteAlgebra<S> make_e_algebra(const QuaternionParams<S>& params) {
    using T = scalar_traits<S>;
    const S& a = params.a;
    const S& b = params.b;
    if (T::is_zero(a * b))
        throw DegenerateParams("E(F,a,b) requires a*b != 0");
    const S one = T::one();
    std::vector<ConstantEntry<S>> entries;
    entries.push_back({0, 0, 0, one});
    for (int m = 1; m < 4; ++m) {
        entries.push_back({0, m, m, one});
        entries.push_back({m, 0, m, one});
    }
    entries.push_back({1, 1, 0, a});
    entries.push_back({2, 2, 0, b});
    entries.push_back({3, 3, 0, -(a * b)});
    entries.push_back({1, 2, 3, one});
    entries.push_back({2, 1, 3, -one});
    entries.push_back({1, 3, 2, a});
    entries.push_back({3, 1, 2, -a});
    entries.push_back({2, 3, 1, -b});
    entries.push_back({3, 2, 1, b});
    return FiniteAlgebra<S>(4, entries, 0, {"1", "i", "j", "k"});
}

template <ScalarBackend S>
FiniteAlgebra<S> make_e_algebra(const S& a, const S& b) {
    return make_e_algebra(QuaternionParams<S>{a, b});
}

/// Hamilton quaternions H = E(F,-1,-1).
template <ScalarBackend S>
FiniteAlgebra<S> make_quaternion_algebra() {
    const S minus_one = -scalar_traits<S>::one();
    return make_e_algebra(QuaternionParams<S>{minus_one, minus_one});
}

/// The complex numbers as a two-dimensional algebra: i^2 = -1.
template <ScalarBackend S>
FiniteAlgebra<S> make_complex_algebra() {
    using T = scalar_traits<S>;
    std::vector<ConstantEntry<S>> entries = {
        {0, 0, 0, T::one()},
        {0, 1, 1, T::one()},
        {1, 0, 1, T::one()},
        {1, 1, 0, -T::one()},
    };
    return FiniteAlgebra<S>(2, entries, 0, {"1", "i"});
}

/// Recognizes an E(F,a,b) presentation on the basis (1,i,j,k) and
/// recovers its parameters; nullopt when the table does not match.
template <ScalarBackend S>
std::optional<QuaternionParams<S>> e_parameters(const FiniteAlgebra<S>& alg) {
    if (alg.dim() != 4 || alg.unit_index() != 0)
        return std::nullopt;
    QuaternionParams<S> params{alg.constant(1, 1, 0), alg.constant(2, 2, 0)};
    if (scalar_traits<S>::is_zero(params.a * params.b))
        return std::nullopt;
    if (!(alg == make_e_algebra(params)))
        return std::nullopt;
    return params;
}

template <ScalarBackend S>
bool is_hamilton(const FiniteAlgebra<S>& alg) {
    const auto params = e_parameters(alg);
    if (!params)
        return false;
    const S minus_one = -scalar_traits<S>::one();
    return scalar_traits<S>::eq(params->a, minus_one) &&
           scalar_traits<S>::eq(params->b, minus_one);
}

template <ScalarBackend S>
QuaternionParams<S> require_e_algebra(const FiniteAlgebra<S>& alg) {
    const auto params = e_parameters(alg);
    if (!params)
        throw WrongAlgebra("operation requires an E(F,a,b) algebra on basis (1,i,j,k)");
    return *params;
}

template <ScalarBackend S>
void require_hamilton(const FiniteAlgebra<S>& alg) {
    if (!is_hamilton(alg))
        throw WrongAlgebra("operation requires the Hamilton quaternions");
}

/// Conjugate: keeps the real coordinate, negates the imaginary ones.
template <ScalarBackend S>
AlgebraElement<S> conjugate(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x) {
    require_e_algebra(alg);
    require_element(alg, x);
    AlgebraElement<S> r = x;
    for (int m = 1; m < 4; ++m)
        r[m] = -r[m];
    return r;
}

/// |x|^2 as the real coordinate of x * conj(x). The product is computed
/// through the table and its imaginary part is asserted to vanish, so a
/// broken table surfaces as NonRealProduct instead of a wrong norm.
template <ScalarBackend S>
S norm_sq(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x) {
    require_e_algebra(alg);
    require_element(alg, x);
    const AlgebraElement<S> p = multiply(alg, x, conjugate(alg, x));
    for (int m = 1; m < 4; ++m)
        if (!scalar_traits<S>::is_zero(p[m]))
            throw NonRealProduct("x * conj(x) has a nonzero imaginary coordinate");
    return p[0];
}

/// x^-1 = |x|^-2 conj(x).
template <ScalarBackend S>
AlgebraElement<S> inverse(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x) {
    const S ns = norm_sq(alg, x);
    if (scalar_traits<S>::is_zero(ns))
        throw NotInvertible("element has zero norm");
    return (scalar_traits<S>::one() / ns) * conjugate(alg, x);
}

/// Inner automorphism v -> q v q^-1 restricted to pure imaginaries:
/// a rotation about the axis of q through twice its half-angle. The norm
/// of q is irrelevant.
template <ScalarBackend S>
Vector3<S> rotate(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& q,
                  const Vector3<S>& v) {
    require_hamilton(alg);
    AlgebraElement<S> pure(4);
    pure[1] = v.x;
    pure[2] = v.y;
    pure[3] = v.z;
    const AlgebraElement<S> p =
        multiply(alg, multiply(alg, q, pure), inverse(alg, q));
    if (!scalar_traits<S>::is_zero(p[0]))
        throw NonRealProduct("rotated vector acquired a real coordinate");
    return Vector3<S>{p[1], p[2], p[3]};
}

/// Matrix J_a of x -> a*x over H; a -> J_a is an algebra embedding,
/// J_{ab} = J_a J_b.
template <ScalarBackend S>
FieldMatrix<S> left_jacobian(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& a) {
    require_hamilton(alg);
    return left_mult_matrix(alg, a);
}

} // namespace divring

#endif
