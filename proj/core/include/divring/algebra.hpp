#ifndef DIVRING_ALGEBRA_HPP
#define DIVRING_ALGEBRA_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "divring/matrix.hpp"
#include "divring/scalar.hpp"

namespace divring {

/// Coordinate vector of an algebra element relative to the owning
/// algebra's basis.
template <ScalarBackend S>
struct AlgebraElement {
    std::vector<S> coords;

    AlgebraElement() = default;
    explicit AlgebraElement(int dim)
        : coords(static_cast<size_t>(dim), scalar_traits<S>::zero()) {}
    explicit AlgebraElement(std::vector<S> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    S& operator[](int i) { return coords[static_cast<size_t>(i)]; }
    const S& operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const S& c : coords)
            if (!scalar_traits<S>::is_zero(c))
                return false;
        return true;
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        require_same_dim(a, b);
        AlgebraElement r(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            r[i] = a[i] + b[i];
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        require_same_dim(a, b);
        AlgebraElement r(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            r[i] = a[i] - b[i];
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a) {
        AlgebraElement r(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            r[i] = -a[i];
        return r;
    }

    friend AlgebraElement operator*(const S& s, const AlgebraElement& a) {
        AlgebraElement r(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            r[i] = s * a[i];
        return r;
    }

    /// Elementwise; tolerance-based on the float backend.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.dim() != b.dim())
            return false;
        for (int i = 0; i < a.dim(); ++i)
            if (!scalar_traits<S>::eq(a[i], b[i]))
                return false;
        return true;
    }

private:
    static void require_same_dim(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.dim() != b.dim())
            throw DimensionMismatch("element dimensions differ");
    }
};

/// One entry C_{ij}^k of a structural-constant table.
template <ScalarBackend S>
struct ConstantEntry {
    int i;
    int j;
    int k;
    S value;
};

namespace detail {

template <ScalarBackend S>
struct ConversionMemo {
    std::once_flag once;
    std::optional<FieldMatrix<S>> value;

    template <class Fn>
    const FieldMatrix<S>& get(Fn&& compute) {
        std::call_once(once, [&] { value.emplace(compute()); });
        return *value;
    }
};

} // namespace detail

/// Finite-dimensional algebra over the base field, presented by its
/// structural constants: e_i e_j = sum_k C_{ij}^k e_k. Constants are
/// stored sparsely with lexicographic (i,j,k) iteration order; absent
/// entries are zero. Immutable after construction.
template <ScalarBackend S>
class FiniteAlgebra {
public:
    using ConstantKey = std::array<int, 3>;
    using ConstantMap = std::map<ConstantKey, S>;

    FiniteAlgebra(int dim, const std::vector<ConstantEntry<S>>& entries, int unit_index,
                  std::vector<std::string> labels = {})
        : dim_(dim), unit_(unit_index), labels_(std::move(labels)),
          conversion_memo_(std::make_shared<detail::ConversionMemo<S>>()) {
        if (dim_ <= 0)
            throw IndexOutOfRange("algebra dimension must be positive");
        if (unit_ < 0 || unit_ >= dim_)
            throw IndexOutOfRange("unit index out of range");
        for (const auto& e : entries) {
            if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_ || e.k < 0 || e.k >= dim_)
                throw IndexOutOfRange("constant index out of range");
            ConstantKey key{e.i, e.j, e.k};
            if (constants_.count(key))
                throw DuplicateConstantEntry("duplicate structural constant (" +
                                             std::to_string(e.i) + "," + std::to_string(e.j) +
                                             "," + std::to_string(e.k) + ")");
            if (!scalar_traits<S>::is_zero(e.value))
                constants_.emplace(key, e.value);
        }
        if (labels_.empty())
            for (int i = 0; i < dim_; ++i)
                labels_.push_back("e" + std::to_string(i));
        if (static_cast<int>(labels_.size()) != dim_)
            throw DimensionMismatch("label count must equal dimension");
    }

    int dim() const { return dim_; }
    int unit_index() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const ConstantMap& constants() const { return constants_; }

    S constant(int i, int j, int k) const {
        auto it = constants_.find(ConstantKey{i, j, k});
        return it == constants_.end() ? scalar_traits<S>::zero() : it->second;
    }

    AlgebraElement<S> zero() const { return AlgebraElement<S>(dim_); }

    AlgebraElement<S> basis_element(int i) const {
        if (i < 0 || i >= dim_)
            throw IndexOutOfRange("basis index out of range");
        AlgebraElement<S> e(dim_);
        e[i] = scalar_traits<S>::one();
        return e;
    }

    AlgebraElement<S> unit() const { return basis_element(unit_); }

    /// Equal presentations: same dimension, unit and constant table
    /// (tolerance-based on the float backend). Labels are ignored.
    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
        if (a.dim_ != b.dim_ || a.unit_ != b.unit_)
            return false;
        for (int i = 0; i < a.dim_; ++i)
            for (int j = 0; j < a.dim_; ++j)
                for (int k = 0; k < a.dim_; ++k)
                    if (!scalar_traits<S>::eq(a.constant(i, j, k), b.constant(i, j, k)))
                        return false;
        return true;
    }

    /// Lazily computed matrix shared by all copies of this algebra value;
    /// creation is idempotent and safe for concurrent readers.
    template <class Fn>
    const FieldMatrix<S>& conversion_matrix_memo(Fn&& compute) const {
        return conversion_memo_->get(std::forward<Fn>(compute));
    }

private:
    int dim_;
    int unit_;
    std::vector<std::string> labels_;
    ConstantMap constants_;
    mutable std::shared_ptr<detail::ConversionMemo<S>> conversion_memo_;
};

template <ScalarBackend S>
FiniteAlgebra<S> make_algebra(int dim, const std::vector<ConstantEntry<S>>& constants,
                              int unit_index, std::vector<std::string> labels = {}) {
    return FiniteAlgebra<S>(dim, constants, unit_index, std::move(labels));
}

template <ScalarBackend S>
void require_element(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x) {
    if (x.dim() != alg.dim())
        throw DimensionMismatch("element does not conform to algebra dimension");
}

/// Product through the structural constants:
/// (xy)^k = sum_{i,j} x^i y^j C_{ij}^k.
template <ScalarBackend S>
AlgebraElement<S> multiply(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x,
                           const AlgebraElement<S>& y) {
    require_element(alg, x);
    require_element(alg, y);
    AlgebraElement<S> r(alg.dim());
    for (const auto& [key, c] : alg.constants()) {
        const auto [i, j, k] = key;
        if (scalar_traits<S>::is_zero(x[i]) || scalar_traits<S>::is_zero(y[j]))
            continue;
        r[k] = r[k] + x[i] * y[j] * c;
    }
    return r;
}

/// Result of an axiom check; `violation` carries the first offending
/// index tuple in lexicographic order.
struct AssociativityReport {
    std::optional<std::array<int, 4>> violation; // (i,j,k,l)
    bool ok() const { return !violation.has_value(); }
};

struct UnitReport {
    // (side, j, k): side 0 = unit*e_j, side 1 = e_j*unit; component k.
    std::optional<std::array<int, 3>> violation;
    bool ok() const { return !violation.has_value(); }
};

/// Verifies sum_p C_{ij}^p C_{pk}^l = sum_p C_{jk}^p C_{ip}^l for every
/// quadruple, reporting the first violation in lexicographic order.
template <ScalarBackend S>
AssociativityReport check_associativity(const FiniteAlgebra<S>& alg) {
    const int n = alg.dim();
    // dense copy for O(1) lookup
    std::vector<S> c(static_cast<size_t>(n) * n * n, scalar_traits<S>::zero());
    auto at = [&](int i, int j, int k) -> S& {
        return c[(static_cast<size_t>(i) * n + j) * n + k];
    };
    for (const auto& [key, v] : alg.constants())
        at(key[0], key[1], key[2]) = v;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    S lhs = scalar_traits<S>::zero();
                    S rhs = scalar_traits<S>::zero();
                    for (int p = 0; p < n; ++p) {
                        lhs = lhs + at(i, j, p) * at(p, k, l);
                        rhs = rhs + at(j, k, p) * at(i, p, l);
                    }
                    if (!scalar_traits<S>::eq(lhs, rhs))
                        return AssociativityReport{std::array<int, 4>{i, j, k, l}};
                }
    return AssociativityReport{};
}

/// Verifies C_{uj}^k = delta_j^k = C_{ju}^k for the designated unit u.
template <ScalarBackend S>
UnitReport check_unit(const FiniteAlgebra<S>& alg) {
    const int n = alg.dim();
    const int u = alg.unit_index();
    for (int side = 0; side < 2; ++side)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const S got = side == 0 ? alg.constant(u, j, k) : alg.constant(j, u, k);
                const S want = j == k ? scalar_traits<S>::one() : scalar_traits<S>::zero();
                if (!scalar_traits<S>::eq(got, want))
                    return UnitReport{std::array<int, 3>{side, j, k}};
            }
    return UnitReport{};
}

/// Matrix of x -> a*x acting on coordinate columns:
/// coords(a*x) = M coords(x), M(k,j) = sum_i a^i C_{ij}^k.
template <ScalarBackend S>
FieldMatrix<S> left_mult_matrix(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& a) {
    require_element(alg, a);
    FieldMatrix<S> m(alg.dim(), alg.dim());
    for (const auto& [key, c] : alg.constants()) {
        const auto [i, j, k] = key;
        if (!scalar_traits<S>::is_zero(a[i]))
            m(k, j) = m(k, j) + a[i] * c;
    }
    return m;
}

/// Matrix of x -> x*a: coords(x*a) = M coords(x), M(k,i) = sum_j a^j C_{ij}^k.
template <ScalarBackend S>
FieldMatrix<S> right_mult_matrix(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& a) {
    require_element(alg, a);
    FieldMatrix<S> m(alg.dim(), alg.dim());
    for (const auto& [key, c] : alg.constants()) {
        const auto [i, j, k] = key;
        if (!scalar_traits<S>::is_zero(a[j]))
            m(k, i) = m(k, i) + a[j] * c;
    }
    return m;
}

/// Rebases the algebra along T, where column j of T holds the old
/// coordinates of the new basis vector e'_j. Structural constants follow
/// the tensor law C'_{ij}^k = sum (T^-1)(k,r) T(p,i) T(q,j) C_{pq}^r.
/// The unit must come out as a single new basis vector.
template <ScalarBackend S>
FiniteAlgebra<S> change_basis(const FiniteAlgebra<S>& alg, const FieldMatrix<S>& t) {
    const int n = alg.dim();
    if (t.rows() != n || t.cols() != n)
        throw DimensionMismatch("transform must be n x n");
    const auto tinv = try_inverse(t);
    if (!tinv)
        throw SingularTransform("basis transform is singular");

    std::vector<ConstantEntry<S>> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // old coordinates of e'_i e'_j
            AlgebraElement<S> prod(n);
            for (const auto& [key, c] : alg.constants()) {
                const auto [p, q, r] = key;
                prod[r] = prod[r] + t(p, i) * t(q, j) * c;
            }
            for (int k = 0; k < n; ++k) {
                S v = scalar_traits<S>::zero();
                for (int r = 0; r < n; ++r)
                    v = v + (*tinv)(k, r) * prod[r];
                if (!scalar_traits<S>::is_zero(v))
                    entries.push_back(ConstantEntry<S>{i, j, k, v});
            }
        }

    // new coordinates of the old unit: column unit_index of T^-1
    int new_unit = -1;
    for (int m = 0; m < n; ++m) {
        bool pure = true;
        for (int r = 0; r < n; ++r) {
            const S want = r == m ? scalar_traits<S>::one() : scalar_traits<S>::zero();
            if (!scalar_traits<S>::eq((*tinv)(r, alg.unit_index()), want)) {
                pure = false;
                break;
            }
        }
        if (pure) {
            new_unit = m;
            break;
        }
    }
    if (new_unit < 0)
        throw UnitNotInNewBasis("unit is not a single vector of the new basis");
    return FiniteAlgebra<S>(n, entries, new_unit);
}

inline AlgebraElement<Rat> exact_element(const AlgebraElement<double>& x) {
    std::vector<Rat> coords;
    coords.reserve(x.coords.size());
    for (double v : x.coords)
        coords.push_back(scalar_traits<Rat>::from_double(v));
    return AlgebraElement<Rat>(std::move(coords));
}

inline AlgebraElement<double> float_element(const AlgebraElement<Rat>& x) {
    std::vector<double> coords;
    coords.reserve(x.coords.size());
    for (const Rat& v : x.coords)
        coords.push_back(v.get_d());
    return AlgebraElement<double>(std::move(coords));
}

inline FiniteAlgebra<Rat> exact_algebra(const FiniteAlgebra<double>& alg) {
    std::vector<ConstantEntry<Rat>> entries;
    for (const auto& [key, v] : alg.constants())
        entries.push_back({key[0], key[1], key[2], scalar_traits<Rat>::from_double(v)});
    return FiniteAlgebra<Rat>(alg.dim(), entries, alg.unit_index(), alg.labels());
}

inline FiniteAlgebra<double> float_algebra(const FiniteAlgebra<Rat>& alg) {
    std::vector<ConstantEntry<double>> entries;
    for (const auto& [key, v] : alg.constants())
        entries.push_back({key[0], key[1], key[2], v.get_d()});
    return FiniteAlgebra<double>(alg.dim(), entries, alg.unit_index(), alg.labels());
}

} // namespace divring

#endif
