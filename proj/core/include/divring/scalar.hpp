#ifndef DIVRING_SCALAR_HPP
#define DIVRING_SCALAR_HPP

#include <concepts>
#include <string>

#include <gmpxx.h>

#include "divring/errors.hpp"

namespace divring {

/// Exact rational scalar. Arithmetic is exact, equality is literal.
using Rat = mpq_class;

/// Absolute tolerance used when comparing float-backend scalars.
/// Default 1e-9; the CLI exposes it as --tol.
double float_tolerance();
void set_float_tolerance(double tol);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    /// Exact binary expansion of the double, no rounding.
    static Rat from_double(double v) { return Rat(v); }
    static double to_double(const Rat& v) { return v.get_d(); }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static bool is_negative(const Rat& a) { return sgn(a) < 0; }
    static Rat parse(const std::string& text);
    static std::string str(const Rat& v) { return v.get_str(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
    static bool eq(double a, double b);
    static bool is_zero(double a) { return eq(a, 0.0); }
    static bool is_negative(double a) { return a < 0.0; }
    static double parse(const std::string& text);
    static std::string str(double v);
};

/// A field usable as the coordinate domain of an algebra.
template <class S>
concept ScalarBackend = requires(const S& a, const S& b) {
    { scalar_traits<S>::zero() } -> std::convertible_to<S>;
    { scalar_traits<S>::one() } -> std::convertible_to<S>;
    { scalar_traits<S>::eq(a, b) } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
};

/// Best rational approximation of x whose denominator does not exceed
/// max_den (continued-fraction walk). Used to present solver output that
/// originated from promoted floats; raw values stay exact elsewhere.
Rat limit_denominator(const Rat& x, unsigned long max_den);

} // namespace divring

#endif
