#include "divring/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace divring {

namespace {
double g_float_tolerance = 1e-9;
}

double float_tolerance() { return g_float_tolerance; }

void set_float_tolerance(double tol) { g_float_tolerance = tol; }

Rat scalar_traits<Rat>::parse(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    // Accept "p" and "p/q"; also accept decimal literals such as "0.5"
    // so rational files can be written by hand without fractions.
    if (text.find('.') != std::string::npos ||
        text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos) {
        return from_double(scalar_traits<double>::parse(text));
    }
    try {
        Rat v(text);
        if (sgn(v.get_den()) == 0)
            throw ParseError("zero denominator in '" + text + "'");
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + text + "'");
    }
}

bool scalar_traits<double>::eq(double a, double b) {
    return std::abs(a - b) <= g_float_tolerance;
}

double scalar_traits<double>::parse(const std::string& text) {
    if (text.empty())
        throw ParseError("empty float literal");
    // Fractions are accepted in float mode too.
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        double num = parse(text.substr(0, slash));
        double den = parse(text.substr(slash + 1));
        if (den == 0.0)
            throw ParseError("zero denominator in '" + text + "'");
        return num / den;
    }
    const char* begin = text.data();
    const char* end = begin + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("invalid float literal '" + text + "'");
    return value;
}

std::string scalar_traits<double>::str(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

Rat limit_denominator(const Rat& x, unsigned long max_den) {
    if (x.get_den() <= max_den)
        return x;
    // Stern-Brocot style: track the two most recent convergents p/q of the
    // continued fraction of x; the last q <= max_den is the best candidate,
    // possibly improved by a partial step on the next quotient.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = x.get_num(), d = x.get_den();
    while (true) {
        mpz_class a = n / d; // floor for positive d; n may be negative
        mpz_class r = n - a * d;
        if (r < 0) {
            a -= 1;
            r += d;
        }
        mpz_class q2 = q0 + a * q1;
        if (q2 > max_den)
            break;
        mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (r == 0)
            return Rat(p1, q1);
        n = d;
        d = r;
    }
    mpz_class k = (mpz_class(max_den) - q0) / q1;
    Rat bound(p0 + k * p1, q0 + k * q1);
    bound.canonicalize();
    Rat conv(p1, q1);
    conv.canonicalize();
    return abs(x - bound) < abs(x - conv) ? bound : conv;
}

} // namespace divring
