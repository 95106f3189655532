#ifndef DIVRING_LITERAL_HPP
#define DIVRING_LITERAL_HPP

#include <string>
#include <vector>

#include "divring/algebra.hpp"

namespace divring {

namespace detail {

struct LiteralTerm {
    bool negative = false;
    std::string magnitude; // empty means 1
    char unit = 0;         // 0, 'i', 'j' or 'k'
};

std::vector<LiteralTerm> tokenize_literal(const std::string& text);
std::vector<std::string> split_coordinate_list(const std::string& text);

} // namespace detail

/// Reads "1+2i-3j+4k" style sums (units i, j, k on the basis 1,i,j,k) or
/// the coordinate form "[1,2,-3,4]" whose length must match the algebra.
template <ScalarBackend S>
AlgebraElement<S> parse_element(const FiniteAlgebra<S>& alg, const std::string& text) {
    using T = scalar_traits<S>;
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        throw ParseError("empty element literal");

    if (text[first] == '[') {
        const auto parts = detail::split_coordinate_list(text);
        if (static_cast<int>(parts.size()) != alg.dim())
            throw ParseError("coordinate list has " + std::to_string(parts.size()) +
                             " entries, algebra dimension is " + std::to_string(alg.dim()));
        AlgebraElement<S> x(alg.dim());
        for (int m = 0; m < alg.dim(); ++m)
            x[m] = T::parse(parts[static_cast<size_t>(m)]);
        return x;
    }

    if (alg.unit_index() != 0 || alg.dim() > 4)
        throw ParseError("sum literals need a (1,i,j,k)-style basis; use [..] coordinates");
    AlgebraElement<S> x(alg.dim());
    for (const auto& term : detail::tokenize_literal(text)) {
        int index = 0;
        switch (term.unit) {
        case 0: index = 0; break;
        case 'i': index = 1; break;
        case 'j': index = 2; break;
        case 'k': index = 3; break;
        }
        if (index >= alg.dim())
            throw ParseError(std::string("unit '") + term.unit +
                             "' does not exist in this algebra");
        S value = term.magnitude.empty() ? T::one() : T::parse(term.magnitude);
        if (term.negative)
            value = -value;
        x[index] = x[index] + value;
    }
    return x;
}

/// Inverse of parse_element: sum form on (1,i,j,k)-labelled bases, the
/// coordinate form otherwise.
template <ScalarBackend S>
std::string format_element(const FiniteAlgebra<S>& alg, const AlgebraElement<S>& x) {
    using T = scalar_traits<S>;
    const bool literal_basis =
        alg.unit_index() == 0 && alg.dim() <= 4 && alg.labels()[0] == "1";
    if (!literal_basis) {
        std::string out = "[";
        for (int m = 0; m < x.dim(); ++m) {
            if (m)
                out += ",";
            out += T::str(x[m]);
        }
        return out + "]";
    }

    std::string out;
    for (int m = 0; m < x.dim(); ++m) {
        if (T::is_zero(x[m]))
            continue;
        std::string mag = T::str(x[m]);
        bool negative = false;
        if (!mag.empty() && mag[0] == '-') {
            negative = true;
            mag.erase(0, 1);
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (m == 0)
            out += mag;
        else
            out += (mag == "1" ? "" : mag) + alg.labels()[static_cast<size_t>(m)];
    }
    return out.empty() ? "0" : out;
}

} // namespace divring

#endif
