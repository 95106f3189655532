#include "divring/literal.hpp"

#include <cctype>

namespace divring::detail {

namespace {

bool is_magnitude_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/';
}

} // namespace

std::vector<LiteralTerm> tokenize_literal(const std::string& text) {
    std::vector<LiteralTerm> terms;
    size_t pos = 0;
    const size_t n = text.size();
    auto skip_space = [&] {
        while (pos < n && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    skip_space();
    if (pos == n)
        throw ParseError("empty element literal");
    while (pos < n) {
        LiteralTerm term;
        if (text[pos] == '+' || text[pos] == '-') {
            term.negative = text[pos] == '-';
            ++pos;
            skip_space();
        } else if (!terms.empty()) {
            throw ParseError("expected '+' or '-' before term in '" + text + "'");
        }
        const size_t start = pos;
        while (pos < n && is_magnitude_char(text[pos]))
            ++pos;
        term.magnitude = text.substr(start, pos - start);
        if (pos < n && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            term.unit = text[pos];
            ++pos;
        }
        if (term.magnitude.empty() && term.unit == 0)
            throw ParseError("malformed term in element literal '" + text + "'");
        skip_space();
        terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<std::string> split_coordinate_list(const std::string& text) {
    const size_t open = text.find('[');
    const size_t close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close <= open)
        throw ParseError("coordinate form must look like [a,b,...]");
    std::vector<std::string> parts;
    std::string current;
    for (size_t pos = open + 1; pos < close; ++pos) {
        if (text[pos] == ',') {
            parts.push_back(current);
            current.clear();
        } else if (text[pos] != ' ' && text[pos] != '\t') {
            current += text[pos];
        }
    }
    parts.push_back(current);
    return parts;
}

} // namespace divring::detail
