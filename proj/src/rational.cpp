#include "floorlab/rational.hpp"

#include <cctype>

namespace floorlab {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty())
        return false;
    const bool negative = text[0] == '-';
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size())
        return false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            return false;
    }
    // Strip leading zeros: cpp_int's string constructor would read them as
    // an octal prefix (and it rejects a leading '+').
    while (i + 1 < text.size() && text[i] == '0')
        ++i;
    out = BigInt(std::string(text.substr(i)));
    if (negative)
        out = -out;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt n, d = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, n))
            throw parse_error("not a rational literal: \"" + std::string(text) + "\"");
    } else {
        if (!parse_integer(text.substr(0, slash), n) ||
            !parse_integer(text.substr(slash + 1), d))
            throw parse_error("not a rational literal: \"" + std::string(text) + "\"");
        if (d == 0)
            throw parse_error("zero denominator in rational literal: \"" +
                              std::string(text) + "\"");
    }
    return Rational(std::move(n), std::move(d));
}

} // namespace floorlab
