#include <logdiv/rational.hpp>

#include <cctype>

namespace logdiv {

std::optional<Rational> parse_rational(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    skip_ws();
    auto read_int = [&]() -> std::optional<BigInt> {
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return std::nullopt;
        return BigInt(text.substr(start, i - start));
    };
    auto num = read_int();
    if (!num) return std::nullopt;
    skip_ws();
    BigInt den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        auto d = read_int();
        if (!d || *d == 0) return std::nullopt;
        den = *d;
        skip_ws();
    }
    if (i != n) return std::nullopt;
    Rational q(*num, den);
    return neg ? -q : q;
}

} // namespace logdiv
