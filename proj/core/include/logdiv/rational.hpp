#ifndef LOGDIV_RATIONAL_HPP
#define LOGDIV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace logdiv {

// Exact arithmetic everywhere. Expression templates are switched off so that
// `auto` deduces plain value types.
namespace mp = boost::multiprecision;
using BigInt = mp::number<mp::backends::cpp_int_backend<>, mp::et_off>;
using Rational =
    mp::number<mp::backends::rational_adaptor<mp::backends::cpp_int_backend<>>,
               mp::et_off>;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace logdiv

#endif
