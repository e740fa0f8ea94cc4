#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace meander {

/// Exact rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Formats as "p/q", including integers ("1/1").
inline std::string to_string(const Rational &r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

namespace detail {
inline bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}
} // namespace detail

/// Parses "p/q" (q > 0). Returns nullopt on any syntax problem.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return std::nullopt;
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::is_integer_literal(num, true) || !detail::is_integer_literal(den, false))
        return std::nullopt;
    std::string num_s(num);
    if (num_s[0] == '+')
        num_s.erase(0, 1);
    BigInt n(num_s);
    BigInt d{std::string(den)};
    if (d == 0)
        return std::nullopt;
    return Rational(n, d);
}

} // namespace meander
