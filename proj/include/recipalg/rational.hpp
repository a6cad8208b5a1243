#pragma once

/*
 * Exact arithmetic carriers: arbitrary-precision integers and rationals.
 *
 * Rational is always stored reduced with a positive denominator and zero as
 * 0/1 (boost::multiprecision maintains exactly this normal form). parseRational
 * accepts the "a/b" / integer grammar used by arrangement files.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recipalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with den != 0; sign is normalized into the numerator.
inline Rational makeRational(BigInt num, BigInt den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool isInteger(const Rational& q) { return denominator(q) == 1; }

namespace detail {

inline bool isSignedInteger(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace detail

// Parses "a", "a/b", with optional leading sign on either part. No decimals.
inline Rational parseRational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view numPart = text.substr(0, slash);
    if (!detail::isSignedInteger(numPart))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt num{std::string(numPart)};
    if (slash == std::string_view::npos)
        return Rational(num);
    std::string_view denPart = text.substr(slash + 1);
    if (!detail::isSignedInteger(denPart))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt den{std::string(denPart)};
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return makeRational(std::move(num), std::move(den));
}

// "a" when integral, "a/b" otherwise; inverse of parseRational on its image.
inline std::string toString(const Rational& q) {
    std::string s = numerator(q).str();
    if (!isInteger(q))
        s += "/" + denominator(q).str();
    return s;
}

} // namespace recipalg
