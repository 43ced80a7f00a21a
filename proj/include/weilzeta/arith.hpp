#pragma once

// Exact integer / rational helpers shared by every module.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "weilzeta/errors.hpp"

namespace weilzeta {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline big_int ipow(big_int base, unsigned exponent)
{
    big_int result = 1;
    while (exponent) {
        if (exponent & 1U)
            result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

/* base^exponent for a possibly negative exponent */
inline rational rpow(rational const & base, int exponent)
{
    if (exponent >= 0) {
        rational r = 1;
        for (int i = 0; i < exponent; ++i)
            r *= base;
        return r;
    }
    if (base == 0)
        throw std::domain_error("rpow: zero to a negative power");
    return rational(1) / rpow(base, -exponent);
}

inline std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

inline bool is_perfect_square(std::int64_t n)
{
    if (n < 0)
        return false;
    auto r = isqrt(n);
    return r * r == n;
}

/* floor(a / b) for b != 0 */
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/* a mod m in [0, m) for m > 0 */
inline std::int64_t mod_pos(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/* Natural logarithm of a positive big integer, without overflowing double. */
inline double big_log(big_int const & x)
{
    if (x <= 0)
        throw std::domain_error("big_log of a non-positive number");
    auto bits = static_cast<long>(boost::multiprecision::msb(x));
    long shift = bits > 60 ? bits - 60 : 0;
    big_int top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_string(big_int const & x)
{
    return x.str();
}

inline std::string to_string(rational const & r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline big_int parse_big_int(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw input_error("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw input_error("malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw input_error("malformed integer '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return big_int(s);
}

/* Accepts "n" or "n/d". */
inline rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return rational(parse_big_int(text));
    big_int num = parse_big_int(text.substr(0, slash));
    big_int den = parse_big_int(text.substr(slash + 1));
    if (den == 0)
        throw input_error("zero denominator in '" + std::string(text) + "'");
    return rational(num, den);
}

inline double to_double(rational const & r)
{
    return r.convert_to<double>();
}

} // namespace weilzeta
