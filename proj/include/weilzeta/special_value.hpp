#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>

#include "weilzeta/arith.hpp"

namespace weilzeta {

/*
 * Leading Taylor term of a zeta function at s = 0, kept symbolic:
 *
 *     zeta*(0) = mantissa * prod_p (ln p)^log_exponents[p] * residual
 *
 * The residual is a real transcendental factor (a regulator, L'(0)); it is
 * absent when the value is exact. ord < 0 denotes a pole.
 */
struct special_value {
    int ord = 0;
    rational mantissa = 1;
    std::map<std::int64_t, int> log_exponents;
    std::optional<double> residual;

    bool exact() const { return !residual.has_value(); }

    double to_double() const
    {
        double v = weilzeta::to_double(mantissa);
        for (auto const & [p, e] : log_exponents)
            v *= std::pow(std::log(static_cast<double>(p)), e);
        if (residual)
            v *= *residual;
        return v;
    }

    special_value abs() const
    {
        special_value out = *this;
        if (out.mantissa < 0)
            out.mantissa = -out.mantissa;
        if (out.residual && *out.residual < 0)
            out.residual = -*out.residual;
        return out;
    }

    bool operator==(special_value const &) const = default;

    friend special_value operator*(special_value const & a, special_value const & b)
    {
        special_value out;
        out.ord = a.ord + b.ord;
        out.mantissa = a.mantissa * b.mantissa;
        out.log_exponents = a.log_exponents;
        for (auto const & [p, e] : b.log_exponents)
            out.log_exponents[p] += e;
        std::erase_if(out.log_exponents, [](auto const & kv) { return kv.second == 0; });
        if (a.residual || b.residual)
            out.residual = a.residual.value_or(1.0) * b.residual.value_or(1.0);
        return out;
    }

    friend special_value operator/(special_value const & a, special_value const & b)
    {
        if (b.mantissa == 0 || (b.residual && *b.residual == 0))
            throw std::domain_error("special_value: division by zero");
        special_value inv;
        inv.ord = -b.ord;
        inv.mantissa = rational(1) / b.mantissa;
        for (auto const & [p, e] : b.log_exponents)
            inv.log_exponents[p] = -e;
        if (b.residual)
            inv.residual = 1.0 / *b.residual;
        return a * inv;
    }
};

/* Exact equality of the symbolic parts; residuals compared with a relative tolerance. */
inline bool same_value(special_value const & a, special_value const & b, double rel_tol)
{
    if (a.exact() && b.exact())
        return a.mantissa == b.mantissa && a.log_exponents == b.log_exponents;
    double x = a.to_double();
    double y = b.to_double();
    return std::fabs(x - y) <= rel_tol * std::fmax(1.0, std::fabs(y));
}

} // namespace weilzeta
