#pragma once

// Analytic side at s = 0 for quadratic fields: zeta_F = zeta * L(s, chi_D),
// with L(0, chi) as an exact finite sum and L'(0, chi) through Lerch's
// formula zeta_H'(0, x) = ln Gamma(x) - ln(2 pi) / 2.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "weilzeta/arith.hpp"
#include "weilzeta/number_field.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

/* Jacobi symbol (a / n) for odd n > 0. */
inline int jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        throw std::domain_error("jacobi: modulus must be odd and positive");
    a = mod_pos(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/* Kronecker symbol (D / n). */
inline int kronecker(std::int64_t D, std::int64_t n)
{
    if (n == 0)
        return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0)
            result = -1;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (D % 2 == 0)
            return 0;
        std::int64_t r = mod_pos(D, 8);
        if ((r == 3 || r == 5) && (twos % 2 == 1))
            result = -result;
    }
    return result * jacobi(D, n);
}

/* L(0, chi_D) = sum_{a=1}^{|D|-1} chi(a) (1/2 - a/|D|); zero for D > 0. */
inline rational l_at_0(std::int64_t D)
{
    require_fundamental(D, "l_at_0");
    std::int64_t const m = D < 0 ? -D : D;
    rational sum = 0;
    for (std::int64_t a = 1; a < m; ++a) {
        int chi = kronecker(D, a);
        if (chi != 0)
            sum += chi * (rational(1, 2) - rational(a, m));
    }
    return sum;
}

inline double log_gamma(double x)
{
    if (!(x > 0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

/* L'(0, chi_D) = sum_{a=1}^{D-1} chi(a) ln Gamma(a/D) for an even character. */
inline double l_prime_at_0(std::int64_t D)
{
    require_fundamental(D, "l_prime_at_0");
    if (D < 0)
        throw input_error("l_prime_at_0: only even characters (D > 0) are supported");
    long double sum = 0;
    for (std::int64_t a = 1; a < D; ++a) {
        int chi = kronecker(D, a);
        if (chi != 0)
            sum += chi * static_cast<long double>(log_gamma(static_cast<double>(a) / static_cast<double>(D)));
    }
    return static_cast<double>(sum);
}

/*
 * Leading term of zeta_F at s = 0 for F = Q or quadratic, from zeta(0) = -1/2
 * and the order of vanishing of L(s, chi_D). Throws unsupported_error when no
 * analytic route exists for the given invariants.
 */
inline special_value dedekind_leading_at_0(number_field_invariants const & inv)
{
    if (!inv.disc)
        throw unsupported_error("analytic side unavailable: no discriminant given");
    std::int64_t const D = *inv.disc;
    special_value v;
    if (D == 1 && inv.degree() == 1) {
        v.ord = 0;
        v.mantissa = rational(-1, 2);
        return v;
    }
    if (inv.degree() != 2 || !is_fundamental_discriminant(D))
        throw unsupported_error("analytic side unavailable: field is not Q or quadratic");

    rational l0 = l_at_0(D);
    if (l0 != 0) {
        v.ord = 0;
        v.mantissa = -l0 / 2;
        return v;
    }
    double l1 = l_prime_at_0(D);
    if (std::fabs(l1) < 1e-12)
        throw consistency_error("dedekind_leading_at_0: L'(0) vanishes numerically");
    v.ord = 1;
    v.mantissa = rational(-1, 2);
    v.residual = l1;
    return v;
}

} // namespace weilzeta
