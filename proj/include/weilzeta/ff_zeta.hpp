#pragma once

// Zeta functions of P^n and of hyperelliptic curves y^2 = f(x) over finite
// fields, as rational functions in t = q^-s, and their leading term at s = 0.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "weilzeta/arith.hpp"
#include "weilzeta/fgab.hpp"
#include "weilzeta/special_value.hpp"
#include "weilzeta/weil_tables.hpp"

namespace weilzeta {

inline bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* (p, k) with q = p^k, or nullopt when q is not a prime power. */
inline std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        return std::pair{q, 1};
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return std::nullopt;
    return std::pair{p, k};
}

namespace fp {

/* Polynomials over F_p, coefficients low to high, no trailing zeros. */
using poly = std::vector<std::int64_t>;

inline void trim(poly & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int degree(poly const & a)
{
    return static_cast<int>(a.size()) - 1;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1 % p;
    base = mod_pos(base, p);
    while (e > 0) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p)
{
    a = mod_pos(a, p);
    if (a == 0)
        throw std::domain_error("fp::inverse of zero");
    return pow_mod(a, p - 2, p);
}

inline poly reduce(poly a, std::int64_t p)
{
    for (auto & c : a)
        c = mod_pos(c, p);
    trim(a);
    return a;
}

inline poly sub(poly a, poly const & b, std::int64_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = mod_pos(a[i] - b[i], p);
    trim(a);
    return a;
}

inline poly mul(poly const & a, poly const & b, std::int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

/* a mod m, m nonzero */
inline poly mod(poly a, poly const & m, std::int64_t p)
{
    trim(a);
    std::int64_t const lead_inv = inverse(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t coef = a.back() * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_pos(a[shift + i] - coef * m[i], p);
        trim(a);
    }
    return a;
}

inline poly mulmod(poly const & a, poly const & b, poly const & m, std::int64_t p)
{
    return mod(mul(a, b, p), m, p);
}

inline poly powmod(poly base, std::int64_t e, poly const & m, std::int64_t p)
{
    poly r = mod(poly{1}, m, p);
    base = mod(base, m, p);
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline poly gcd(poly a, poly b, std::int64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inverse(a.back(), p);
        for (auto & c : a)
            c = c * inv % p;
    }
    return a;
}

inline poly derivative(poly const & a, std::int64_t p)
{
    poly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(static_cast<std::int64_t>(i) % p * a[i] % p);
    trim(d);
    return d;
}

/*
 * f of degree k is irreducible over F_p iff x^(p^k) = x mod f and
 * gcd(x^(p^j) - x, f) = 1 for every proper divisor j of k.
 */
inline bool is_irreducible(poly f, std::int64_t p)
{
    f = reduce(std::move(f), p);
    int const k = degree(f);
    if (k < 1)
        return false;
    if (k == 1)
        return true;
    poly const x{0, 1};
    std::vector<poly> frob(static_cast<std::size_t>(k) + 1);
    frob[0] = mod(x, f, p);
    for (int j = 1; j <= k; ++j)
        frob[static_cast<std::size_t>(j)] = powmod(frob[static_cast<std::size_t>(j) - 1], p, f, p);
    if (frob[static_cast<std::size_t>(k)] != frob[0])
        return false;
    for (int j = 1; j < k; ++j) {
        if (k % j != 0)
            continue;
        poly g = gcd(sub(frob[static_cast<std::size_t>(j)], x, p), f, p);
        if (degree(g) > 0)
            return false;
    }
    return true;
}

} // namespace fp

/*
 * F_q, q = p^k <= 2^20, as F_p[x] / (modulus) with the lexicographically
 * smallest monic irreducible modulus. Elements are indices sum c_i p^i of
 * their coefficient vectors; multiplication goes through log tables.
 */
class finite_field
{
    public:

    using element = std::uint32_t;
    static constexpr std::int64_t max_order = std::int64_t{1} << 20;

    finite_field(std::int64_t p, int k) : p_(p), k_(k)
    {
        if (!is_prime(p))
            throw input_error("make_field: p = " + std::to_string(p) + " is not prime");
        if (k < 1)
            throw input_error("make_field: k must be >= 1");
        q_ = 1;
        for (int i = 0; i < k; ++i) {
            q_ *= p;
            if (q_ > max_order)
                throw size_bound_error("make_field: p^k exceeds 2^20");
        }
        find_modulus();
        build_tables();
    }

    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::int64_t order() const { return q_; }
    fp::poly const & modulus() const { return modulus_; }

    static constexpr element zero() { return 0; }
    static constexpr element one() { return 1; }

    element from_integer(std::int64_t c) const { return static_cast<element>(mod_pos(c, p_)); }

    element add(element a, element b) const
    {
        element out = 0;
        element scale = 1;
        auto const p = static_cast<element>(p_);
        for (int i = 0; i < k_ && (a || b); ++i) {
            element s = (a % p + b % p) % p;
            out += s * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return out;
    }

    element mul(element a, element b) const
    {
        if (a == 0 || b == 0)
            return 0;
        auto const n = static_cast<std::uint64_t>(q_ - 1);
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n];
    }

    /* 0 for zero, 1 for a nonzero square, -1 otherwise. */
    int quadratic_character(element a) const
    {
        if (a == 0)
            return 0;
        if (p_ == 2)
            return 1;
        return log_[a] % 2 == 0 ? 1 : -1;
    }

    fp::poly coefficients(element a) const
    {
        fp::poly c;
        for (int i = 0; i < k_; ++i) {
            c.push_back(static_cast<std::int64_t>(a % static_cast<element>(p_)));
            a /= static_cast<element>(p_);
        }
        fp::trim(c);
        return c;
    }

    element from_coefficients(fp::poly const & c) const
    {
        element out = 0;
        element scale = 1;
        for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(k_); ++i) {
            out += static_cast<element>(mod_pos(c[i], p_)) * scale;
            scale *= static_cast<element>(p_);
        }
        return out;
    }

    /* Horner evaluation of an integer polynomial (low to high) at x. */
    element evaluate(std::vector<std::int64_t> const & coeffs, element x) const
    {
        element v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            v = add(mul(v, x), from_integer(*it));
        return v;
    }

    private:

    void find_modulus()
    {
        std::int64_t count = q_; // monic polys of degree k: p^k choices of lower coefficients
        for (std::int64_t idx = 0; idx < count; ++idx) {
            fp::poly f(static_cast<std::size_t>(k_) + 1, 0);
            std::int64_t rest = idx;
            for (int i = 0; i < k_; ++i) {
                f[static_cast<std::size_t>(i)] = rest % p_;
                rest /= p_;
            }
            f[static_cast<std::size_t>(k_)] = 1;
            if (fp::is_irreducible(f, p_)) {
                modulus_ = f;
                return;
            }
        }
        throw consistency_error("make_field: no irreducible polynomial found");
    }

    void build_tables()
    {
        auto const n = static_cast<std::size_t>(q_ - 1);
        exp_.assign(n, 0);
        log_.assign(static_cast<std::size_t>(q_), 0);
        for (std::int64_t g = 1; g < q_; ++g) {
            fp::poly gp = coefficients(static_cast<element>(g));
            fp::poly cur{1};
            bool generator = true;
            for (std::size_t i = 0; i < n; ++i) {
                exp_[i] = from_coefficients(cur);
                cur = fp::mulmod(cur, gp, modulus_, p_);
                if (cur == fp::poly{1} && i + 1 < n) {
                    generator = false;
                    break;
                }
            }
            if (generator) {
                for (std::size_t i = 0; i < n; ++i)
                    log_[exp_[i]] = static_cast<element>(i);
                return;
            }
        }
        throw consistency_error("make_field: no multiplicative generator found");
    }

    std::int64_t p_;
    int k_;
    std::int64_t q_ = 1;
    fp::poly modulus_;
    std::vector<element> exp_;
    std::vector<element> log_;
};

inline finite_field make_field(std::int64_t p, int k)
{
    return finite_field(p, k);
}

/* Integer polynomial such as "x^3+x", "2x^5 - 3*x + 1"; coefficients low to high. */
inline std::vector<std::int64_t> parse_int_polynomial(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw input_error("empty polynomial");
    auto fail = [&](std::string const & why) {
        return input_error("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    std::map<int, std::int64_t> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        bool has_coef = i > start;
        std::int64_t coef = has_coef ? std::stoll(s.substr(start, i - start)) : 1;
        if (i < s.size() && s[i] == '*') {
            if (!has_coef)
                throw fail("'*' without a coefficient");
            ++i;
            if (i >= s.size() || s[i] != 'x')
                throw fail("expected 'x' after '*'");
        }
        int power = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i == ps)
                    throw fail("missing exponent after '^'");
                power = std::stoi(s.substr(ps, i - ps));
            }
        } else if (!has_coef) {
            throw fail("expected a coefficient or 'x' at position " + std::to_string(i));
        }
        terms[power] += sign * coef;
    }
    int top = terms.rbegin()->first;
    std::vector<std::int64_t> out(static_cast<std::size_t>(top) + 1, 0);
    for (auto const & [e, c] : terms)
        out[static_cast<std::size_t>(e)] = c;
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

/* Smooth projective model of y^2 = f(x), deg f odd, over F_p. */
struct curve_spec {
    std::int64_t p = 3;
    std::vector<std::int64_t> f; // integer coefficients, low to high

    int degree() const { return static_cast<int>(f.size()) - 1; }
    int genus() const { return (degree() - 1) / 2; }

    std::string describe() const
    {
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            std::int64_t c = f[static_cast<std::size_t>(e)];
            if (c == 0)
                continue;
            std::int64_t a = c < 0 ? -c : c;
            out += c < 0 ? "-" : (out.empty() ? "" : "+");
            if (a != 1 || e == 0)
                out += std::to_string(a);
            if (e >= 1)
                out += "x";
            if (e >= 2)
                out += "^" + std::to_string(e);
        }
        return "y^2=" + out + " over F_" + std::to_string(p);
    }
};

inline curve_spec make_curve(std::int64_t p, std::vector<std::int64_t> f)
{
    if (!is_prime(p) || p == 2)
        throw input_error("curve: p = " + std::to_string(p) + " must be an odd prime");
    while (f.size() > 1 && f.back() == 0)
        f.pop_back();
    int const deg = static_cast<int>(f.size()) - 1;
    if (deg != 3 && deg != 5 && deg != 7)
        throw input_error("curve: deg f must be 3, 5 or 7 (got " + std::to_string(deg) + ")");
    if (mod_pos(f.back(), p) == 0)
        throw input_error("curve: leading coefficient of f vanishes mod p");
    fp::poly fbar = fp::reduce(f, p);
    fp::poly g = fp::gcd(fbar, fp::derivative(fbar, p), p);
    if (fp::degree(g) > 0)
        throw input_error("curve: singular, f is not squarefree mod " + std::to_string(p));
    return curve_spec{p, std::move(f)};
}

inline constexpr std::int64_t count_bound = std::int64_t{1} << 20;
inline constexpr std::int64_t verify_bound = std::int64_t{1} << 16;

/* p^m, or nullopt when it exceeds the bound. */
inline std::optional<std::int64_t> bounded_power(std::int64_t p, int m, std::int64_t bound)
{
    std::int64_t r = 1;
    for (int i = 0; i < m; ++i) {
        r *= p;
        if (r > bound)
            return std::nullopt;
    }
    return r;
}

/*
 * #C(F_{p^m}): affine solutions of y^2 = f(x) plus the single point at
 * infinity (deg f odd). The x-range may be split across workers.
 */
inline std::int64_t count_points(curve_spec const & c, int m, unsigned workers = 1)
{
    if (m < 1)
        throw input_error("count_points: m must be >= 1");
    if (!bounded_power(c.p, m, count_bound))
        throw size_bound_error("count_points: p^m exceeds 2^20");
    finite_field const field(c.p, m);
    std::int64_t const q = field.order();
    workers = std::max(1U, std::min<unsigned>(workers, 64U));

    auto count_range = [&](std::int64_t lo, std::int64_t hi) {
        std::int64_t n = 0;
        for (std::int64_t x = lo; x < hi; ++x)
            n += 1 + field.quadratic_character(field.evaluate(c.f, static_cast<finite_field::element>(x)));
        return n;
    };

    std::int64_t affine = 0;
    if (workers == 1) {
        affine = count_range(0, q);
    } else {
        std::vector<std::int64_t> partial(workers, 0);
        std::vector<std::thread> threads;
        std::int64_t const chunk = (q + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::int64_t lo = std::min(q, chunk * w);
            std::int64_t hi = std::min(q, lo + chunk);
            threads.emplace_back([&, w, lo, hi] { partial[w] = count_range(lo, hi); });
        }
        for (auto & t : threads)
            t.join();
        for (auto v : partial)
            affine += v;
    }
    return affine + 1;
}

/* #P^n(F_{q^m}) = (q^{m(n+1)} - 1) / (q^m - 1) */
inline big_int count_points_pn(std::int64_t q, int n, int m)
{
    if (m < 1 || n < 0)
        throw input_error("count_points_pn: need m >= 1 and n >= 0");
    big_int qm = ipow(big_int(q), static_cast<unsigned>(m));
    return (ipow(qm, static_cast<unsigned>(n + 1)) - 1) / (qm - 1);
}

/* Integer polynomials in t, low to high. */
using int_poly = std::vector<big_int>;

inline big_int eval_at_one(int_poly const & f)
{
    big_int s = 0;
    for (auto const & c : f)
        s += c;
    return s;
}

/* f / (1 - t), assuming f(1) = 0. */
inline int_poly divide_by_one_minus_t(int_poly const & f)
{
    if (f.size() < 2)
        throw consistency_error("divide_by_one_minus_t: degree too small");
    // f = (t - 1) h
    std::size_t const n = f.size() - 1;
    int_poly h(n);
    h[n - 1] = f[n];
    for (std::size_t i = n - 1; i >= 1; --i)
        h[i - 1] = f[i] + h[i];
    if (f[0] + h[0] != 0)
        throw consistency_error("divide_by_one_minus_t: f(1) != 0");
    for (auto & c : h)
        c = -c;
    return h;
}

struct zeta_rational {
    std::vector<int_poly> numerator_factors;
    std::vector<int_poly> denominator_factors;

    bool operator==(zeta_rational const &) const = default;
};

/* 1 / ((1 - t)(1 - q t) ... (1 - q^n t)) */
inline zeta_rational zeta_pn(std::int64_t q, int n)
{
    if (q < 2 || n < 0)
        throw input_error("zeta_pn: need q >= 2 and n >= 0");
    zeta_rational z;
    big_int qi = 1;
    for (int i = 0; i <= n; ++i) {
        z.denominator_factors.push_back(int_poly{1, -qi});
        qi *= q;
    }
    return z;
}

/* N_1..N_count re-derived from Z(t): N_m = m [t^m] log Z(t). */
inline std::vector<big_int> point_counts_from_zeta(zeta_rational const & z, int count)
{
    std::vector<big_int> out(static_cast<std::size_t>(count), 0);
    auto accumulate = [&](int_poly const & f, int sign) {
        if (f.empty() || f[0] != 1)
            throw consistency_error("point_counts_from_zeta: factor must satisfy f(0) = 1");
        // g = f'/f as a power series up to t^{count-1}
        std::vector<big_int> g(static_cast<std::size_t>(count), 0);
        for (int i = 0; i < count; ++i) {
            auto const ui = static_cast<std::size_t>(i);
            big_int v = (ui + 1 < f.size()) ? big_int(f[ui + 1] * (i + 1)) : big_int(0);
            for (std::size_t j = 1; j <= ui && j < f.size(); ++j)
                v -= f[j] * g[ui - j];
            g[ui] = v;
        }
        for (int m = 1; m <= count; ++m)
            out[static_cast<std::size_t>(m) - 1] += sign * g[static_cast<std::size_t>(m) - 1];
    };
    for (auto const & f : z.numerator_factors)
        accumulate(f, 1);
    for (auto const & f : z.denominator_factors)
        accumulate(f, -1);
    return out;
}

/* P(t) = q^g t^{2g} P(1/(q t)) as a polynomial identity. */
inline bool satisfies_functional_equation(int_poly const & P, std::int64_t q, int g)
{
    if (P.size() != static_cast<std::size_t>(2 * g) + 1)
        return false;
    for (int k = 0; k <= 2 * g; ++k) {
        big_int lhs = P[static_cast<std::size_t>(2 * g - k)] * ipow(big_int(q), static_cast<unsigned>(std::max(0, k - g)));
        big_int rhs = P[static_cast<std::size_t>(k)] * ipow(big_int(q), static_cast<unsigned>(std::max(0, g - k)));
        if (lhs != rhs)
            return false;
    }
    return true;
}

/*
 * P(t) of degree 2g from N_1..N_g: power sums s_m = q^m + 1 - N_m of the
 * Frobenius eigenvalues give c_1..c_g through Newton's identities, and the
 * functional equation gives c_{2g-k} = q^{g-k} c_k.
 */
inline int_poly numerator_from_counts(std::vector<std::int64_t> const & counts, std::int64_t q, int g)
{
    if (counts.size() < static_cast<std::size_t>(g))
        throw input_error("numerator_from_counts: need N_1..N_g");
    std::vector<big_int> s(static_cast<std::size_t>(g) + 1, 0);
    for (int m = 1; m <= g; ++m)
        s[static_cast<std::size_t>(m)] = ipow(big_int(q), static_cast<unsigned>(m)) + 1
                                         - counts[static_cast<std::size_t>(m) - 1];
    int_poly c(static_cast<std::size_t>(2 * g) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= g; ++k) {
        big_int acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += s[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
        if (acc % k != 0)
            throw consistency_error("zeta_curve: inconsistent point counts (Newton step not integral)");
        c[static_cast<std::size_t>(k)] = -acc / k;
    }
    for (int k = 0; k < g; ++k)
        c[static_cast<std::size_t>(2 * g - k)] = c[static_cast<std::size_t>(k)]
                                                 * ipow(big_int(q), static_cast<unsigned>(g - k));
    return c;
}

inline zeta_rational zeta_curve(curve_spec const & c, unsigned workers = 1)
{
    int const g = c.genus();
    if (!bounded_power(c.p, g, count_bound))
        throw size_bound_error("zeta_curve: p^g exceeds 2^20");
    std::vector<std::int64_t> counts;
    for (int m = 1; m <= g; ++m)
        counts.push_back(count_points(c, m, workers));
    zeta_rational z;
    z.numerator_factors.push_back(numerator_from_counts(counts, c.p, g));
    z.denominator_factors.push_back(int_poly{1, -1});
    z.denominator_factors.push_back(int_poly{1, -big_int(c.p)});
    return z;
}

/* zeta*(Y, 0) = c * (ln q)^ord, from Z(t) = (1 - t)^ord * G(t), c = G(1). */
struct ff_special_value {
    int ord = 0;
    rational c = 1;
    std::int64_t q = 2;

    /* (ln q)^ord = k^ord (ln p)^ord, folded into the symbolic form. */
    special_value canonical() const
    {
        auto pk = prime_power(q);
        if (!pk)
            throw input_error("ff_special_value: q is not a prime power");
        special_value v;
        v.ord = ord;
        v.mantissa = c * rpow(rational(pk->second), ord);
        if (ord != 0)
            v.log_exponents[pk->first] = ord;
        return v;
    }
};

inline ff_special_value special_value_s0(zeta_rational const & z, std::int64_t q)
{
    ff_special_value v;
    v.q = q;
    auto absorb = [&](int_poly f, int sign) {
        while (eval_at_one(f) == 0) {
            f = divide_by_one_minus_t(f);
            v.ord += sign;
        }
        if (sign > 0)
            v.c *= eval_at_one(f);
        else
            v.c /= eval_at_one(f);
    };
    for (auto const & f : z.numerator_factors)
        absorb(f, 1);
    for (auto const & f : z.denominator_factors)
        absorb(f, -1);
    return v;
}

/* P(1) = |Pic^0(C)(F_q)| */
inline big_int curve_class_number(zeta_rational const & z)
{
    big_int h = 1;
    for (auto const & f : z.numerator_factors)
        h *= eval_at_one(f);
    return h;
}

struct named_check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ff_verification {
    std::string object;
    std::int64_t q = 2;
    int ord_computed = 0;
    long long ord_predicted = 0;
    ff_special_value computed;
    rational predicted_abs = 1; // |c| predicted by the cohomological side
    std::optional<graded_table> table;
    std::vector<named_check> checks;

    bool pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](auto const & c) { return c.pass; });
    }
};

inline rational abs_rational(rational const & r)
{
    return r < 0 ? rational(-r) : r;
}

inline ff_verification verify_pn(std::int64_t q, int n)
{
    if (!prime_power(q))
        throw input_error("verify_pn: q = " + std::to_string(q) + " is not a prime power");
    ff_verification v;
    v.object = "P^" + std::to_string(n) + " over F_" + std::to_string(q);
    v.q = q;
    v.table = pn_fq_table(q, n);
    auto z = zeta_pn(q, n);
    v.computed = special_value_s0(z, q);
    v.ord_computed = v.computed.ord;
    v.ord_predicted = rank_weighted_euler(*v.table);
    v.predicted_abs = torsion_euler(*v.table);

    int const depth = 6;
    auto derived = point_counts_from_zeta(z, depth);
    bool counts_ok = true;
    for (int m = 1; m <= depth; ++m)
        counts_ok = counts_ok && derived[static_cast<std::size_t>(m) - 1] == count_points_pn(q, n, m);
    v.checks.push_back({"point counts from Z(t)", counts_ok, "m = 1.." + std::to_string(depth)});
    v.checks.push_back({"ord = rank_Z RGamma_W,c", v.ord_computed == v.ord_predicted,
                        std::to_string(v.ord_computed) + " vs " + std::to_string(v.ord_predicted)});
    v.checks.push_back({"|c| = torsion Euler characteristic", abs_rational(v.computed.c) == v.predicted_abs,
                        to_string(abs_rational(v.computed.c)) + " vs " + to_string(v.predicted_abs)});
    return v;
}

inline ff_verification verify_curve(curve_spec const & c, unsigned workers = 1)
{
    ff_verification v;
    v.object = c.describe();
    v.q = c.p;
    int const g = c.genus();
    auto z = zeta_curve(c, workers);
    int_poly const & P = z.numerator_factors.front();

    v.checks.push_back({"P(0) = 1", P[0] == 1, ""});
    v.checks.push_back({"functional equation", satisfies_functional_equation(P, c.p, g), ""});

    std::int64_t const n1 = count_points(c, 1, workers);
    big_int dev = big_int(n1 - c.p - 1);
    bool hasse = dev * dev <= big_int(4) * g * g * c.p;
    v.checks.push_back({"Hasse-Weil bound", hasse, "N_1 = " + std::to_string(n1)});

    std::vector<std::int64_t> brute;
    for (int m = 1; bounded_power(c.p, m, verify_bound); ++m)
        brute.push_back(m == 1 ? n1 : count_points(c, m, workers));
    auto derived = point_counts_from_zeta(z, static_cast<int>(brute.size()));
    bool counts_ok = true;
    for (std::size_t i = 0; i < brute.size(); ++i)
        counts_ok = counts_ok && derived[i] == brute[i];
    v.checks.push_back({"point counts from Z(t)", counts_ok, "m = 1.." + std::to_string(brute.size())});

    v.computed = special_value_s0(z, c.p);
    v.ord_computed = v.computed.ord;
    v.ord_predicted = -1;
    big_int const h = curve_class_number(z);
    v.predicted_abs = rational(h, c.p - 1);
    v.checks.push_back({"ord = -1", v.ord_computed == -1, std::to_string(v.ord_computed)});
    v.checks.push_back({"|c| (q - 1) = P(1)", abs_rational(v.computed.c) * (c.p - 1) == rational(h),
                        to_string(abs_rational(v.computed.c)) + " * " + std::to_string(c.p - 1) + " vs "
                            + h.str()});
    if (g == 1) {
        v.checks.push_back({"P(1) = N_1", h == n1, h.str() + " vs " + std::to_string(n1)});
    } else if (g == 2 && brute.size() >= 2) {
        // |J(F_q)| = (N_1^2 + N_2)/2 - q for genus 2
        big_int jac = (big_int(n1) * n1 + brute[1]) / 2 - c.p;
        v.checks.push_back({"P(1) = (N_1^2 + N_2)/2 - q", h == jac, h.str() + " vs " + jac.str()});
    }
    return v;
}

} // namespace weilzeta
