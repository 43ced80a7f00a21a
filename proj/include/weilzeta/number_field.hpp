#pragma once

// Arithmetic invariants (r1, r2, h, R, w, disc) of number fields: computed
// from scratch for quadratic fields, loaded from a key=value file otherwise.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta {

struct number_field_invariants {
    int r1 = 1;
    int r2 = 0;
    std::int64_t h = 1;
    double regulator = 1.0; // natural-log units; 1 when the unit rank is 0
    std::int64_t w = 2;
    std::optional<std::int64_t> disc = 1; // fundamental discriminant, 1 for Q

    int degree() const { return r1 + 2 * r2; }
    int unit_rank() const { return r1 + r2 - 1; }
    int archimedean_places() const { return r1 + r2; }

    bool operator==(number_field_invariants const &) const = default;
};

/* Throws input_error naming the first violated invariant. */
inline void validate(number_field_invariants const & inv)
{
    if (inv.r1 < 0 || inv.r2 < 0 || inv.r1 + inv.r2 < 1)
        throw input_error("invariants: need r1, r2 >= 0 and r1 + r2 >= 1");
    if (inv.h < 1)
        throw input_error("invariants: class number h must be >= 1");
    if (inv.w < 1)
        throw input_error("invariants: w must be >= 1");
    if (inv.w % 2 != 0)
        throw input_error("invariants: w must be even (-1 is a root of unity)");
    if (!(inv.regulator > 0) || !std::isfinite(inv.regulator))
        throw input_error("invariants: regulator R must be a positive finite number");
    if (inv.r1 > 0 && inv.w != 2)
        throw input_error("invariants: a field with a real place has w = 2");
    if (inv.disc && inv.degree() <= 2) {
        std::int64_t D = *inv.disc;
        bool ok = (inv.degree() == 1 && D == 1) || (inv.degree() == 2 && inv.r1 == 2 && D > 1)
                  || (inv.degree() == 2 && inv.r2 == 1 && D < 0);
        if (!ok)
            throw input_error("invariants: signature (r1, r2) does not match disc");
        std::int64_t expected_w = D == -3 ? 6 : D == -4 ? 4 : 2;
        if (inv.w != expected_w)
            throw input_error("invariants: w = " + std::to_string(inv.w) + " but a field of disc "
                              + std::to_string(D) + " has w = " + std::to_string(expected_w));
    }
}

/* Removes square factors while keeping the sign. */
inline std::int64_t squarefree_part(std::int64_t d)
{
    if (d == 0)
        throw input_error("squarefree part of 0");
    std::int64_t sign = d < 0 ? -1 : 1;
    std::int64_t n = d < 0 ? -d : d;
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2)
            out *= p;
    }
    return sign * out * n;
}

inline bool is_squarefree(std::int64_t n)
{
    n = n < 0 ? -n : n;
    if (n == 0)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
        if (n % p == 0)
            n /= p;
    }
    return true;
}

inline bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 0 || D == 1)
        return false;
    if (mod_pos(D, 4) == 1)
        return is_squarefree(D);
    if (mod_pos(D, 4) != 0)
        return false;
    std::int64_t m = D / 4;
    return (mod_pos(m, 4) == 2 || mod_pos(m, 4) == 3) && is_squarefree(m);
}

/* Discriminant of Q(sqrt(d)). */
inline std::int64_t fundamental_discriminant(std::int64_t d)
{
    if (is_perfect_square(d))
        throw input_error("fundamental_discriminant: " + std::to_string(d)
                          + " is a perfect square (no quadratic field)");
    std::int64_t m = squarefree_part(d);
    if (m == 1)
        throw input_error("fundamental_discriminant: squarefree part is 1");
    return mod_pos(m, 4) == 1 ? m : 4 * m;
}

struct binary_form {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

    auto operator<=>(binary_form const &) const = default;
};

inline void require_fundamental(std::int64_t D, char const * who)
{
    if (!is_fundamental_discriminant(D))
        throw input_error(std::string(who) + ": " + std::to_string(D)
                          + " is not a fundamental discriminant");
}

/*
 * Reduced primitive positive definite forms of discriminant D < 0:
 * |b| <= a <= c, and b >= 0 when |b| = a or a = c.
 */
inline std::vector<binary_form> reduced_forms_imaginary(std::int64_t D)
{
    if (D >= 0)
        throw input_error("reduced_forms_imaginary: discriminant must be negative");
    require_fundamental(D, "reduced_forms_imaginary");
    std::vector<binary_form> forms;
    // a <= sqrt(|D|/3)
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            binary_form f{a, b, c};
            if (f.is_primitive())
                forms.push_back(f);
        }
    return forms;
}

inline std::int64_t class_number_imaginary(std::int64_t D)
{
    return static_cast<std::int64_t>(reduced_forms_imaginary(D).size());
}

struct quadratic_unit {
    big_int x; // unit = (x + y sqrt(D)) / 2
    big_int y;
    int norm = 1;
    double regulator = 0.0;
};

/*
 * Fundamental unit of the real quadratic order of discriminant D > 0 from
 * the continued fraction of omega = (D mod 2 + sqrt(D)) / 2. With complete
 * quotients (P_k + sqrt(D)) / Q_k, the first k >= 1 with Q_k = Q_0 = 2
 * gives the unit p_{k-1} - q_{k-1} * conj(omega) of norm (-1)^k.
 */
inline quadratic_unit fundamental_unit_real(std::int64_t D)
{
    if (D <= 0)
        throw input_error("fundamental_unit_real: discriminant must be positive");
    require_fundamental(D, "fundamental_unit_real");

    std::int64_t const s = isqrt(D);
    std::int64_t const offset = D % 2;
    std::int64_t P = offset;
    std::int64_t Q = 2;
    // convergents: p_{-2} = 0, p_{-1} = 1; q_{-2} = 1, q_{-1} = 0
    big_int p_prev = 0, p_cur = 1;
    big_int q_prev = 1, q_cur = 0;

    std::int64_t const bound = 4 * D + 16;
    for (std::int64_t k = 0; k < bound; ++k) {
        // floor((P + sqrt(D)) / Q); no integer lies strictly between P + s and P + sqrt(D)
        std::int64_t a = Q > 0 ? floor_div(P + s, Q) : -(floor_div(P + s, -Q) + 1);
        big_int p_next = a * p_cur + p_prev;
        big_int q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;

        std::int64_t P_next = a * Q - P;
        std::int64_t Q_next = (D - P_next * P_next) / Q;
        P = P_next;
        Q = Q_next;
        if (Q == 2) {
            // unit = p - q * (offset - sqrt(D)) / 2
            quadratic_unit u;
            u.x = 2 * p_cur - q_cur * offset;
            u.y = q_cur;
            big_int n = u.x * u.x - D * u.y * u.y;
            if (n == 4)
                u.norm = 1;
            else if (n == -4)
                u.norm = -1;
            else
                throw consistency_error("fundamental_unit_real: norm check failed");
            // ln((x + y sqrt D)/2), scaled to stay inside double range
            auto bits = static_cast<long>(boost::multiprecision::msb(u.x > u.y ? u.x : u.y));
            long shift = bits > 60 ? bits - 60 : 0;
            double xs = big_int(u.x >> shift).convert_to<double>();
            double ys = big_int(u.y >> shift).convert_to<double>();
            u.regulator = std::log(xs + ys * std::sqrt(static_cast<double>(D)))
                          + static_cast<double>(shift) * std::log(2.0) - std::log(2.0);
            return u;
        }
    }
    throw consistency_error("fundamental_unit_real: period bound exceeded for D = "
                            + std::to_string(D));
}

/*
 * Reduced indefinite forms of discriminant D > 0:
 * 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
 */
inline bool is_reduced_indefinite(binary_form const & f, std::int64_t D)
{
    std::int64_t const a = f.a < 0 ? -f.a : f.a;
    if (f.b <= 0 || f.b * f.b >= D)
        return false;
    if ((2 * a + f.b) * (2 * a + f.b) <= D)
        return false;
    std::int64_t t = 2 * a - f.b;
    return t <= 0 || t * t < D;
}

inline std::vector<binary_form> reduced_forms_real(std::int64_t D)
{
    if (D <= 0)
        throw input_error("reduced_forms_real: discriminant must be positive");
    require_fundamental(D, "reduced_forms_real");
    std::vector<binary_form> forms;
    std::int64_t const s = isqrt(D);
    for (std::int64_t b = 1; b <= s; ++b) {
        if ((b - D) % 2 != 0)
            continue;
        std::int64_t ac = (b * b - D) / 4; // negative
        for (std::int64_t a = 1; a <= -ac; ++a) {
            if (ac % a != 0)
                continue;
            for (std::int64_t sa : {a, -a}) {
                binary_form f{sa, b, ac / sa};
                if (is_reduced_indefinite(f, D) && f.is_primitive())
                    forms.push_back(f);
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

/* One step of the reduction cycle: (a, b, c) -> (c, r, (r^2 - D) / 4c). */
inline binary_form rho_indefinite(binary_form const & f, std::int64_t D)
{
    std::int64_t const c = f.c;
    std::int64_t const ac = c < 0 ? -c : c;
    std::int64_t const m = 2 * ac;
    std::int64_t const target = mod_pos(-f.b, m);
    std::int64_t r;
    if (ac * ac > D) {
        // -|c| < r <= |c|
        r = target;
        if (r > ac)
            r -= m;
    } else {
        // largest r < sqrt(D), i.e. r <= floor(sqrt(D)), with r = -b mod 2|c|
        std::int64_t const s = isqrt(D);
        r = s - mod_pos(s - target, m);
    }
    return binary_form{c, r, (r * r - D) / (4 * c)};
}

inline std::vector<std::vector<binary_form>> form_cycles_real(std::int64_t D)
{
    auto forms = reduced_forms_real(D);
    std::set<binary_form> seen;
    std::vector<std::vector<binary_form>> cycles;
    for (auto const & start : forms) {
        if (seen.count(start))
            continue;
        std::vector<binary_form> cycle;
        binary_form f = start;
        do {
            if (!is_reduced_indefinite(f, D))
                throw consistency_error("form_cycles_real: rho left the reduced set");
            seen.insert(f);
            cycle.push_back(f);
            f = rho_indefinite(f, D);
            if (cycle.size() > forms.size())
                throw consistency_error("form_cycles_real: cycle did not close");
        } while (f != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

/* Narrow class number: number of cycles of reduced forms. */
inline std::int64_t narrow_class_number_real(std::int64_t D)
{
    return static_cast<std::int64_t>(form_cycles_real(D).size());
}

inline std::int64_t class_number_real(std::int64_t D, int unit_norm)
{
    std::int64_t hp = narrow_class_number_real(D);
    if (unit_norm == -1)
        return hp;
    if (hp % 2 != 0)
        throw consistency_error("class_number_real: odd narrow class number with a norm +1 unit");
    return hp / 2;
}

inline number_field_invariants rational_field_invariants()
{
    return number_field_invariants{1, 0, 1, 1.0, 2, 1};
}

inline number_field_invariants quad_invariants(std::int64_t D)
{
    if (D == 1)
        return rational_field_invariants();
    require_fundamental(D, "quad_invariants");
    number_field_invariants inv;
    inv.disc = D;
    if (D < 0) {
        inv.r1 = 0;
        inv.r2 = 1;
        inv.h = class_number_imaginary(D);
        inv.regulator = 1.0;
        inv.w = D == -3 ? 6 : D == -4 ? 4 : 2;
    } else {
        auto unit = fundamental_unit_real(D);
        inv.r1 = 2;
        inv.r2 = 0;
        inv.h = class_number_real(D, unit.norm);
        inv.regulator = unit.regulator;
        inv.w = 2;
    }
    return inv;
}

namespace detail {

inline std::string trim(std::string_view s)
{
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

/* Parses "key=value" lines ('#' comments, blank lines ignored) into key -> (value, line). */
inline std::map<std::string, std::pair<std::string, int>> parse_key_values(std::string_view text)
{
    std::map<std::string, std::pair<std::string, int>> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("line " + std::to_string(line_no) + ": expected key=value, got '"
                              + line + "'");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (out.count(key))
            throw input_error("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        out[key] = {value, line_no};
    }
    return out;
}

inline std::int64_t parse_int_field(std::string const & key, std::pair<std::string, int> const & v)
{
    try {
        std::size_t used = 0;
        long long x = std::stoll(v.first, &used);
        if (used != v.first.size())
            throw std::invalid_argument(v.first);
        return x;
    } catch (std::exception const &) {
        throw input_error("line " + std::to_string(v.second) + ": unparsable number '" + v.first
                          + "' for key '" + key + "'");
    }
}

inline double parse_real_field(std::string const & key, std::pair<std::string, int> const & v)
{
    try {
        std::size_t used = 0;
        double x = std::stod(v.first, &used);
        if (used != v.first.size())
            throw std::invalid_argument(v.first);
        return x;
    } catch (std::exception const &) {
        throw input_error("line " + std::to_string(v.second) + ": unparsable number '" + v.first
                          + "' for key '" + key + "'");
    }
}

} // namespace detail

inline number_field_invariants parse_invariants(std::string_view text)
{
    auto kv = detail::parse_key_values(text);
    static constexpr char const * required[] = {"r1", "r2", "h", "R", "w"};
    for (char const * key : required)
        if (!kv.count(key))
            throw input_error(std::string("invariants: missing key '") + key + "'");
    for (auto const & [key, v] : kv)
        if (key != "r1" && key != "r2" && key != "h" && key != "R" && key != "w" && key != "disc")
            throw input_error("line " + std::to_string(v.second) + ": unknown key '" + key + "'");

    auto line_of = [&](char const * key) { return std::to_string(kv.at(key).second); };
    number_field_invariants inv;
    inv.r1 = static_cast<int>(detail::parse_int_field("r1", kv.at("r1")));
    inv.r2 = static_cast<int>(detail::parse_int_field("r2", kv.at("r2")));
    inv.h = detail::parse_int_field("h", kv.at("h"));
    inv.regulator = detail::parse_real_field("R", kv.at("R"));
    inv.w = detail::parse_int_field("w", kv.at("w"));
    inv.disc = kv.count("disc") ? std::optional(detail::parse_int_field("disc", kv.at("disc")))
                                : std::nullopt;

    if (inv.r1 < 0)
        throw input_error("line " + line_of("r1") + ": r1 must be >= 0");
    if (inv.r2 < 0)
        throw input_error("line " + line_of("r2") + ": r2 must be >= 0");
    if (inv.h < 1)
        throw input_error("line " + line_of("h") + ": h must be >= 1");
    if (inv.w < 1)
        throw input_error("line " + line_of("w") + ": w must be >= 1");
    if (!(inv.regulator > 0))
        throw input_error("line " + line_of("R") + ": R must be > 0");
    if (inv.disc && inv.degree() == 2 && !is_fundamental_discriminant(*inv.disc))
        throw input_error("line " + line_of("disc") + ": disc is not a fundamental discriminant");
    validate(inv);
    return inv;
}

inline number_field_invariants load_invariants(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read invariants file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_invariants(buf.str());
}

} // namespace weilzeta
