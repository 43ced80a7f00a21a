#include <gtest/gtest.h>

#include <random>
#include <set>

#include "weilzeta/ff_zeta.hpp"

using namespace weilzeta;

namespace {

// Schoolbook product of coefficient vectors reduced mod (modulus, p).
fp::poly slow_mulmod(fp::poly const & a, fp::poly const & b, fp::poly const & m, std::int64_t p)
{
    std::vector<std::int64_t> prod(a.size() + b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    std::size_t const k = m.size() - 1;
    for (std::size_t d = prod.size(); d-- > k;) {
        std::int64_t c = prod[d];
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * m[i]) % p + p) % p;
    }
    prod.resize(k);
    while (!prod.empty() && prod.back() == 0)
        prod.pop_back();
    return prod;
}

// No monic factor of degree 1..deg/2, by trial division over all candidates.
bool irreducible_by_search(fp::poly const & f, std::int64_t p)
{
    int const n = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= n / 2; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            fp::poly g(static_cast<std::size_t>(d) + 1);
            std::int64_t r = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = r % p;
                r /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (fp::mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// Y^2 = f(x) over F_{p^2} for p = 3 mod 4 with elements a + b i, i^2 = -1.
std::int64_t count_over_gaussian_field(curve_spec const & c)
{
    std::int64_t const p = c.p;
    using gf = std::pair<std::int64_t, std::int64_t>;
    auto mul = [p](gf x, gf y) {
        return gf{((x.first * y.first - x.second * y.second) % p + p) % p,
                  ((x.first * y.second + x.second * y.first) % p + p) % p};
    };
    std::map<gf, std::int64_t> squares;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            ++squares[mul({a, b}, {a, b})];
    std::int64_t n = 1;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b) {
            gf v{0, 0};
            for (auto it = c.f.rbegin(); it != c.f.rend(); ++it) {
                v = mul(v, {a, b});
                v.first = ((v.first + *it) % p + p) % p;
            }
            n += squares[v];
        }
    return n;
}

// Coefficients of exp(sum_m N_m t^m / m) up to t^count, in exact rationals.
std::vector<rational> exp_series(std::vector<big_int> const & counts)
{
    std::size_t const n = counts.size();
    std::vector<rational> e(n + 1, 0);
    e[0] = 1;
    // e' = e * L' with L' = sum N_m t^{m-1}
    for (std::size_t k = 1; k <= n; ++k) {
        rational acc = 0;
        for (std::size_t m = 1; m <= k; ++m)
            acc += rational(counts[m - 1]) * e[k - m];
        e[k] = acc / static_cast<long long>(k);
    }
    return e;
}

// Power series of P(t) / ((1 - t)(1 - q t)) up to t^count.
std::vector<rational> rational_function_series(int_poly const & P, std::int64_t q, std::size_t count)
{
    std::vector<rational> out(count + 1, 0);
    for (std::size_t k = 0; k <= count; ++k) {
        // [t^j] 1/((1-t)(1-qt)) = (q^{j+1} - 1)/(q - 1)
        for (std::size_t i = 0; i < P.size() && i <= k; ++i) {
            std::size_t j = k - i;
            big_int coef = (ipow(big_int(q), static_cast<unsigned>(j + 1)) - 1) / (q - 1);
            out[k] += rational(P[i] * coef);
        }
    }
    return out;
}

} // namespace

TEST(finite_field, modulus_is_smallest_irreducible)
{
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
        auto field = make_field(p, k);
        EXPECT_TRUE(irreducible_by_search(field.modulus(), p)) << p << "^" << k;
        // every monic polynomial listed before it is reducible
        std::int64_t idx_of_modulus = 0, scale = 1;
        for (int i = 0; i < k; ++i) {
            idx_of_modulus += field.modulus()[static_cast<std::size_t>(i)] * scale;
            scale *= p;
        }
        for (std::int64_t idx = 0; idx < idx_of_modulus; ++idx) {
            fp::poly f(static_cast<std::size_t>(k) + 1);
            std::int64_t r = idx;
            for (int i = 0; i < k; ++i) {
                f[static_cast<std::size_t>(i)] = r % p;
                r /= p;
            }
            f[static_cast<std::size_t>(k)] = 1;
            EXPECT_FALSE(irreducible_by_search(f, p));
        }
    }
}

TEST(finite_field, irreducibility_test_agrees_with_search)
{
    for (std::int64_t p : {2, 3, 5})
        for (int k = 1; k <= 4; ++k) {
            std::int64_t count = 1;
            for (int i = 0; i < k; ++i)
                count *= p;
            for (std::int64_t idx = 0; idx < count; ++idx) {
                fp::poly f(static_cast<std::size_t>(k) + 1);
                std::int64_t r = idx;
                for (int i = 0; i < k; ++i) {
                    f[static_cast<std::size_t>(i)] = r % p;
                    r /= p;
                }
                f[static_cast<std::size_t>(k)] = 1;
                EXPECT_EQ(fp::is_irreducible(f, p), irreducible_by_search(f, p));
            }
        }
}

TEST(finite_field, multiplication_matches_polynomial_arithmetic)
{
    for (auto [p, k] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}, {3, 1}, {13, 1}}) {
        auto field = make_field(p, k);
        for (std::int64_t a = 0; a < field.order(); ++a)
            for (std::int64_t b = 0; b < field.order(); ++b) {
                auto ea = static_cast<finite_field::element>(a), eb = static_cast<finite_field::element>(b);
                auto expected = slow_mulmod(field.coefficients(ea), field.coefficients(eb), field.modulus(), p);
                ASSERT_EQ(field.coefficients(field.mul(ea, eb)), expected);
            }
    }
}

TEST(finite_field, quadratic_character_counts_squares)
{
    for (auto [p, k] : {std::pair{3, 2}, {5, 2}, {7, 1}, {3, 4}, {11, 2}}) {
        auto field = make_field(p, k);
        std::set<finite_field::element> squares;
        for (std::int64_t a = 1; a < field.order(); ++a) {
            auto e = static_cast<finite_field::element>(a);
            squares.insert(field.mul(e, e));
        }
        for (std::int64_t a = 1; a < field.order(); ++a) {
            auto e = static_cast<finite_field::element>(a);
            EXPECT_EQ(field.quadratic_character(e), squares.count(e) ? 1 : -1);
        }
        EXPECT_EQ(field.quadratic_character(0), 0);
    }
}

TEST(finite_field, bounds_and_errors)
{
    EXPECT_THROW(make_field(4, 1), input_error);
    EXPECT_THROW(make_field(2, 21), size_bound_error);
    EXPECT_THROW(make_field(3, 0), input_error);
    EXPECT_NO_THROW(make_field(2, 20));
}

TEST(polynomial, parsing)
{
    EXPECT_EQ(parse_int_polynomial("x^3+x"), (std::vector<std::int64_t>{0, 1, 0, 1}));
    EXPECT_EQ(parse_int_polynomial(" 2x^5 - 3*x + 1 "), (std::vector<std::int64_t>{1, -3, 0, 0, 0, 2}));
    EXPECT_EQ(parse_int_polynomial("-x^3+x^3+x^2"), (std::vector<std::int64_t>{0, 0, 1}));
    EXPECT_EQ(parse_int_polynomial("7"), (std::vector<std::int64_t>{7}));
    EXPECT_THROW(parse_int_polynomial(""), input_error);
    EXPECT_THROW(parse_int_polynomial("x^"), input_error);
    EXPECT_THROW(parse_int_polynomial("x y"), input_error);
    EXPECT_THROW(parse_int_polynomial("*x"), input_error);
}

TEST(curve, construction_errors)
{
    EXPECT_THROW(make_curve(3, {0, 0, 0, 1}), input_error);        // x^3, singular
    EXPECT_THROW(make_curve(5, {1, 2, 1, 0, 0}), input_error);     // degree 2
    EXPECT_THROW(make_curve(2, {1, 1, 0, 1}), input_error);        // even characteristic
    EXPECT_THROW(make_curve(9, {1, 1, 0, 1}), input_error);        // not prime
    EXPECT_THROW(make_curve(3, {1, 1, 0, 3}), input_error);        // leading coefficient 0 mod 3
    EXPECT_THROW(make_curve(5, {0, 1, 2, 1}), input_error);        // x (x + 1)^2
    EXPECT_NO_THROW(make_curve(3, {0, 1, 0, 1}));
    EXPECT_EQ(make_curve(3, {0, 1, 0, 1}).describe(), "y^2=x^3+x over F_3");
}

TEST(curve, point_counts_match_direct_enumeration)
{
    std::mt19937_64 rng(41);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17}) {
        std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<std::int64_t> f{coeff(rng), coeff(rng), coeff(rng), 1};
            if (trial % 2)
                f = {coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng), 1};
            curve_spec c;
            try {
                c = make_curve(p, f);
            } catch (input_error const &) {
                continue;
            }
            std::int64_t brute = 1;
            for (std::int64_t x = 0; x < p; ++x)
                for (std::int64_t y = 0; y < p; ++y) {
                    std::int64_t v = 0;
                    for (auto it = f.rbegin(); it != f.rend(); ++it)
                        v = (v * x + *it) % p;
                    if ((y * y - v) % p == 0)
                        ++brute;
                }
            EXPECT_EQ(count_points(c, 1), brute) << c.describe();
            if (p % 4 == 3) {
                EXPECT_EQ(count_points(c, 2), count_over_gaussian_field(c)) << c.describe();
            }
        }
    }
}

TEST(curve, worker_count_does_not_change_counts)
{
    auto c = make_curve(13, {3, 1, 4, 1, 5, 1});
    for (int m = 1; m <= 4; ++m) {
        auto base = count_points(c, m, 1);
        for (unsigned w : {2u, 3u, 7u, 64u, 1000u})
            EXPECT_EQ(count_points(c, m, w), base) << m << " " << w;
    }
    EXPECT_EQ(zeta_curve(c, 1), zeta_curve(c, 5));
}

TEST(curve, zeta_series_reproduces_counts)
{
    for (auto const & c : {make_curve(3, {0, 1, 0, 1}), make_curve(5, {1, 1, 0, 0, 0, 1}),
                           make_curve(7, {2, 1, 0, 3, 0, 0, 0, 1}), make_curve(11, {1, 1, 0, 1})}) {
        auto z = zeta_curve(c);
        auto const & P = z.numerator_factors.front();
        std::vector<big_int> brute;
        for (int m = 1; bounded_power(c.p, m, verify_bound); ++m)
            brute.push_back(count_points(c, m));
        // exp(sum N_m t^m / m) against P(t) / ((1 - t)(1 - q t)) coefficientwise
        auto lhs = exp_series(brute);
        auto rhs = rational_function_series(P, c.p, brute.size());
        EXPECT_EQ(lhs, rhs) << c.describe();
        EXPECT_EQ(point_counts_from_zeta(z, static_cast<int>(brute.size())), brute) << c.describe();
    }
}

TEST(curve, functional_equation_and_hasse)
{
    std::mt19937_64 rng(3);
    for (std::int64_t p : {3, 5, 7, 11}) {
        std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::int64_t> f{coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng), 1};
            curve_spec c;
            try {
                c = make_curve(p, f);
            } catch (input_error const &) {
                continue;
            }
            auto P = zeta_curve(c).numerator_factors.front();
            EXPECT_TRUE(satisfies_functional_equation(P, p, 2));
            // |a_1| = |N_1 - q - 1| <= 2 g sqrt(q)
            big_int a1 = P[1];
            EXPECT_LE(a1 * a1, big_int(16) * p);
        }
    }
    EXPECT_FALSE(satisfies_functional_equation(int_poly{1, 2, 4}, 3, 1));
}

TEST(curve, elliptic_example)
{
    auto c = make_curve(3, {0, 1, 0, 1});
    auto z = zeta_curve(c);
    EXPECT_EQ(z.numerator_factors.front(), (int_poly{1, 0, 3}));
    auto v = special_value_s0(z, 3);
    EXPECT_EQ(v.ord, -1);
    EXPECT_EQ(abs_rational(v.c), 2);
    EXPECT_EQ(curve_class_number(z), 4);
    EXPECT_TRUE(verify_curve(c).pass());
}

TEST(curve, numerator_rejects_inconsistent_counts)
{
    // genus 2 over F_3 with N_1 = 4, N_2 = 11: s_1 = 0, s_2 = -1, c_2 = 1/2
    EXPECT_THROW(numerator_from_counts({4, 11}, 3, 2), consistency_error);
}

TEST(projective_space, counts_match_enumeration)
{
    for (std::int64_t q : {2, 3, 5, 7})
        for (int n = 0; n <= 3; ++n) {
            // nonzero vectors of F_q^{n+1} modulo scalars
            big_int vectors = ipow(big_int(q), static_cast<unsigned>(n + 1)) - 1;
            EXPECT_EQ(count_points_pn(q, n, 1), vectors / (q - 1));
        }
    auto z = zeta_pn(4, 2);
    auto counts = point_counts_from_zeta(z, 6);
    for (int m = 1; m <= 6; ++m)
        EXPECT_EQ(counts[static_cast<std::size_t>(m) - 1], count_points_pn(4, 2, m));
}

TEST(projective_space, special_value)
{
    auto v = special_value_s0(zeta_pn(2, 2), 2);
    EXPECT_EQ(v.ord, -1);
    EXPECT_EQ(v.c, rational(1, 3));
    auto canon = ff_special_value{-1, rational(1, 3), 8}.canonical();
    EXPECT_EQ(canon.mantissa, rational(1, 9)); // (ln 8)^-1 = (3 ln 2)^-1
    EXPECT_EQ(canon.log_exponents.at(2), -1);
    EXPECT_THROW(verify_pn(6, 1), input_error);
    EXPECT_TRUE(verify_pn(9, 3).pass());
}

TEST(prime_power, detection)
{
    EXPECT_EQ(prime_power(8), (std::pair<std::int64_t, int>{2, 3}));
    EXPECT_EQ(prime_power(49), (std::pair<std::int64_t, int>{7, 2}));
    EXPECT_FALSE(prime_power(12).has_value());
    EXPECT_FALSE(prime_power(1).has_value());
}

TEST(finite_field, small_moduli)
{
    EXPECT_EQ(make_field(2, 1).modulus(), (fp::poly{0, 1}));
    EXPECT_EQ(make_field(2, 2).modulus(), (fp::poly{1, 1, 1}));
    EXPECT_EQ(make_field(3, 2).modulus(), (fp::poly{1, 0, 1}));
}

TEST(curve, y2_x3_plus_1_over_f5)
{
    // x = 0, 2 give two points each, x = 4 gives one, x = 1, 3 none; plus infinity
    auto c = make_curve(5, {1, 0, 0, 1});
    EXPECT_EQ(count_points(c, 1), 6);
    auto z = zeta_curve(c);
    EXPECT_EQ(z.numerator_factors.front(), (int_poly{1, 0, 5}));
    EXPECT_EQ(curve_class_number(z), 6);
    EXPECT_EQ(count_points_pn(2, 2, 1), 7);
    auto point = special_value_s0(zeta_pn(7, 0), 7);
    EXPECT_EQ(point.ord, -1);
    EXPECT_EQ(abs_rational(point.c), 1);
}
