#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "weilzeta/number_field.hpp"

using namespace weilzeta;

namespace {

std::vector<std::int64_t> fundamental_discs(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        if (is_fundamental_discriminant(d))
            out.push_back(d);
    return out;
}

// Gauss reduction of a positive definite form by the S and T moves.
std::tuple<std::int64_t, std::int64_t, std::int64_t> gauss_reduce(std::int64_t a, std::int64_t b, std::int64_t c)
{
    for (;;) {
        if (b > a || b <= -a) {
            // translate b into (-a, a]
            std::int64_t k = (a - b) / (2 * a);
            if ((a - b) < 0 && (a - b) % (2 * a) != 0)
                --k;
            std::int64_t nb = b + 2 * a * k;
            c = a * k * k + b * k + c;
            b = nb;
        } else if (a > c) {
            std::swap(a, c);
            b = -b;
        } else {
            if (a == c && b < 0)
                b = -b;
            return {a, b, c};
        }
    }
}

std::int64_t class_number_by_reduction(std::int64_t D)
{
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> classes;
    for (std::int64_t a = 1; a <= -D; ++a)
        for (std::int64_t b = 0; b < 2 * a; ++b) {
            if ((b * b - D) % (4 * a) != 0)
                continue;
            std::int64_t c = (b * b - D) / (4 * a);
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            classes.insert(gauss_reduce(a, b, c));
        }
    return static_cast<std::int64_t>(classes.size());
}

// Kronecker symbol (D/n) for n > 0 by factoring n and Euler's criterion.
int kronecker_oracle(std::int64_t D, std::int64_t n)
{
    int out = 1;
    for (std::int64_t p = 2; n > 1; ++p) {
        while (n % p == 0) {
            n /= p;
            int s;
            if (p == 2) {
                std::int64_t r = ((D % 8) + 8) % 8;
                s = (D % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
            } else {
                std::int64_t e = (p - 1) / 2, base = ((D % p) + p) % p, acc = 1;
                for (std::int64_t i = 0; i < e; ++i)
                    acc = acc * base % p;
                s = acc == 0 ? 0 : acc == 1 ? 1 : -1;
            }
            out *= s;
        }
    }
    return out;
}

// h R = -(1/2) sum_{0<a<D} chi(a) ln sin(pi a / D) for real quadratic fields.
double hr_analytic(std::int64_t D)
{
    double s = 0.0;
    for (std::int64_t a = 1; a < D; ++a)
        s += kronecker_oracle(D, a) * std::log(std::sin(std::numbers::pi * static_cast<double>(a) / D));
    return -0.5 * s;
}

} // namespace

TEST(discriminant, fundamental_examples)
{
    EXPECT_EQ(fundamental_discriminant(7), 28);
    EXPECT_EQ(fundamental_discriminant(-1), -4);
    EXPECT_EQ(fundamental_discriminant(5), 5);
    EXPECT_EQ(fundamental_discriminant(18), 8);
    EXPECT_EQ(fundamental_discriminant(-12), -3);
    EXPECT_THROW(fundamental_discriminant(9), input_error);
    EXPECT_THROW(fundamental_discriminant(0), input_error);
    for (std::int64_t D : {-3, -4, -7, -8, 5, 8, 12, 13, 40, -47})
        EXPECT_TRUE(is_fundamental_discriminant(D)) << D;
    for (std::int64_t D : {1, 0, 7, -12, 16, 20, 9, -16, 2})
        EXPECT_FALSE(is_fundamental_discriminant(D)) << D;
}

TEST(discriminant, fundamental_is_discriminant_of_squarefree_part)
{
    for (std::int64_t d = -300; d <= 300; ++d) {
        if (d == 0 || is_perfect_square(d) || squarefree_part(d) == 1)
            continue;
        std::int64_t D = fundamental_discriminant(d);
        EXPECT_TRUE(is_fundamental_discriminant(D)) << d;
        EXPECT_EQ(squarefree_part(D), squarefree_part(d)) << d;
    }
}

TEST(class_number, imaginary_small_table)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> known = {
        {-3, 1}, {-4, 1}, {-7, 1}, {-8, 1}, {-11, 1}, {-15, 2}, {-20, 2}, {-23, 3},
        {-47, 5}, {-71, 7}, {-163, 1}, {-84, 4}};
    for (auto [D, h] : known)
        EXPECT_EQ(class_number_imaginary(D), h) << D;
}

TEST(class_number, imaginary_matches_gauss_reduction)
{
    for (auto D : fundamental_discs(-400, -3))
        EXPECT_EQ(class_number_imaginary(D), class_number_by_reduction(D)) << D;
}

TEST(class_number, reduced_forms_are_reduced_and_primitive)
{
    for (auto D : fundamental_discs(-500, -3))
        for (auto f : reduced_forms_imaginary(D)) {
            EXPECT_EQ(f.discriminant(), D);
            EXPECT_TRUE(f.is_primitive());
            auto [a, b, c] = gauss_reduce(f.a, f.b, f.c);
            EXPECT_EQ(binary_form({a, b, c}), f);
        }
}

TEST(fundamental_unit, known_units)
{
    struct unit_case {
        std::int64_t D, x, y;
        int norm;
    };
    for (auto u : {unit_case{5, 1, 1, -1}, unit_case{8, 2, 1, -1}, unit_case{12, 4, 1, 1},
                   unit_case{13, 3, 1, -1}, unit_case{40, 6, 1, -1}, unit_case{21, 5, 1, 1}}) {
        auto e = fundamental_unit_real(u.D);
        EXPECT_EQ(e.x, u.x) << u.D;
        EXPECT_EQ(e.y, u.y) << u.D;
        EXPECT_EQ(e.norm, u.norm) << u.D;
    }
    EXPECT_NEAR(fundamental_unit_real(5).regulator, std::log((1 + std::sqrt(5.0)) / 2), 1e-14);
}

TEST(fundamental_unit, minimal_by_search)
{
    for (auto D : fundamental_discs(5, 199)) {
        auto e = fundamental_unit_real(D);
        // smallest y >= 1 with x^2 - D y^2 = +-4 for some x >= 1
        std::int64_t best_y = 0, best_x = 0;
        for (std::int64_t y = 1; best_y == 0; ++y)
            for (int sign : {-4, 4}) {
                std::int64_t x2 = D * y * y + sign;
                if (x2 > 0 && is_perfect_square(x2)) {
                    best_y = y;
                    best_x = isqrt(x2);
                    break;
                }
            }
        EXPECT_EQ(e.y, best_y) << D;
        EXPECT_EQ(e.x, best_x) << D;
        EXPECT_EQ(big_int(e.x * e.x - D * e.y * e.y), 4 * e.norm) << D;
        EXPECT_NEAR(e.regulator, std::log((static_cast<double>(best_x) + best_y * std::sqrt(double(D))) / 2),
                    1e-12 * e.regulator);
    }
}

TEST(class_number, real_matches_analytic_formula)
{
    for (auto D : fundamental_discs(5, 1500)) {
        auto inv = quad_invariants(D);
        double h = hr_analytic(D) / inv.regulator;
        EXPECT_NEAR(static_cast<double>(inv.h), h, 1e-6) << D;
    }
}

TEST(class_number, real_known_values)
{
    EXPECT_EQ(quad_invariants(40).h, 2);
    EXPECT_EQ(quad_invariants(60).h, 2);
    EXPECT_EQ(quad_invariants(316).h, 3);
    EXPECT_EQ(quad_invariants(328).h, 4);
    EXPECT_EQ(narrow_class_number_real(12), 2);
    EXPECT_EQ(class_number_real(12, 1), 1);
}

TEST(class_number, cycles_partition_reduced_forms)
{
    for (auto D : fundamental_discs(5, 600)) {
        auto cycles = form_cycles_real(D);
        std::size_t total = 0;
        for (auto const & c : cycles)
            total += c.size();
        EXPECT_EQ(total, reduced_forms_real(D).size()) << D;
    }
}

TEST(quad_invariants, signature_and_roots_of_unity)
{
    auto gauss = quad_invariants(-4);
    EXPECT_EQ(gauss.r2, 1);
    EXPECT_EQ(gauss.w, 4);
    EXPECT_EQ(quad_invariants(-3).w, 6);
    EXPECT_EQ(quad_invariants(-7).w, 2);
    EXPECT_EQ(quad_invariants(13).r1, 2);
    EXPECT_EQ(quad_invariants(1), rational_field_invariants());
    EXPECT_THROW(quad_invariants(7), input_error);
}

TEST(parse_invariants, well_formed)
{
    auto inv = parse_invariants("# Q(sqrt 5)\nr1 = 2\nr2=0\nh=1\nR=0.4812118250596034\nw=2\ndisc=5\n");
    EXPECT_EQ(inv.r1, 2);
    EXPECT_EQ(inv.disc, 5);
    auto cubic = parse_invariants("r1=1\nr2=1\nh=1\nR=0.2831\nw=2\n");
    EXPECT_FALSE(cubic.disc.has_value());
    EXPECT_EQ(cubic.unit_rank(), 1);
}

TEST(parse_invariants, errors_name_the_line)
{
    auto message = [](std::string const & text) {
        try {
            parse_invariants(text);
        } catch (input_error const & e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("r1=1\nr2=0\nh=x\nR=1\nw=2\n").find("line 3"), std::string::npos);
    EXPECT_NE(message("r1=1\nr2=0\nh=1\nR=1\n").find("missing key 'w'"), std::string::npos);
    EXPECT_NE(message("r1=1\nr2=0\nh=1\nR=1\nw=2\nfoo=3\n").find("line 6"), std::string::npos);
    EXPECT_NE(message("r1=1\nr1=1\nr2=0\nh=1\nR=1\nw=2\n").find("duplicate"), std::string::npos);
    EXPECT_NE(message("r1=1\nr2=0\nh=1\nR=-1\nw=2\n").find("line 4"), std::string::npos);
    EXPECT_NE(message("r1=1\nr2=0\nh=1\nR=1\nw=3\n").find("even"), std::string::npos);
    EXPECT_NE(message("r1=0\nr2=1\nh=1\nR=1\nw=2\ndisc=-4\n").find("w = 4"), std::string::npos);
    EXPECT_NE(message("r1=0\nr2=1\nh=1\nR=1\nw=2\ndisc=-12\n").find("fundamental"), std::string::npos);
    EXPECT_NE(message("r1=1\nr2=0\nh=1\nR=1\nw=2\nnonsense\n").find("key=value"), std::string::npos);
}
