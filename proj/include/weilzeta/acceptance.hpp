#pragma once

// The acceptance battery: one PASS/FAIL line per criterion, shared by the
// `suite` CLI verb and the acceptance test binary.

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weilzeta/commands.hpp"

namespace weilzeta {

struct criterion_result {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace acceptance {

inline std::vector<std::int64_t> const suite_discriminants = {-3, -4, -7, -8, -11, -15, -23, -47, 5, 8, 12, 13, 40};

/* Collects the first few failures of a criterion for the detail column. */
class failure_log
{
  public:
    void fail(std::string const & what)
    {
        ++count_;
        if (count_ <= 3)
            text_ += (text_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return count_ == 0; }
    std::string summary(std::string const & on_pass) const
    {
        if (ok())
            return on_pass;
        return std::to_string(count_) + " failure(s): " + text_;
    }

  private:
    int count_ = 0;
    std::string text_;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline criterion_result number_rings()
{
    criterion_result r{1, "number rings: ord = r1+r2-1, zeta*(0) = -hR/w", false, {}, 0.0};
    failure_log log;
    double worst = 0.0;
    for (auto D : suite_discriminants) {
        auto t0 = std::chrono::steady_clock::now();
        auto inv = quad_invariants(D);
        auto rep = verify_number_ring(inv);
        double secs = seconds_since(t0);
        worst = std::max(worst, secs);
        std::string tag = "D=" + std::to_string(D);
        if (rep.result != verdict::pass)
            log.fail(tag + " verdict " + to_string(rep.result));
        if (!rep.ord_computed || *rep.ord_computed != inv.unit_rank())
            log.fail(tag + " ord");
        double expected = -static_cast<double>(inv.h) * inv.regulator / inv.w;
        double got = rep.special_value_computed ? rep.special_value_computed->to_double() : NAN;
        if (!(std::abs(got - expected) <= 1e-8 * std::max(1.0, std::abs(expected))))
            log.fail(tag + " value " + std::to_string(got) + " vs " + std::to_string(expected));
        if (secs >= 1.0)
            log.fail(tag + " took " + std::to_string(secs) + " s");
    }
    std::ostringstream d;
    d << suite_discriminants.size() << " fields, slowest " << worst << " s";
    r.detail = log.summary(d.str());
    r.pass = log.ok();
    return r;
}

inline criterion_result rationals()
{
    criterion_result r{2, "Q: ord 0, zeta*(0) = -1/2 exactly", false, {}, 0.0};
    auto inv = rational_field_invariants();
    auto rep = verify_number_ring(inv);
    special_value half;
    half.mantissa = rational(-1, 2);
    bool const hrw = rational(-inv.h, inv.w) == half.mantissa && inv.unit_rank() == 0;
    r.pass = rep.result == verdict::pass && rep.ord_computed == 0 && rep.special_value_computed == half
             && rep.special_value_predicted == half && hrw;
    r.detail = rep.special_value_computed ? "computed " + to_string(rep.special_value_computed->mantissa) : "no value";
    return r;
}

inline criterion_result projective_spaces_fq()
{
    criterion_result r{3, "P^n over F_q: rho = -1, |c| = prod (q^j - 1)^-1", false, {}, 0.0};
    failure_log log;
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (int n = 0; n <= 3; ++n) {
            ++cases;
            auto v = verify_pn(q, n);
            std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
            rational expected = 1;
            for (int j = 1; j <= n; ++j)
                expected /= rational(ipow(big_int(q), static_cast<unsigned>(j)) - 1);
            if (!v.pass())
                log.fail(tag + " checks");
            if (v.ord_computed != -1 || v.ord_predicted != -1 || rank_weighted_euler(*v.table) != -1)
                log.fail(tag + " rho");
            if (abs_rational(v.computed.c) != expected || torsion_euler(*v.table) != expected)
                log.fail(tag + " |c|");
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0)
        log.fail("took " + std::to_string(secs) + " s");
    r.detail = log.summary(std::to_string(cases) + " cases in " + std::to_string(secs) + " s");
    r.pass = log.ok();
    return r;
}

/* Deterministic squarefree curves: 6 cubics, 4 quintics and 1 septic per prime. */
inline std::vector<curve_spec> curve_battery()
{
    std::vector<curve_spec> out;
    std::mt19937_64 rng(20240611);
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
        for (auto [deg, wanted] : {std::pair{3, 6}, std::pair{5, 4}, std::pair{7, 1}}) {
            int found = 0;
            while (found < wanted) {
                std::vector<std::int64_t> f(static_cast<std::size_t>(deg) + 1);
                for (auto & a : f)
                    a = coeff(rng);
                f.back() = 1;
                try {
                    out.push_back(make_curve(p, f));
                    ++found;
                } catch (input_error const &) {
                }
            }
        }
    }
    return out;
}

inline criterion_result curves(unsigned workers)
{
    criterion_result r{4, "curves over F_p: functional equation, Hasse, N_m, |zeta*|(q-1) = P(1)", false, {}, 0.0};
    failure_log log;
    auto t0 = std::chrono::steady_clock::now();
    auto battery = curve_battery();
    int genus_one = 0;
    for (auto const & c : battery) {
        auto v = verify_curve(c, workers);
        for (auto const & chk : v.checks)
            if (!chk.pass)
                log.fail(c.describe() + ": " + chk.name);
        bool has_recount = false;
        for (auto const & chk : v.checks)
            has_recount = has_recount || chk.name == "P(1) = N_1";
        if (c.genus() == 1) {
            ++genus_one;
            if (!has_recount)
                log.fail(c.describe() + ": genus-1 recount missing");
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0)
        log.fail("took " + std::to_string(secs) + " s");
    r.detail = log.summary(std::to_string(battery.size()) + " curves (" + std::to_string(genus_one) + " genus 1) in "
                           + std::to_string(secs) + " s");
    r.pass = log.ok() && battery.size() >= 10;
    return r;
}

inline criterion_result rank_identity()
{
    criterion_result r{5, "P^n over O_F: soule_rank = pn_of_order, n <= 6", false, {}, 0.0};
    failure_log log;
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    std::vector<std::int64_t> discs = suite_discriminants;
    discs.push_back(1);
    for (auto D : discs) {
        auto inv = quad_invariants(D);
        for (int n = 0; n <= 6; ++n) {
            ++cases;
            auto lhs = soule_rank({scheme_kind::pn_over_number_ring, inv, n});
            auto rhs = pn_of_order(inv, n);
            if (lhs != rhs)
                log.fail("D=" + std::to_string(D) + " n=" + std::to_string(n) + ": " + std::to_string(lhs)
                         + " vs " + std::to_string(rhs));
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0)
        log.fail("took " + std::to_string(secs) + " s");
    r.detail = log.summary(std::to_string(cases) + " cases");
    r.pass = log.ok();
    return r;
}

inline bool is_unimodular(int_matrix const & m)
{
    auto d = determinant(m);
    return d == 1 || d == -1;
}

inline criterion_result smith_properties()
{
    criterion_result r{6, "Smith normal form: UMV = D, unimodular U and V, divisibility chain", false, {}, 0.0};
    failure_log log;
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> entry(-10, 10);
    int const trials = 500;
    for (int t = 0; t < trials; ++t) {
        int_matrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        auto s = smith_normal_form(m);
        std::string tag = "trial " + std::to_string(t);
        if (s.u * m * s.v != s.d)
            log.fail(tag + ": UMV != D");
        if (!is_unimodular(s.u) || !is_unimodular(s.v))
            log.fail(tag + ": not unimodular");
        if (!s.d.is_diagonal())
            log.fail(tag + ": D not diagonal");
        auto diag = s.nonzero_diagonal();
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            if (s.d(i, i) != 0)
                ++nonzero;
        if (nonzero != diag.size())
            log.fail(tag + ": zeros before nonzero diagonal entries");
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] <= 0)
                log.fail(tag + ": nonpositive invariant factor");
            if (i + 1 < diag.size() && diag[i + 1] % diag[i] != 0)
                log.fail(tag + ": divisibility chain broken");
        }
    }
    r.detail = log.summary(std::to_string(trials) + " random matrices");
    r.pass = log.ok();
    return r;
}

inline criterion_result open_subschemes()
{
    criterion_result r{7, "open subschemes: ord(U) = ord(X) - sum ord(Y_i)", false, {}, 0.0};
    failure_log log;
    struct open_case {
        std::string name;
        verification_report base;
        std::vector<verification_report> fibres;
        long long expected;
    };
    auto gauss = quad_invariants(-4);
    std::vector<open_case> cases = {
        {"P^1_Z[i] - P^1_F5", cmd_pn_of(gauss, 1), {cmd_ff_pn(5, 1)}, 2},
        {"Spec Z - Spec F2", cmd_numberring(1), {cmd_ff_pn(2, 0)}, 1},
        {"Spec Z[i] - Spec F5 - Spec F5", cmd_numberring(-4), {cmd_ff_pn(5, 0), cmd_ff_pn(5, 0)}, 2},
        {"Spec O_Q(sqrt5) - Spec F4", cmd_numberring(5), {cmd_ff_pn(4, 0)}, 2},
        {"P^2_Z - P^2_F3", cmd_pn_of(rational_field_invariants(), 2), {cmd_ff_pn(3, 2)}, 2},
    };
    for (auto const & c : cases) {
        auto u = cmd_open(c.base, c.fibres);
        long long additive = *c.base.ord_computed;
        for (auto const & f : c.fibres)
            additive -= *f.ord_computed;
        if (!u.ord_computed || *u.ord_computed != c.expected || additive != c.expected
            || u.rank_predicted != c.expected)
            log.fail(c.name + ": ord " + (u.ord_computed ? std::to_string(*u.ord_computed) : "n/a"));
        if (u.result == verdict::fail || u.result == verdict::unsupported)
            log.fail(c.name + ": verdict " + to_string(u.result));
        if (c.fibres.size() > 1) {
            auto stepwise = cmd_open(cmd_open(c.base, {c.fibres[0]}), {c.fibres[1]});
            if (!(stepwise == u))
                log.fail(c.name + ": not associative");
        }
    }
    if (!(cmd_open(cases[1].base, {}) == cases[1].base))
        log.fail("removing nothing changed the report");
    r.detail = log.summary(std::to_string(cases.size()) + " (base, fibre) pairs");
    r.pass = log.ok();
    return r;
}

inline criterion_result rank_only_flag()
{
    criterion_result r{8, "P^n over O_F, n >= 1: determinant excluded, RANK_ONLY emitted", false, {}, 0.0};
    failure_log log;
    int cases = 0;
    for (auto D : {std::int64_t{1}, std::int64_t{-4}, std::int64_t{5}}) {
        for (int n = 1; n <= 3; ++n) {
            ++cases;
            auto rep = cmd_pn_of(quad_invariants(D), n);
            std::vector<std::string> want = {note_k_torsion_unknown, note_mod_two};
            if (rep.result != verdict::rank_only || rep.caveats != want || exit_code(rep.result) != 0)
                log.fail("D=" + std::to_string(D) + " n=" + std::to_string(n) + " verdict "
                         + to_string(rep.result));
        }
    }
    r.detail = log.summary(std::to_string(cases) + " reports flagged RANK_ONLY");
    r.pass = log.ok();
    return r;
}

} // namespace acceptance

/* Runs every criterion, printing one line each; returns whether all passed. */
inline bool run_acceptance(std::ostream & out, unsigned workers = 1)
{
    std::vector<std::function<criterion_result()>> battery = {
        acceptance::number_rings,     acceptance::rationals,      acceptance::projective_spaces_fq,
        [workers] { return acceptance::curves(workers); },
        acceptance::rank_identity,    acceptance::smith_properties, acceptance::open_subschemes,
        acceptance::rank_only_flag,
    };
    bool all = true;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        criterion_result r;
        try {
            r = battery[i]();
        } catch (std::exception const & e) {
            r.id = static_cast<int>(i) + 1;
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = acceptance::seconds_since(t0);
        all = all && r.pass;
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " -- " << r.detail
            << "\n";
    }
    out << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
    return all;
}

} // namespace weilzeta
