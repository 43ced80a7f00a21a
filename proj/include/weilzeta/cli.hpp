#pragma once

// Command-line front end. run_cli returns the process exit code:
// 0 pass / rank-only, 1 usage or input error, 2 mismatch, 3 unsupported.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "weilzeta/acceptance.hpp"
#include "weilzeta/commands.hpp"

namespace weilzeta {

namespace detail {

inline std::string read_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/* "p=5" "f=x^3+1" style positional arguments for `ff curve`. */
inline void apply_curve_pairs(std::vector<std::string> const & pairs, std::optional<std::int64_t> & p,
                              std::optional<std::string> & f)
{
    for (auto const & kv : pairs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw input_error("ff curve: expected key=value, got '" + kv + "'");
        auto key = trim(kv.substr(0, eq));
        auto value = trim(kv.substr(eq + 1));
        if (key == "p") {
            try {
                std::size_t used = 0;
                p = std::stoll(value, &used);
                if (used != value.size())
                    throw input_error("");
            } catch (std::exception const &) {
                throw input_error("ff curve: bad prime '" + value + "'");
            }
        } else if (key == "f") {
            f = value;
        } else {
            throw input_error("ff curve: unknown key '" + key + "'");
        }
    }
}

} // namespace detail

inline int run_cli(int argc, char const * const * argv, std::ostream & out = std::cout, std::ostream & err = std::cerr)
{
    CLI::App app{"Checks zeta values at s = 0 against Weil-etale Euler characteristics"};
    app.require_subcommand(1);

    bool as_json = false;
    double tol = default_tolerance;
    unsigned workers = 1;
    app.add_flag("--json", as_json, "emit the report as JSON");
    app.add_option("--tol", tol, "relative tolerance for real special values")->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "threads for point counting")->check(CLI::Range(1u, 256u));

    std::optional<std::int64_t> disc;
    std::string invariants_file;
    auto add_field_source = [&](CLI::App * sub) {
        auto d = sub->add_option("--disc", disc, "fundamental discriminant (1 for Q)");
        auto i = sub->add_option("--invariants", invariants_file, "key=value file with r1, r2, h, R, w[, disc]");
        d->excludes(i);
    };

    auto numberring = app.add_subcommand("numberring", "Spec O_F");
    add_field_source(numberring);

    int n = 0;
    std::string k_torsion_file;
    auto pn_of = app.add_subcommand("pn-of", "P^n over O_F (rank identity)");
    add_field_source(pn_of);
    pn_of->add_option("--n", n, "dimension of the projective space")->required()->check(CLI::NonNegativeNumber);
    pn_of->add_option("--k-torsion", k_torsion_file, "file with K2=.. K3=.. up to K{2n+1}");

    auto ff = app.add_subcommand("ff", "varieties over finite fields");
    ff->require_subcommand(1);
    std::int64_t q = 0;
    int ff_n = 0;
    auto ff_pn = ff->add_subcommand("pn", "P^n over F_q");
    ff_pn->add_option("--q", q, "field size")->required();
    ff_pn->add_option("--n", ff_n, "dimension")->required()->check(CLI::NonNegativeNumber);

    std::optional<std::int64_t> curve_p;
    std::optional<std::string> curve_f;
    std::vector<std::string> curve_pairs;
    auto ff_curve = ff->add_subcommand("curve", "y^2 = f(x) over F_p, deg f in {3, 5, 7}");
    ff_curve->add_option("--p", curve_p, "odd prime");
    ff_curve->add_option("--f", curve_f, "integer polynomial, e.g. x^3+x");
    ff_curve->add_option("pairs", curve_pairs, "p=.. f=.. as positional pairs");

    std::string base_file;
    std::vector<std::string> fibre_files;
    auto open = app.add_subcommand("open", "complement of closed fibres, from saved JSON reports");
    open->add_option("base", base_file, "report for X")->required();
    open->add_option("fibres", fibre_files, "reports for the removed closed fibres");

    auto suite = app.add_subcommand("suite", "run the acceptance battery");

    for (auto * sub : {numberring, pn_of, ff, ff_pn, ff_curve, open, suite})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    run_options opts{tol, workers};
    auto field = [&]() -> number_field_invariants {
        if (!invariants_file.empty())
            return load_invariants(invariants_file);
        if (!disc)
            throw input_error("give --disc or --invariants");
        check_disc_argument(*disc);
        return quad_invariants(*disc);
    };

    try {
        if (suite->parsed())
            return run_acceptance(out, workers) ? 0 : 2;

        verification_report r;
        if (numberring->parsed()) {
            r = verify_number_ring(field(), opts);
        } else if (pn_of->parsed()) {
            std::optional<std::vector<k_torsion_entry>> kt;
            if (!k_torsion_file.empty())
                kt = parse_k_torsion(detail::read_file(k_torsion_file), n);
            r = cmd_pn_of(field(), n, kt, opts);
        } else if (ff_pn->parsed()) {
            r = cmd_ff_pn(q, ff_n);
        } else if (ff_curve->parsed()) {
            detail::apply_curve_pairs(curve_pairs, curve_p, curve_f);
            if (!curve_p || !curve_f)
                throw input_error("ff curve: need both p and f");
            r = cmd_ff_curve(make_curve(*curve_p, parse_int_polynomial(*curve_f)), opts);
        } else {
            auto base = parse_report(detail::read_file(base_file));
            std::vector<verification_report> fibres;
            for (auto const & f : fibre_files)
                fibres.push_back(parse_report(detail::read_file(f)));
            r = cmd_open(base, fibres, opts);
        }
        out << emit_report(r, as_json);
        return exit_code(r.result);
    } catch (input_error const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (unsupported_error const & e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (consistency_error const & e) {
        err << "inconsistency: " << e.what() << "\n";
        return 2;
    }
}

} // namespace weilzeta
