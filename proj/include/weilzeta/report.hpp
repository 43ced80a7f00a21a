#pragma once

// Verification reports: the cohomological prediction next to the analytic
// computation, with a verdict, emitted as text or line-per-field JSON.

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "weilzeta/fgab.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

enum class verdict { pass, fail, rank_only, unsupported };

inline std::string to_string(verdict v)
{
    switch (v) {
    case verdict::pass: return "PASS";
    case verdict::fail: return "FAIL";
    case verdict::rank_only: return "RANK_ONLY";
    case verdict::unsupported: return "UNSUPPORTED";
    }
    return "UNSUPPORTED";
}

inline verdict verdict_from_string(std::string const & s)
{
    if (s == "PASS")
        return verdict::pass;
    if (s == "FAIL")
        return verdict::fail;
    if (s == "RANK_ONLY")
        return verdict::rank_only;
    if (s == "UNSUPPORTED")
        return verdict::unsupported;
    throw input_error("unknown verdict '" + s + "'");
}

/* 0 pass (and rank-only pass), 2 mathematical mismatch, 3 unsupported. */
inline int exit_code(verdict v)
{
    switch (v) {
    case verdict::pass:
    case verdict::rank_only: return 0;
    case verdict::fail: return 2;
    case verdict::unsupported: return 3;
    }
    return 3;
}

struct verification_report {
    std::string object;
    nlohmann::ordered_json invariants = nlohmann::ordered_json::object();
    std::optional<graded_table> weil_table;
    long long rank_predicted = 0;
    std::optional<long long> ord_computed;
    std::optional<special_value> special_value_predicted;
    std::optional<special_value> special_value_computed;
    verdict result = verdict::unsupported;
    std::map<std::string, double> tolerances;
    std::vector<std::string> caveats;

    bool operator==(verification_report const &) const = default;
};

namespace json_io {

using json = nlohmann::ordered_json;

inline json to_json(fg_ab const & g)
{
    json j;
    j["rank"] = g.rank;
    j["torsion"] = g.torsion_order.str();
    j["torsion_known"] = g.torsion_known;
    if (g.factors) {
        json f = json::array();
        for (auto const & d : *g.factors)
            f.push_back(d.str());
        j["factors"] = f;
    } else {
        j["factors"] = nullptr;
    }
    return j;
}

inline fg_ab fg_ab_from_json(json const & j)
{
    fg_ab g;
    g.rank = j.at("rank").get<std::size_t>();
    g.torsion_order = parse_big_int(j.at("torsion").get<std::string>());
    g.torsion_known = j.at("torsion_known").get<bool>();
    if (!j.at("factors").is_null()) {
        std::vector<big_int> f;
        for (auto const & d : j.at("factors"))
            f.push_back(parse_big_int(d.get<std::string>()));
        g.factors = f;
    }
    return g;
}

inline json to_json(graded_table const & t)
{
    json j;
    j["dim"] = t.dim();
    j["delta"] = t.delta();
    json degrees = json::array();
    for (auto const & [i, g] : t.entries()) {
        json e;
        e["degree"] = i;
        json const group = to_json(g);
        for (auto const & [k, v] : group.items())
            e[k] = v;
        degrees.push_back(e);
    }
    j["degrees"] = degrees;
    j["notes"] = t.notes();
    return j;
}

inline graded_table graded_table_from_json(json const & j)
{
    graded_table t(j.at("dim").get<int>());
    if (j.at("delta").get<int>() != t.delta())
        throw input_error("report: weil_table delta != 2 dim + 2");
    for (auto const & e : j.at("degrees"))
        t.set(e.at("degree").get<int>(), fg_ab_from_json(e));
    for (auto const & n : j.at("notes"))
        t.add_note(n.get<std::string>());
    return t;
}

inline json to_json(special_value const & v)
{
    json j;
    j["ord"] = v.ord;
    j["mantissa"] = to_string(v.mantissa);
    json logs = json::object();
    for (auto const & [p, e] : v.log_exponents)
        logs[std::to_string(p)] = e;
    j["log_exponents"] = logs;
    if (v.residual)
        j["residual"] = *v.residual;
    else
        j["residual"] = nullptr;
    j["value"] = v.to_double(); // display only
    return j;
}

inline special_value special_value_from_json(json const & j)
{
    special_value v;
    v.ord = j.at("ord").get<int>();
    v.mantissa = parse_rational(j.at("mantissa").get<std::string>());
    for (auto const & [p, e] : j.at("log_exponents").items())
        v.log_exponents[std::stoll(p)] = e.get<int>();
    if (!j.at("residual").is_null())
        v.residual = j.at("residual").get<double>();
    return v;
}

} // namespace json_io

inline nlohmann::ordered_json report_to_json(verification_report const & r)
{
    using json_io::json;
    json j;
    j["object"] = r.object;
    j["invariants"] = r.invariants;
    j["weil_table"] = r.weil_table ? json_io::to_json(*r.weil_table) : json(nullptr);
    j["rank_predicted"] = r.rank_predicted;
    j["ord_computed"] = r.ord_computed ? json(*r.ord_computed) : json(nullptr);
    j["special_value_predicted"] = r.special_value_predicted
                                       ? json_io::to_json(*r.special_value_predicted)
                                       : json(nullptr);
    j["special_value_computed"] = r.special_value_computed
                                      ? json_io::to_json(*r.special_value_computed)
                                      : json(nullptr);
    j["verdict"] = to_string(r.result);
    j["tolerances"] = r.tolerances;
    j["caveats"] = r.caveats;
    return j;
}

inline verification_report report_from_json(nlohmann::ordered_json const & j)
{
    try {
        verification_report r;
        r.object = j.at("object").get<std::string>();
        r.invariants = j.at("invariants");
        if (!j.at("weil_table").is_null())
            r.weil_table = json_io::graded_table_from_json(j.at("weil_table"));
        r.rank_predicted = j.at("rank_predicted").get<long long>();
        if (!j.at("ord_computed").is_null())
            r.ord_computed = j.at("ord_computed").get<long long>();
        if (!j.at("special_value_predicted").is_null())
            r.special_value_predicted = json_io::special_value_from_json(j.at("special_value_predicted"));
        if (!j.at("special_value_computed").is_null())
            r.special_value_computed = json_io::special_value_from_json(j.at("special_value_computed"));
        r.result = verdict_from_string(j.at("verdict").get<std::string>());
        r.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
        r.caveats = j.at("caveats").get<std::vector<std::string>>();
        return r;
    } catch (nlohmann::json::exception const & e) {
        throw input_error(std::string("malformed report: ") + e.what());
    }
}

inline verification_report parse_report(std::string const & text)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (nlohmann::json::exception const & e) {
        throw input_error(std::string("report is not valid JSON: ") + e.what());
    }
    return report_from_json(j);
}

namespace detail {

inline std::string describe_value(special_value const & v)
{
    std::ostringstream out;
    out << std::setprecision(17) << v.to_double() << "  [" << to_string(v.mantissa);
    for (auto const & [p, e] : v.log_exponents)
        out << " * (ln " << p << ")^" << e;
    if (v.residual)
        out << " * " << std::setprecision(17) << *v.residual;
    out << "]";
    return out.str();
}

inline std::string describe_group(fg_ab const & g)
{
    std::string out;
    if (g.rank > 0)
        out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
    if (!g.torsion_known) {
        out += out.empty() ? "?" : " + ?";
    } else if (g.torsion_order > 1) {
        std::string tors = g.factors && !g.factors->empty() ? "" : "finite of order " + g.torsion_order.str();
        if (tors.empty())
            for (auto const & d : *g.factors)
                tors += (tors.empty() ? "" : " + ") + ("Z/" + d.str());
        out += out.empty() ? tors : " + " + tors;
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

/* Text table, or JSON with one top-level field per line in a fixed key order. */
inline std::string emit_report(verification_report const & r, bool as_json)
{
    if (as_json) {
        auto j = report_to_json(r);
        std::string out = "{\n";
        bool first = true;
        for (auto const & [key, value] : j.items()) {
            if (!first)
                out += ",\n";
            first = false;
            out += nlohmann::ordered_json(key).dump() + ":" + value.dump();
        }
        out += "\n}\n";
        return out;
    }

    std::ostringstream out;
    out << "object:     " << r.object << "\n";
    if (!r.invariants.empty())
        out << "invariants: " << r.invariants.dump() << "\n";
    if (r.weil_table) {
        out << "weil table (dim " << r.weil_table->dim() << ", delta " << r.weil_table->delta() << "):\n";
        for (auto const & [i, g] : r.weil_table->entries())
            out << "  H^" << i << " = " << detail::describe_group(g) << "\n";
        for (auto const & n : r.weil_table->notes())
            out << "  note: " << n << "\n";
    }
    out << "rank predicted:  " << r.rank_predicted << "\n";
    out << "ord computed:    " << (r.ord_computed ? std::to_string(*r.ord_computed) : "n/a") << "\n";
    out << "zeta* predicted: "
        << (r.special_value_predicted ? detail::describe_value(*r.special_value_predicted) : "n/a") << "\n";
    out << "zeta* computed:  "
        << (r.special_value_computed ? detail::describe_value(*r.special_value_computed) : "n/a") << "\n";
    for (auto const & [k, v] : r.tolerances)
        out << "tolerance " << k << ": " << v << "\n";
    for (auto const & c : r.caveats)
        out << "caveat: " << c << "\n";
    out << "verdict: " << to_string(r.result) << "\n";
    return out.str();
}

} // namespace weilzeta
