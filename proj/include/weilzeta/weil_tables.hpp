#pragma once

// Weil-etale cohomology tables H^i_W and H^i_{W,c} for number rings,
// projective spaces over number rings (via K-groups) and over finite fields.

#include <optional>
#include <string>
#include <vector>

#include "weilzeta/fgab.hpp"
#include "weilzeta/motivic_rank.hpp"
#include "weilzeta/number_field.hpp"

namespace weilzeta {

inline constexpr char const * note_mod_two = "mod 2-torsion";
inline constexpr char const * note_k_torsion_unknown = "k-torsion unknown";
inline constexpr char const * note_derived = "derived, verified against zeta side";

/* H^i_W(Spec O_F, Z): Z, 0, Cl(F)^D . Hom(O_F^x, Z), mu_F^D */
inline graded_table numberring_table(number_field_invariants const & inv)
{
    graded_table t(1);
    t.set(0, fg_ab::free(1));
    t.set(2, extend(fg_ab::cyclic(inv.h), fg_ab::free(static_cast<std::size_t>(inv.unit_rank()))));
    t.set(3, fg_ab::cyclic(inv.w));
    return t;
}

/*
 * Compact support from the long exact sequence against RGamma(X_inf, Z) =
 * Z^{r1+r2} in degree 0, the map H^0_W = Z -> Z^{r1+r2} being the diagonal:
 * its kernel is 0 and its cokernel Z^{r1+r2-1} is free.
 */
inline graded_table numberring_compact_table(number_field_invariants const & inv)
{
    graded_table w = numberring_table(inv);
    graded_table t(1);
    t.set(1, fg_ab::free(static_cast<std::size_t>(inv.unit_rank())));
    for (auto const & [i, g] : w.entries())
        if (i >= 2)
            t.set(i, g);
    return t;
}

/* Orders |K_{2j}(O_F)| and |K_{2j+1}(O_F)_tors| for one j >= 1. */
struct k_torsion_entry {
    big_int k_even_order = 1;
    big_int k_odd_torsion = 1;

    bool operator==(k_torsion_entry const &) const = default;
};

/*
 * H^i_W(P^n_{O_F}, Z) neglecting 2-torsion:
 *   H^0 = Z, H^1 = 0,
 *   0 -> K_{2j}(O_F)^D -> H^{2j+2} -> Hom(K_{2j+1}(O_F), Z) -> 0,
 *   H^{2j+3} = (K_{2j+1}(O_F)_tors)^D,   0 <= j <= n.
 * For j = 0 the K-groups are Cl(F) and O_F^x, so h and w are used. For j >= 1
 * the torsion comes from k_torsion (one entry per j) or is marked unknown.
 */
inline graded_table pn_of_table(number_field_invariants const & inv, int n,
                                std::optional<std::vector<k_torsion_entry>> const & k_torsion = std::nullopt)
{
    if (n < 0)
        throw input_error("pn_of_table: n must be nonnegative");
    if (k_torsion && k_torsion->size() != static_cast<std::size_t>(n))
        throw input_error("pn_of_table: k_torsion needs " + std::to_string(n) + " entries (j = 1.."
                          + std::to_string(n) + "), got " + std::to_string(k_torsion->size()));
    graded_table t(n + 1);
    t.set(0, fg_ab::free(1));
    for (int j = 0; j <= n; ++j) {
        auto rank = static_cast<std::size_t>(borel_dim(inv, j + 1));
        if (j == 0) {
            t.set(2, extend(fg_ab::cyclic(inv.h), fg_ab::free(rank)));
            t.set(3, fg_ab::cyclic(inv.w));
        } else if (k_torsion) {
            auto const & e = (*k_torsion)[static_cast<std::size_t>(j - 1)];
            t.set(2 * j + 2, extend(fg_ab::cyclic(e.k_even_order), fg_ab::free(rank)));
            t.set(2 * j + 3, fg_ab::cyclic(e.k_odd_torsion));
        } else {
            t.set(2 * j + 2, fg_ab::unknown_torsion(rank));
            t.set(2 * j + 3, fg_ab::unknown_torsion(0));
        }
    }
    if (n > 0)
        t.add_note(note_mod_two);
    if (t.has_unknown_torsion())
        t.add_note(note_k_torsion_unknown);
    return t;
}

/* Parses "K2=..", "K3=.." .. "K{2n+1}=.." lines into k_torsion entries. */
inline std::vector<k_torsion_entry> parse_k_torsion(std::string_view text, int n)
{
    auto kv = detail::parse_key_values(text);
    std::vector<k_torsion_entry> out(static_cast<std::size_t>(n));
    for (auto const & [key, v] : kv) {
        int idx = -1;
        if (key.size() >= 2 && key[0] == 'K') {
            try {
                std::size_t used = 0;
                idx = std::stoi(key.substr(1), &used);
                if (used != key.size() - 1)
                    idx = -1;
            } catch (std::exception const &) {
                idx = -1;
            }
        }
        if (idx < 2 || idx > 2 * n + 1)
            throw input_error("line " + std::to_string(v.second) + ": unexpected key '" + key
                              + "' (expected K2..K" + std::to_string(2 * n + 1) + ")");
        big_int order;
        try {
            order = parse_big_int(v.first);
        } catch (input_error const &) {
            throw input_error("line " + std::to_string(v.second) + ": unparsable number '" + v.first
                              + "' for key '" + key + "'");
        }
        if (order < 1)
            throw input_error("line " + std::to_string(v.second) + ": torsion order must be >= 1");
        auto & e = out[static_cast<std::size_t>(idx / 2 - 1)];
        (idx % 2 == 0 ? e.k_even_order : e.k_odd_torsion) = order;
    }
    for (int i = 2; i <= 2 * n + 1; ++i)
        if (!kv.count("K" + std::to_string(i)))
            throw input_error("k-torsion: missing key 'K" + std::to_string(i) + "'");
    return out;
}

/*
 * H^i_W(P^n_{F_q}, Z) = H^i_{W,c}: Z in degrees 0 and 1, finite of order
 * q^j - 1 in degree 2j+1 for 1 <= j <= n.
 */
inline graded_table pn_fq_table(std::int64_t q, int n)
{
    if (q < 2)
        throw input_error("pn_fq_table: q must be a prime power >= 2");
    if (n < 0)
        throw input_error("pn_fq_table: n must be nonnegative");
    graded_table t(n);
    t.set(0, fg_ab::free(1));
    t.set(1, fg_ab::free(1));
    big_int qj = 1;
    for (int j = 1; j <= n; ++j) {
        qj *= q;
        t.set(2 * j + 1, fg_ab::cyclic(qj - 1));
    }
    t.add_note(note_derived);
    return t;
}

/* The real complex H^1_{W,c} (x) R --(cup theta)--> H^2_{W,c} (x) R of a number ring. */
struct theta_complex_report {
    int dim_h1 = 0;
    int dim_h2 = 0;
    bool acyclic = true;
    double determinant_factor = 1.0;

    int euler_characteristic() const { return -dim_h1 + dim_h2; }
};

/*
 * Cup product with theta is the identity on (prod_{X_inf} R)/R, so the
 * complex is acyclic; against the integral lattices it has determinant R.
 */
inline theta_complex_report theta_acyclicity(number_field_invariants const & inv)
{
    auto compact = numberring_compact_table(inv);
    theta_complex_report r;
    r.dim_h1 = static_cast<int>(compact.at(1).rank);
    r.dim_h2 = static_cast<int>(compact.at(2).rank);
    r.acyclic = r.dim_h1 == r.dim_h2;
    r.determinant_factor = inv.unit_rank() > 0 ? inv.regulator : 1.0;
    return r;
}

} // namespace weilzeta
