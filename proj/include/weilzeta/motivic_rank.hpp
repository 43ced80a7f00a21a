#pragma once

// Rank side: Borel dimensions of motivic cohomology of number rings, the
// alternating motivic rank sum, and zeta vanishing orders at s = -j.

#include <optional>
#include <string>

#include "weilzeta/errors.hpp"
#include "weilzeta/number_field.hpp"

namespace weilzeta {

enum class scheme_kind { number_ring, pn_over_number_ring, pn_over_fq, curve };

struct scheme_descriptor {
    scheme_kind kind = scheme_kind::number_ring;
    std::optional<number_field_invariants> inv;
    int n = 0;

    int dimension() const
    {
        switch (kind) {
        case scheme_kind::number_ring: return 1;
        case scheme_kind::pn_over_number_ring: return n + 1;
        case scheme_kind::pn_over_fq: return n;
        case scheme_kind::curve: return 1;
        }
        return 0;
    }
};

/* dim H^1(O_F, Q(r)) = rank K_{2r-1}(O_F). */
inline int borel_dim(number_field_invariants const & inv, int r)
{
    if (r <= 0)
        throw input_error("borel_dim: twist must be positive");
    if (r == 1)
        return inv.r1 + inv.r2 - 1;
    return r % 2 == 0 ? inv.r2 : inv.r1 + inv.r2;
}

/* ord_{s=-j} zeta_F(s) */
inline int zeta_order_at(number_field_invariants const & inv, int j)
{
    if (j < 0)
        throw input_error("zeta_order_at: j must be nonnegative");
    if (j == 0)
        return inv.r1 + inv.r2 - 1;
    return j % 2 == 1 ? inv.r2 : inv.r1 + inv.r2;
}

/* dim_Q H^m(O_F, Q(r)); only H^1 for r >= 1 and H^0(Q(0)) are nonzero. */
inline int motivic_dim(number_field_invariants const & inv, int m, int r)
{
    if (r == 0)
        return m == 0 ? 1 : 0;
    if (r < 0)
        return 0;
    return m == 1 ? borel_dim(inv, r) : 0;
}

/*
 * sum_j (-1)^(j+1) dim H^j(X, Q(d)), with H^j(P^n_{O_F}, Q(d)) split by the
 * projective bundle formula into sum_k H^{j-2k}(O_F, Q(d-k)).
 */
inline long long soule_rank(scheme_descriptor const & x)
{
    if (x.kind != scheme_kind::number_ring && x.kind != scheme_kind::pn_over_number_ring)
        throw unsupported_error("soule_rank: only number rings and P^n over number rings");
    if (!x.inv)
        throw input_error("soule_rank: number field invariants missing");
    int const n = x.kind == scheme_kind::number_ring ? 0 : x.n;
    int const d = n + 1;
    long long total = 0;
    for (int j = 0; j <= 2 * d; ++j) {
        long long dim = 0;
        for (int k = 0; k <= n; ++k)
            dim += motivic_dim(*x.inv, j - 2 * k, d - k);
        total += (j % 2 == 0) ? -dim : dim;
    }
    return total;
}

/* ord_{s=0} zeta(P^n_{O_F}, s) with zeta(P^n_{O_F}, s) = prod_{j=0}^n zeta_F(s - j). */
inline long long pn_of_order(number_field_invariants const & inv, int n)
{
    if (n < 0)
        throw input_error("pn_of_order: n must be nonnegative");
    long long total = 0;
    for (int j = 0; j <= n; ++j)
        total += zeta_order_at(inv, j);
    return total;
}

} // namespace weilzeta
