#pragma once

// Finitely generated abelian groups, integer Smith normal form and bounded
// graded tables of groups with their rank / torsion Euler characteristics.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta {

class int_matrix
{
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<big_int> entries_;

    public:

    int_matrix() = default;

    int_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols)
    {
    }

    int_matrix(std::initializer_list<std::initializer_list<long long>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        entries_.reserve(rows_ * cols_);
        for (auto const & row : rows) {
            if (row.size() != cols_)
                throw input_error("int_matrix: ragged initializer");
            for (long long x : row)
                entries_.emplace_back(x);
        }
    }

    int_matrix(std::size_t rows, std::size_t cols, std::vector<big_int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw input_error("int_matrix: entry count does not match shape");
    }

    static int_matrix identity(std::size_t n)
    {
        int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<big_int> const & entries() const { return entries_; }

    big_int & operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    big_int const & operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(int_matrix const &) const = default;

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0)
                    return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /* row[dst] += factor * row[src] */
    void add_row(std::size_t dst, std::size_t src, big_int const & factor)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) += factor * (*this)(src, j);
    }

    /* col[dst] += factor * col[src] */
    void add_col(std::size_t dst, std::size_t src, big_int const & factor)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += factor * (*this)(i, src);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }

    friend int_matrix operator*(int_matrix const & a, int_matrix const & b)
    {
        if (a.cols_ != b.rows_)
            throw input_error("int_matrix: shape mismatch in product");
        int_matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
};

/* Fraction-free (Bareiss) determinant of a square matrix. */
inline big_int determinant(int_matrix m)
{
    if (m.rows() != m.cols())
        throw input_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    big_int sign = 1;
    big_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct smith_form {
    int_matrix u;
    int_matrix d;
    int_matrix v;

    /* Nonzero diagonal entries d_1 | d_2 | ... */
    std::vector<big_int> nonzero_diagonal() const
    {
        std::vector<big_int> out;
        for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
            if (d(i, i) != 0)
                out.push_back(d(i, i));
        return out;
    }
};

/*
 * Returns unimodular U, V and diagonal D with U * M * V = D, the diagonal
 * entries nonnegative and forming a divisibility chain.
 */
inline smith_form smith_normal_form(int_matrix const & m)
{
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    smith_form s{int_matrix::identity(rows), m, int_matrix::identity(cols)};
    int_matrix & d = s.d;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0
                        && (!pivot || abs(d(i, j)) < abs(d(pivot->first, pivot->second))))
                        pivot = {i, j};
            if (!pivot)
                return s;
            d.swap_rows(t, pivot->first);
            s.u.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            s.v.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                big_int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    s.u.add_row(i, t, -q);
                }
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                big_int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    s.v.add_col(j, t, -q);
                }
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            d.add_row(t, *bad_row, 1);
            s.u.add_row(t, *bad_row, 1);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

/*
 * A finitely generated abelian group Z^rank + (finite group of order
 * torsion_order). The invariant factors are kept only when the group was
 * built from an explicit presentation; extensions record the order alone.
 * torsion_known = false marks an order that was not supplied (stored as 1).
 */
struct fg_ab {
    std::size_t rank = 0;
    big_int torsion_order = 1;
    std::optional<std::vector<big_int>> factors;
    bool torsion_known = true;

    static fg_ab zero() { return fg_ab{}; }

    static fg_ab free(std::size_t r) { return fg_ab{r, 1, std::vector<big_int>{}, true}; }

    static fg_ab cyclic(big_int const & n)
    {
        if (n < 1)
            throw input_error("cyclic group order must be positive");
        std::vector<big_int> f;
        if (n > 1)
            f.push_back(n);
        return fg_ab{0, n, f, true};
    }

    static fg_ab from_factors(std::size_t r, std::vector<big_int> const & factors)
    {
        std::vector<big_int> kept;
        big_int order = 1;
        for (auto const & f : factors) {
            if (f < 1)
                throw input_error("invariant factors must be positive");
            if (f == 1)
                continue;
            if (!kept.empty() && f % kept.back() != 0)
                throw input_error("invariant factors must form a divisibility chain");
            kept.push_back(f);
            order *= f;
        }
        return fg_ab{r, order, kept, true};
    }

    /* Rank r with a torsion subgroup whose order is not known. */
    static fg_ab unknown_torsion(std::size_t r) { return fg_ab{r, 1, std::nullopt, false}; }

    /* Z^cols modulo the row span of the relation matrix. */
    static fg_ab from_presentation(int_matrix const & relations)
    {
        auto diag = smith_normal_form(relations).nonzero_diagonal();
        return from_factors(relations.cols() - diag.size(), diag);
    }

    bool is_zero() const { return rank == 0 && torsion_order == 1 && torsion_known; }

    bool operator==(fg_ab const &) const = default;
};

/* Middle term of 0 -> sub -> B -> quot -> 0, known up to its extension class. */
inline fg_ab extend(fg_ab const & sub, fg_ab const & quot)
{
    return fg_ab{sub.rank + quot.rank, sub.torsion_order * quot.torsion_order, std::nullopt,
                 sub.torsion_known && quot.torsion_known};
}

/* Sparse cohomology table i -> H^i of a scheme of dimension dim. */
class graded_table
{
    std::map<int, fg_ab> entries_;
    int dim_ = 0;
    std::vector<std::string> notes_;

    public:

    graded_table() = default;
    explicit graded_table(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int delta() const { return 2 * dim_ + 2; }

    /* Zero groups are not stored. */
    void set(int degree, fg_ab g)
    {
        if (g.is_zero())
            entries_.erase(degree);
        else
            entries_[degree] = std::move(g);
    }

    fg_ab at(int degree) const
    {
        auto it = entries_.find(degree);
        return it == entries_.end() ? fg_ab::zero() : it->second;
    }

    std::map<int, fg_ab> const & entries() const { return entries_; }

    std::vector<std::string> const & notes() const { return notes_; }
    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    bool has_unknown_torsion() const
    {
        return std::any_of(entries_.begin(), entries_.end(),
                           [](auto const & e) { return !e.second.torsion_known; });
    }

    bool operator==(graded_table const &) const = default;
};

/* sum_i (-1)^i * i * rank H^i */
inline long long rank_weighted_euler(graded_table const & t)
{
    long long total = 0;
    for (auto const & [i, g] : t.entries()) {
        long long term = static_cast<long long>(i) * static_cast<long long>(g.rank);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

/* prod_i |H^i_tors|^((-1)^i); unknown torsion contributes 1. */
inline rational torsion_euler(graded_table const & t)
{
    rational r = 1;
    for (auto const & [i, g] : t.entries()) {
        if (i % 2 == 0)
            r *= g.torsion_order;
        else
            r /= g.torsion_order;
    }
    return r;
}

/* Degree-wise direct sum; the dimension of the first table is kept. */
inline graded_table direct_sum(graded_table const & a, graded_table const & b)
{
    graded_table out(a.dim());
    std::map<int, fg_ab> merged = a.entries();
    for (auto const & [i, g] : b.entries()) {
        auto it = merged.find(i);
        if (it == merged.end()) {
            merged[i] = g;
            continue;
        }
        fg_ab sum{it->second.rank + g.rank, it->second.torsion_order * g.torsion_order, std::nullopt,
                  it->second.torsion_known && g.torsion_known};
        if (it->second.factors && g.factors) {
            // diag(f, g) re-normalised through Smith form
            std::vector<big_int> all = *it->second.factors;
            all.insert(all.end(), g.factors->begin(), g.factors->end());
            int_matrix m(all.size(), all.size());
            for (std::size_t k = 0; k < all.size(); ++k)
                m(k, k) = all[k];
            sum.factors = fg_ab::from_presentation(m).factors;
        }
        it->second = sum;
    }
    for (auto & [i, g] : merged)
        out.set(i, g);
    return out;
}

} // namespace weilzeta
