// Exact row reduction of polynomial sets viewed as coefficient matrices.
//
// Three pivot rules share one elimination core:
//   - a TermOrdering (the classical leading term),
//   - the canonical order (fast path, pivot is the term map's last entry),
//   - an explicit ColumnOrder (pivot = left-most nonzero column, "head").
#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "order_ideal.hpp"
#include "polynomial.hpp"

namespace obb {

// An explicit left-to-right column layout over a finite monomial set.
class ColumnOrder {
public:
    explicit ColumnOrder(std::vector<Monomial> columns) : cols_(std::move(columns)) {
        pos_.reserve(cols_.size());
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (!pos_.emplace(cols_[i], i).second) throw std::invalid_argument("duplicate column monomial");
        }
    }

    // Degree-descending, canonically descending within a degree.
    static ColumnOrder canonical(int arity, int max_degree) { return ColumnOrder(monomials_up_to(arity, max_degree)); }

    const std::vector<Monomial>& columns() const { return cols_; }
    std::size_t size() const { return cols_.size(); }

    bool contains(const Monomial& m) const { return pos_.count(m) != 0; }

    std::size_t position(const Monomial& m) const {
        auto it = pos_.find(m);
        if (it == pos_.end()) throw std::invalid_argument("monomial is not a column: " + m.str());
        return it->second;
    }

    // Left-most column with a nonzero coefficient.
    template <ScalarField K>
    Monomial leftmost(const Polynomial<K>& p) const {
        p.require_nonzero();
        const Monomial* best = nullptr;
        std::size_t best_pos = 0;
        for (const auto& [m, c] : p.terms()) {
            std::size_t q = position(m);
            if (best == nullptr || q < best_pos) {
                best = &m;
                best_pos = q;
            }
        }
        return *best;
    }

private:
    std::vector<Monomial> cols_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos_;
};

// Rows plus an explicit ordered column list covering every support.
template <ScalarField K>
struct CoeffMatrix {
    std::vector<Polynomial<K>> rows;
    std::vector<Monomial> columns;
};

template <ScalarField K>
CoeffMatrix<K> make_coeff_matrix(std::vector<Polynomial<K>> rows, std::vector<Monomial> columns) {
    std::unordered_set<Monomial, MonomialHash> cols(columns.begin(), columns.end());
    if (cols.size() != columns.size()) throw std::invalid_argument("duplicate column monomial");
    for (const auto& r : rows) {
        for (const auto& [m, c] : r.terms()) {
            if (!cols.count(m)) throw std::invalid_argument("row supported outside the column list");
        }
    }
    return CoeffMatrix<K>{std::move(rows), std::move(columns)};
}

namespace detail {

// Pivot rules.  pivot() returns the maximal support monomial; less() is the
// underlying total order on monomials.
struct CanonicalPivot {
    template <ScalarField K>
    Monomial pivot(const Polynomial<K>& p) const {
        return p.canonical_leading_term();
    }
    bool less(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

struct OrderingPivot {
    const TermOrdering* ord;
    template <ScalarField K>
    Monomial pivot(const Polynomial<K>& p) const {
        return leading_term(p, *ord);
    }
    bool less(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

struct ColumnPivot {
    const ColumnOrder* order;
    template <ScalarField K>
    Monomial pivot(const Polynomial<K>& p) const {
        return order->leftmost(p);
    }
    // Left of means larger.
    bool less(const Monomial& a, const Monomial& b) const { return order->position(a) > order->position(b); }
};

// Work-list Gaussian elimination.  Seeds must already have unit pivot
// coefficients and pairwise distinct pivots; the work list is processed
// first-in-first-out.  Returns the newly accepted rows in acceptance order;
// `all` accumulates seeds followed by the new rows.
template <ScalarField K, class Pivot>
std::vector<Polynomial<K>> eliminate(std::vector<Polynomial<K>>& all,
                                     std::unordered_map<Monomial, std::size_t, MonomialHash>& by_pivot,
                                     std::deque<Polynomial<K>> work, const Pivot& pv) {
    std::vector<Polynomial<K>> fresh;
    while (!work.empty()) {
        Polynomial<K> f = std::move(work.front());
        work.pop_front();
        while (!f.is_zero()) {
            Monomial h = pv.pivot(f);
            auto it = by_pivot.find(h);
            if (it == by_pivot.end()) break;
            K c = *f.coefficient(h);
            f.add_scaled(all[it->second], -c);
        }
        if (f.is_zero()) continue;
        Monomial h = pv.pivot(f);
        K inv = f.coefficient(h)->one() / *f.coefficient(h);
        Polynomial<K> unit = f.scaled(inv);
        by_pivot.emplace(h, all.size());
        all.push_back(unit);
        fresh.push_back(std::move(unit));
    }
    return fresh;
}

// Full interreduction of an echelon set: afterwards no row's pivot occurs in
// any other row.  Rows are processed by ascending pivot so one pass suffices.
template <ScalarField K, class Pivot>
void back_substitute(std::vector<Polynomial<K>>& rows, std::unordered_map<Monomial, std::size_t, MonomialHash>& by_pivot,
                     const Pivot& pv) {
    std::vector<std::size_t> idx(rows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pv.less(pv.pivot(rows[a]), pv.pivot(rows[b])); });
    for (std::size_t i : idx) {
        Polynomial<K>& r = rows[i];
        Monomial own = pv.pivot(r);
        std::vector<std::pair<Monomial, K>> hits;
        for (const auto& [m, c] : r.terms()) {
            if (m == own) continue;
            if (by_pivot.count(m)) hits.emplace_back(m, c);
        }
        for (const auto& [m, c] : hits) r.add_scaled(rows[by_pivot.at(m)], -c);
    }
}

template <ScalarField K, class Pivot>
std::vector<Polynomial<K>> reduced_echelon(const std::vector<Polynomial<K>>& input, const Pivot& pv) {
    std::vector<Polynomial<K>> all;
    std::unordered_map<Monomial, std::size_t, MonomialHash> by_pivot;
    std::deque<Polynomial<K>> work(input.begin(), input.end());
    eliminate(all, by_pivot, std::move(work), pv);
    back_substitute(all, by_pivot, pv);
    // Rows sorted by descending pivot: the matrix picture reads top-down.
    std::sort(all.begin(), all.end(),
              [&](const Polynomial<K>& a, const Polynomial<K>& b) { return pv.less(pv.pivot(b), pv.pivot(a)); });
    return all;
}

}  // namespace detail

// Algorithm: Gaussian elimination for polynomials.  V must have unit leading
// coefficients and pairwise distinct leading terms; returns W such that
// span(V u W) = span(V u G), with all leading terms distinct across V u W.
template <ScalarField K>
std::vector<Polynomial<K>> gauss_el(const std::vector<Polynomial<K>>& v, const std::vector<Polynomial<K>>& g,
                                    const TermOrdering& ord) {
    detail::OrderingPivot pv{&ord};
    std::vector<Polynomial<K>> all;
    std::unordered_map<Monomial, std::size_t, MonomialHash> by_pivot;
    for (const auto& p : v) {
        if (p.is_zero()) throw std::invalid_argument("seed rows must be nonzero");
        Monomial h = leading_term(p, ord);
        if (!p.coefficient(h)->is_one()) throw std::invalid_argument("seed rows must have unit leading coefficient");
        if (!by_pivot.emplace(h, all.size()).second) throw std::invalid_argument("seed rows must have distinct leading terms");
        all.push_back(p);
    }
    std::deque<Polynomial<K>> work(g.begin(), g.end());
    return detail::eliminate(all, by_pivot, std::move(work), pv);
}

template <ScalarField K>
std::vector<Polynomial<K>> gauss_el(const std::vector<Polynomial<K>>& v, const std::vector<Polynomial<K>>& g) {
    int arity = !v.empty() ? v.front().arity() : (!g.empty() ? g.front().arity() : 1);
    return gauss_el(v, g, TermOrdering(OrderKind::degrevlex, arity));
}

// Echelon basis under the canonical order with O(1) pivot access; the shared
// workhorse for stable spans, rank queries and the polytope machinery.
template <ScalarField K>
class EchelonSpan {
public:
    std::size_t size() const { return rows_.size(); }
    const std::vector<Polynomial<K>>& rows() const { return rows_; }
    const Polynomial<K>& row(std::size_t i) const { return rows_[i]; }
    bool has_pivot(const Monomial& m) const { return by_pivot_.count(m) != 0; }

    // Cancel leading terms of p against the basis.  The result is either zero
    // or has a pivot not present in the basis.
    Polynomial<K> reduce(Polynomial<K> p) const {
        while (!p.is_zero()) {
            auto it = by_pivot_.find(p.canonical_leading_term());
            if (it == by_pivot_.end()) break;
            K c = p.canonical_leading_coefficient();
            p.add_scaled(rows_[it->second], -c);
        }
        return p;
    }

    // Reduce and, if nonzero remains, insert it normalized.  Returns false if
    // p lies in the span already.
    bool insert(Polynomial<K> p) {
        p = reduce(std::move(p));
        if (p.is_zero()) return false;
        K inv = p.canonical_leading_coefficient().one() / p.canonical_leading_coefficient();
        Polynomial<K> unit = p.scaled(inv);
        by_pivot_.emplace(unit.canonical_leading_term(), rows_.size());
        rows_.push_back(std::move(unit));
        return true;
    }

    bool contains(const Polynomial<K>& p) const { return reduce(p).is_zero(); }

    // Drop the most recently inserted row (stack discipline).
    void pop_back() {
        by_pivot_.erase(rows_.back().canonical_leading_term());
        rows_.pop_back();
    }

    // Remove, among rows at index >= from, those of degree above max_degree.
    void drop_high_degree_rows(std::size_t from, int max_degree) {
        std::size_t w = from;
        for (std::size_t r = from; r < rows_.size(); ++r) {
            if (rows_[r].degree() > max_degree) {
                by_pivot_.erase(rows_[r].canonical_leading_term());
            } else {
                by_pivot_[rows_[r].canonical_leading_term()] = w;
                if (w != r) rows_[w] = std::move(rows_[r]);
                ++w;
            }
        }
        rows_.resize(w);
    }

private:
    std::vector<Polynomial<K>> rows_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> by_pivot_;
};

// Row spaces compared by mutual membership.
template <ScalarField K>
bool spans_equal(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
    EchelonSpan<K> ea, eb;
    for (const auto& p : a) ea.insert(p);
    for (const auto& p : b) eb.insert(p);
    if (ea.size() != eb.size()) return false;
    for (const auto& p : a) {
        if (!eb.contains(p)) return false;
    }
    for (const auto& p : b) {
        if (!ea.contains(p)) return false;
    }
    return true;
}

// Canonical form: same row space, fully interreduced, each row's leading term
// (canonically maximal term, hence of maximal degree) occurs in no other row.
// Columns list all monomials up to the maximum degree, left = higher degree.
template <ScalarField K>
CoeffMatrix<K> canonical_form(const std::vector<Polynomial<K>>& m) {
    CoeffMatrix<K> out{{}, {}};
    int arity = 0, max_deg = -1;
    for (const auto& p : m) {
        if (p.is_zero()) continue;
        arity = p.arity();
        max_deg = std::max(max_deg, p.degree());
    }
    if (max_deg < 0) return out;
    out.rows = detail::reduced_echelon(m, detail::CanonicalPivot{});
    out.columns = monomials_up_to(arity, max_deg);
    return out;
}

// Exact rank of the submatrix of M with columns restricted to `cols`.
template <ScalarField K>
std::size_t rank(const CoeffMatrix<K>& m, const std::vector<Monomial>& cols) {
    std::unordered_set<Monomial, MonomialHash> allowed;
    std::unordered_set<Monomial, MonomialHash> have(m.columns.begin(), m.columns.end());
    for (const Monomial& c : cols) {
        if (!have.count(c)) throw std::invalid_argument("rank query column is not a matrix column: " + c.str());
        allowed.insert(c);
    }
    EchelonSpan<K> span;
    for (const auto& r : m.rows) {
        Polynomial<K> restricted(r.arity());
        for (const auto& [mono, c] : r.terms()) {
            if (allowed.count(mono)) restricted.add_term(mono, c);
        }
        span.insert(std::move(restricted));
    }
    return span.size();
}

}  // namespace obb
