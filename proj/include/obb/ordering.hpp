// Term orderings and the canonical global monomial order.
//
// The canonical order (degree first, then degrevlex with x1 > x2 > ... > xn)
// fixes matrix column layouts, term-map iteration and every tie-break in the
// library, so identical inputs always produce identical outputs.
#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "monomial.hpp"

namespace obb {

// a < b in degrevlex over the given significance ranking.
// ranking[r] is the 0-based variable holding significance rank r (rank 0 highest).
inline bool degrevlex_less(const Monomial& a, const Monomial& b, const std::vector<int>& ranking) {
    assert(a.arity() == b.arity());
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int r = static_cast<int>(ranking.size()) - 1; r >= 0; --r) {
        int v = ranking[static_cast<std::size_t>(r)];
        int d = a.exponent(v) - b.exponent(v);
        if (d != 0) return d > 0;
    }
    return false;
}

inline bool canonical_less(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int v = a.arity() - 1; v >= 0; --v) {
        int d = a.exponent(v) - b.exponent(v);
        if (d != 0) return d > 0;
    }
    return false;
}

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

enum class OrderKind { degrevlex, deglex, lex };

class TermOrdering {
public:
    TermOrdering(OrderKind kind, int arity) : kind_(kind), ranking_(static_cast<std::size_t>(arity)) {
        std::iota(ranking_.begin(), ranking_.end(), 0);
    }

    // ranking[r] = variable (0-based) with significance rank r; rank 0 is largest.
    TermOrdering(OrderKind kind, std::vector<int> ranking) : kind_(kind), ranking_(std::move(ranking)) {
        std::vector<int> seen(ranking_.size(), 0);
        for (int v : ranking_) {
            if (v < 0 || v >= static_cast<int>(ranking_.size()) || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("variable ranking is not a permutation");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    OrderKind kind() const { return kind_; }
    int arity() const { return static_cast<int>(ranking_.size()); }
    bool is_degree_compatible() const { return kind_ != OrderKind::lex; }

    bool less(const Monomial& a, const Monomial& b) const {
        assert(a.arity() == arity() && b.arity() == arity());
        switch (kind_) {
            case OrderKind::degrevlex:
                return degrevlex_less(a, b, ranking_);
            case OrderKind::deglex:
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                return lex_less(a, b);
            case OrderKind::lex:
                return lex_less(a, b);
        }
        return false;
    }

private:
    bool lex_less(const Monomial& a, const Monomial& b) const {
        for (int v : ranking_) {
            int d = a.exponent(v) - b.exponent(v);
            if (d != 0) return d < 0;
        }
        return false;
    }

    OrderKind kind_;
    std::vector<int> ranking_;
};

// All monomials of the given total degree, canonically descending.
inline std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    // Enumerate exponent vectors recursively, then sort into canonical order.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == arity - 1) {
            e[static_cast<std::size_t>(var)] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int x = remaining; x >= 0; --x) {
            e[static_cast<std::size_t>(var)] = x;
            self(self, var + 1, remaining - x);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return canonical_less(b, a); });
    return out;
}

// All monomials of degree <= d: degree descending, canonically descending
// within each degree.  This is the matrix column convention everywhere.
inline std::vector<Monomial> monomials_up_to(int arity, int d) {
    std::vector<Monomial> out;
    for (int deg = d; deg >= 0; --deg) {
        auto level = monomials_of_degree(arity, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace obb
