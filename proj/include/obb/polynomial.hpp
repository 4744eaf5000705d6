// Sparse multivariate polynomials over an exact scalar field.
//
// Terms are kept in a map ordered by the canonical monomial order, so the
// canonically largest term is always *rbegin and iteration is deterministic.
// No zero coefficient is ever stored; the zero polynomial has no terms.
#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordering.hpp"
#include "scalar.hpp"

namespace obb {

template <ScalarField K>
class Polynomial {
public:
    using TermMap = std::map<Monomial, K, CanonicalLess>;

    explicit Polynomial(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("arity must be at least 1");
    }

    Polynomial(const Monomial& m, const K& coeff) : arity_(m.arity()) {
        if (!coeff.is_zero()) terms_.emplace(m, coeff);
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    const K* coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // this += c * other
    void add_scaled(const Polynomial& other, const K& c) {
        require_same_arity(other);
        if (c.is_zero()) return;
        for (const auto& [m, a] : other.terms_) add_term(m, a * c);
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, a] : o.terms_) add_term(m, a);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, a] : o.terms_) add_term(m, -a);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(arity_);
        for (const auto& [m, a] : terms_) r.terms_.emplace(m, -a);
        return r;
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(arity_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
        return r;
    }

    Polynomial times(const Monomial& m) const {
        if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
        Polynomial r(arity_);
        for (const auto& [t, a] : terms_) r.terms_.emplace(t * m, a);
        return r;
    }

    Polynomial times_variable(int var) const {
        Polynomial r(arity_);
        for (const auto& [t, a] : terms_) r.terms_.emplace(t.times_variable(var), a);
        return r;
    }

    // Canonically largest term; the library-internal leading term.
    const Monomial& canonical_leading_term() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }
    const K& canonical_leading_coefficient() const {
        require_nonzero();
        return terms_.rbegin()->second;
    }

    bool operator==(const Polynomial& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Deterministic text form, canonically largest term first.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const K& c = it->second;
            bool neg = c.is_negative();
            K mag = c.abs_value();
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (it->first.is_one()) {
                s += mag.to_string();
            } else if (mag.is_one()) {
                s += it->first.str();
            } else {
                s += mag.to_string() + "*" + it->first.str();
            }
        }
        return s;
    }

    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("operation undefined for the zero polynomial");
    }
    void require_same_arity(const Polynomial& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    }

private:
    int arity_;
    TermMap terms_;
};

template <ScalarField K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
    return os << p.str();
}

// Largest monomial of supp(p) under the given term ordering.
template <ScalarField K>
Monomial leading_term(const Polynomial<K>& p, const TermOrdering& ord) {
    p.require_nonzero();
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (best == nullptr || ord.less(*best, m)) best = &m;
    }
    return *best;
}

template <ScalarField K>
K leading_coefficient(const Polynomial<K>& p, const TermOrdering& ord) {
    return *p.coefficient(leading_term(p, ord));
}

// Sum of the maximum-degree terms of p.
template <ScalarField K>
Polynomial<K> leading_form(const Polynomial<K>& p) {
    p.require_nonzero();
    Polynomial<K> r(p.arity());
    int d = p.degree();
    for (auto it = p.terms().rbegin(); it != p.terms().rend() && it->first.degree() == d; ++it) {
        r.add_term(it->first, it->second);
    }
    return r;
}

template <ScalarField K>
std::vector<Monomial> support(const Polynomial<K>& p) {
    std::vector<Monomial> s;
    s.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) s.push_back(m);
    return s;
}

}  // namespace obb
