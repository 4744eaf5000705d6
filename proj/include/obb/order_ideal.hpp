// Order ideals: finite monomial sets closed under taking divisors.
#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ordering.hpp"

namespace obb {

// True iff the set is closed under factors.  The empty set qualifies.
inline bool is_order_ideal(const std::vector<Monomial>& s) {
    if (s.empty()) return true;
    std::unordered_set<Monomial, MonomialHash> members(s.begin(), s.end());
    for (const Monomial& m : s) {
        for (int v = 0; v < m.arity(); ++v) {
            if (m.exponent(v) == 0) continue;
            Monomial q(m.exponents());
            auto down = q.divided_by(Monomial::variable(m.arity(), v));
            if (!members.count(*down)) return false;
        }
    }
    return true;
}

// Factor-closed by construction; elements are kept canonically ascending.
class OrderIdeal {
public:
    explicit OrderIdeal(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("arity must be at least 1");
    }

    OrderIdeal(int arity, std::vector<Monomial> elements) : OrderIdeal(arity) {
        for (const Monomial& m : elements) {
            if (m.arity() != arity) throw std::invalid_argument("monomial arity mismatch in order ideal");
        }
        std::sort(elements.begin(), elements.end(), CanonicalLess{});
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (!is_order_ideal(elements)) throw std::invalid_argument("set is not closed under factors");
        elems_ = std::move(elements);
    }

    int arity() const { return arity_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<Monomial>& elements() const { return elems_; }
    int max_degree() const { return elems_.empty() ? -1 : elems_.back().degree(); }

    bool contains(const Monomial& m) const {
        return std::binary_search(elems_.begin(), elems_.end(), m, CanonicalLess{});
    }

    std::vector<Monomial> slice(int degree) const {
        std::vector<Monomial> out;
        for (const Monomial& m : elems_) {
            if (m.degree() == degree) out.push_back(m);
        }
        return out;
    }

    bool operator==(const OrderIdeal& o) const { return arity_ == o.arity_ && elems_ == o.elems_; }
    bool operator!=(const OrderIdeal& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (const Monomial& m : elems_) {
            if (!s.empty()) s += ", ";
            s += m.str();
        }
        return s;
    }

private:
    int arity_;
    std::vector<Monomial> elems_;
};

inline std::ostream& operator<<(std::ostream& os, const OrderIdeal& o) { return os << "{" << o.str() << "}"; }

// Border of an order ideal; the border of the empty order ideal is {1}.
inline std::vector<Monomial> border(const OrderIdeal& o) {
    if (o.empty()) return {Monomial(o.arity())};
    std::vector<Monomial> out;
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const Monomial& t : o.elements()) {
        for (int v = 0; v < o.arity(); ++v) {
            Monomial b = t.times_variable(v);
            if (!o.contains(b) && seen.insert(b).second) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

// Degree compatibility against an ideal's filtration.
// filtration_dims[i] = dim I^{<= i}; entries must reach max_degree(O).
inline bool is_degree_compatible(const OrderIdeal& o, const std::vector<long long>& filtration_dims) {
    int top = std::max(o.max_degree(), 0);
    if (static_cast<int>(filtration_dims.size()) <= top) {
        throw std::invalid_argument("filtration dimensions missing for some degree");
    }
    for (int i = 0; i < static_cast<int>(filtration_dims.size()); ++i) {
        long long graded_ideal = filtration_dims[static_cast<std::size_t>(i)] - (i == 0 ? 0 : filtration_dims[static_cast<std::size_t>(i - 1)]);
        long long slice_count = static_cast<long long>(o.slice(i).size());
        long long full = static_cast<long long>(monomials_of_degree(o.arity(), i).size());
        if (slice_count != full - graded_ideal) return false;
    }
    return true;
}

}  // namespace obb
