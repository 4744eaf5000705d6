// Monomials as exponent vectors over a fixed number of variables x1..xn.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace obb {

class Monomial {
public:
    // The constant monomial 1.
    explicit Monomial(int arity) : e_(check_arity(arity), 0), degree_(0) {}

    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        check_arity(static_cast<int>(e_.size()));
        degree_ = 0;
        for (int x : e_) {
            if (x < 0) throw std::invalid_argument("negative exponent in monomial");
            degree_ += x;
        }
    }

    // var is 0-based: variable(n, 0) is x1.
    static Monomial variable(int arity, int var) { return power(arity, var, 1); }

    static Monomial power(int arity, int var, int exp) {
        Monomial m(arity);
        if (var < 0 || var >= arity) throw std::invalid_argument("variable index out of range");
        if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
        m.e_[static_cast<std::size_t>(var)] = exp;
        m.degree_ = exp;
        return m;
    }

    int arity() const { return static_cast<int>(e_.size()); }
    int degree() const { return degree_; }
    int exponent(int var) const { return e_[static_cast<std::size_t>(var)]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        require_same_arity(o);
        Monomial r(arity());
        for (int i = 0; i < arity(); ++i) r.e_[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)];
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    Monomial times_variable(int var) const {
        Monomial r = *this;
        r.e_.at(static_cast<std::size_t>(var)) += 1;
        r.degree_ += 1;
        return r;
    }

    // Quotient this / o when o divides this, otherwise nullopt.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        require_same_arity(o);
        Monomial r(arity());
        for (int i = 0; i < arity(); ++i) {
            int d = e_[static_cast<std::size_t>(i)] - o.e_[static_cast<std::size_t>(i)];
            if (d < 0) return std::nullopt;
            r.e_[static_cast<std::size_t>(i)] = d;
        }
        r.degree_ = degree_ - o.degree_;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // Canonical text form: "1", "x2", "x1^2*x3".
    std::string str() const {
        std::string s;
        for (int i = 0; i < arity(); ++i) {
            int e = exponent(i);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

    void require_same_arity(const Monomial& o) const {
        if (arity() != o.arity()) throw std::invalid_argument("monomial arity mismatch");
    }

private:
    static int check_arity(int arity) {
        if (arity < 1) throw std::invalid_argument("arity must be at least 1");
        return arity;
    }

    std::vector<int> e_;
    int degree_;
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

// True iff every exponent of a is at most the matching exponent of b.
inline bool divides(const Monomial& a, const Monomial& b) {
    a.require_same_arity(b);
    for (int i = 0; i < a.arity(); ++i) {
        if (a.exponent(i) > b.exponent(i)) return false;
    }
    return true;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(m.arity());
        for (int x : m.exponents()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// C(arity + d, arity), the number of monomials of degree at most d.
inline long long count_monomials_up_to(int arity, int d) {
    if (d < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= arity; ++i) {
        r = r * (d + i) / i;
    }
    return r;
}

}  // namespace obb
