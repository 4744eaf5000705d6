// Exact field scalars: arbitrary-precision rationals and prime fields GF(p).
//
// Every scalar carries its field descriptor; arithmetic between values of
// different fields throws FieldMismatchError.  All operations are exact.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace obb {

struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational numbers with arbitrary precision, always kept in lowest terms.
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    Rational abs_value() const {
        Rational r;
        r.v_ = v_ < 0 ? -v_ : v_;
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string to_string() const { return v_.str(); }
    std::string field_name() const { return "Q"; }

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod64(r, a, p);
        a = mulmod64(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Element of the prime field GF(p).  The modulus travels with the value.
class GFp {
public:
    GFp(long long value, std::uint64_t p) : p_(p) {
        if (p < 2) throw std::domain_error("prime field modulus must be at least 2");
        long long m = static_cast<long long>(p);
        long long r = value % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    GFp zero() const { return GFp(0, p_); }
    GFp one() const { return GFp(1, p_); }
    GFp from_int(long long n) const { return GFp(n, p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }
    bool is_negative() const { return false; }
    GFp abs_value() const { return *this; }

    GFp operator-() const { return GFp(v_ == 0 ? 0 : static_cast<long long>(p_ - v_), p_); }
    GFp& operator+=(const GFp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    GFp& operator-=(const GFp& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    GFp& operator*=(const GFp& o) {
        check(o);
        v_ = detail::mulmod64(v_, o.v_, p_);
        return *this;
    }
    GFp& operator/=(const GFp& o) {
        check(o);
        if (o.v_ == 0) throw std::domain_error("division by zero");
        v_ = detail::mulmod64(v_, o.inverse_value(), p_);
        return *this;
    }
    friend GFp operator+(GFp a, const GFp& b) { return a += b; }
    friend GFp operator-(GFp a, const GFp& b) { return a -= b; }
    friend GFp operator*(GFp a, const GFp& b) { return a *= b; }
    friend GFp operator/(GFp a, const GFp& b) { return a /= b; }

    bool operator==(const GFp& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const GFp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }
    std::string field_name() const { return "GF(" + std::to_string(p_) + ")"; }

private:
    void check(const GFp& o) const {
        if (p_ != o.p_) {
            throw FieldMismatchError("mixing GF(" + std::to_string(p_) + ") with GF(" + std::to_string(o.p_) + ")");
        }
    }

    // Extended Euclid; p_ is prime in all supported uses.
    std::uint64_t inverse_value() const {
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(v_);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw std::domain_error("element not invertible; modulus not prime?");
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(t);
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const GFp& x) {
    return os << x.to_string();
}

template <class K>
concept ScalarField = requires(const K& a, const K& b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a* b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.zero() } -> std::same_as<K>;
    { a.one() } -> std::same_as<K>;
    { a.from_int(0LL) } -> std::same_as<K>;
    { a.to_string() } -> std::same_as<std::string>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<GFp>);

}  // namespace obb
