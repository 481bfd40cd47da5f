#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "ramval/errors.hpp"

namespace ramval {

/// Exact rational number over int64, always reduced, denominator positive.
///
/// All group values, series exponents and ideal bounds are Rats. Overflow is
/// detected (intermediates run through __int128) and reported instead of
/// wrapping.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw DivisionByZero("rational division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = (__int128)a.num_ * b.den_;
        __int128 r = (__int128)b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer <= *this.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Exponent of the prime q in the factorization of this nonzero rational
    /// (negative when q divides the denominator).
    int adic_valuation(std::int64_t q) const {
        if (num_ == 0) throw InvalidInput("adic valuation of zero");
        int v = 0;
        for (std::int64_t n = num_ < 0 ? -num_ : num_; n % q == 0; n /= q) ++v;
        for (std::int64_t d = den_; d % q == 0; d /= q) --v;
        return v;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "a" or "a/b". Throws InvalidInput on malformed text.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                std::int64_t n = std::stoll(s, &used);
                if (used != s.size()) throw InvalidInput("trailing characters in rational: " + s);
                return Rat(n);
            }
            std::int64_t n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw InvalidInput("bad numerator in rational: " + s);
            std::string ds = s.substr(slash + 1);
            std::int64_t d = std::stoll(ds, &used);
            if (used != ds.size()) throw InvalidInput("bad denominator in rational: " + s);
            return Rat(n, d);
        } catch (const std::logic_error&) {
            throw InvalidInput("cannot parse rational: '" + s + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw DivisionByZero("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }
    static Rat make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// gcd of two nonnegative rationals: generator of the group Z*a + Z*b.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    std::int64_t d = std::lcm(a.den(), b.den());
    std::int64_t na = a.num() * (d / a.den());
    std::int64_t nb = b.num() * (d / b.den());
    return Rat(std::gcd(na < 0 ? -na : na, nb < 0 ? -nb : nb), d);
}

} // namespace ramval
