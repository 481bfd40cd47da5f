#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ramval/errors.hpp"

namespace ramval {

/// Arithmetic context for F_q, q = p^m, with a fixed defining polynomial.
///
/// Elements are packed base p: rep = c0 + c1*p + ... + c_{m-1}*p^{m-1} for
/// the residue class c0 + c1*X + ... modulo the defining polynomial, which is
/// chosen as the monic irreducible of degree m whose packed non-leading
/// coefficients are smallest. Fields up to q = 2^16 are supported.
class FqField {
public:
    static const FqField& get(std::uint32_t q) {
        static std::map<std::uint32_t, FqField> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, FqField(q)).first;
        return it->second;
    }

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return m_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i, mul *= p_) {
            std::uint32_t da = (a / mul) % p_, db = (b / mul) % p_;
            r += ((da + db) % p_) * mul;
        }
        return r;
    }
    std::uint32_t neg(std::uint32_t a) const {
        std::uint32_t r = 0, mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i, mul *= p_) {
            std::uint32_t da = (a / mul) % p_;
            r += ((p_ - da) % p_) * mul;
        }
        return r;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return (std::uint32_t)(((std::uint64_t)a * b) % p_);
        // schoolbook product of the coefficient vectors, reduced mod the
        // defining polynomial
        std::vector<std::uint32_t> pa = unpack(a), pb = unpack(b);
        std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        reduce(prod);
        return pack(prod);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero field element");
        return pow(a, q_ - 2);
    }

    std::uint32_t from_int(std::int64_t k) const {
        std::int64_t r = k % (std::int64_t)p_;
        if (r < 0) r += p_;
        return (std::uint32_t)r;
    }

    std::string str(std::uint32_t a) const {
        if (m_ == 1) return std::to_string(a);
        std::string s = "(";
        std::uint32_t mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i, mul *= p_) {
            if (i) s += ",";
            s += std::to_string((a / mul) % p_);
        }
        return s + ")";
    }

private:
    explicit FqField(std::uint32_t q) : q_(q) {
        if (q < 2 || q > (1u << 16)) throw InvalidInput("field order out of range");
        std::uint32_t p = smallest_prime_factor(q);
        std::uint32_t m = 0, t = q;
        while (t > 1) {
            if (t % p != 0) throw InvalidInput("field order is not a prime power");
            t /= p;
            ++m;
        }
        p_ = p;
        m_ = m;
        if (m_ > 1) find_modulus();
    }

    static std::uint32_t smallest_prime_factor(std::uint32_t n) {
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    std::vector<std::uint32_t> unpack(std::uint32_t a) const {
        std::vector<std::uint32_t> v(m_);
        for (std::uint32_t i = 0; i < m_; ++i) { v[i] = a % p_; a /= p_; }
        return v;
    }
    std::uint32_t pack(const std::vector<std::uint32_t>& v) const {
        std::uint32_t a = 0, mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i, mul *= p_) a += v[i] * mul;
        return a;
    }

    // reduces a coefficient vector of degree < 2m-1 by the monic modulus
    void reduce(std::vector<std::uint32_t>& v) const {
        for (size_t i = v.size(); i-- > m_;) {
            std::uint32_t c = v[i];
            if (!c) continue;
            v[i] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint32_t sub = (c * modulus_[j]) % p_;
                v[i - m_ + j] = (v[i - m_ + j] + p_ - sub) % p_;
            }
        }
        v.resize(m_);
    }

    bool poly_has_root(const std::vector<std::uint32_t>& f) const {
        for (std::uint32_t x = 0; x < p_; ++x) {
            std::uint64_t acc = 0;
            for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p_;
            if (acc == 0) return true;
        }
        return false;
    }

    // plain trial division by all monic polynomials of degree <= deg(f)/2
    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        std::uint32_t deg = (std::uint32_t)f.size() - 1;
        if (deg <= 3) return !poly_has_root(f); // degree 2,3: no root <=> irreducible
        for (std::uint32_t d = 2; d <= deg / 2; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < d; ++i) { g[i] = c % p_; c /= p_; }
                g[d] = 1;
                if (poly_divides(g, f)) return false;
            }
        }
        return !poly_has_root(f);
    }

    bool poly_divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f) const {
        std::uint32_t dg = (std::uint32_t)g.size() - 1;
        while (f.size() >= g.size()) {
            std::uint32_t lead = f.back();
            if (lead) {
                size_t shift = f.size() - g.size();
                for (std::uint32_t j = 0; j <= dg; ++j)
                    f[shift + j] = (f[shift + j] + p_ - (lead * g[j]) % p_) % p_;
            }
            f.pop_back();
        }
        for (auto c : f)
            if (c) return false;
        return true;
    }

    void find_modulus() {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
        for (std::uint64_t code = 1; code < count; ++code) { // constant term must be nonzero
            std::vector<std::uint32_t> f(m_ + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < m_; ++i) { f[i] = c % p_; c /= p_; }
            f[m_] = 1;
            if (f[0] == 0) continue;
            if (poly_irreducible(f)) {
                modulus_.assign(f.begin(), f.end() - 1);
                return;
            }
        }
        throw InvalidInput("no irreducible polynomial found");
    }

    std::uint32_t q_ = 2, p_ = 2, m_ = 1;
    std::vector<std::uint32_t> modulus_; // non-leading coefficients, size m
};

/// An element of F_q. Value type; operations between different fields throw.
class FqElem {
public:
    FqElem() : q_(2), rep_(0) {}
    FqElem(std::uint32_t q, std::uint32_t rep) : q_(q), rep_(rep) {
        if (rep_ >= q_) throw InvalidInput("field element representation out of range");
    }
    static FqElem from_int(std::uint32_t q, std::int64_t k) {
        return FqElem(q, FqField::get(q).from_int(k));
    }
    static FqElem zero(std::uint32_t q) { return FqElem(q, 0); }
    static FqElem one(std::uint32_t q) { return FqElem(q, q > 1 ? 1u : 0u); }

    std::uint32_t q() const { return q_; }
    std::uint32_t rep() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        check(a, b);
        return FqElem(a.q_, FqField::get(a.q_).add(a.rep_, b.rep_));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        check(a, b);
        return FqElem(a.q_, FqField::get(a.q_).sub(a.rep_, b.rep_));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        check(a, b);
        return FqElem(a.q_, FqField::get(a.q_).mul(a.rep_, b.rep_));
    }
    FqElem operator-() const { return FqElem(q_, FqField::get(q_).neg(rep_)); }

    FqElem inv() const { return FqElem(q_, FqField::get(q_).inv(rep_)); }
    FqElem pow(std::uint64_t e) const { return FqElem(q_, FqField::get(q_).pow(rep_, e)); }

    /// Frobenius x -> x^p.
    FqElem frobenius() const { return pow(FqField::get(q_).p()); }

    /// Inverse of Frobenius: the unique y with y^p = x.
    FqElem pth_root() const {
        const auto& F = FqField::get(q_);
        return pow(q_ / F.p());
    }

    /// Membership in the subfield F_qs (qs must be p^k with k | m).
    bool in_subfield(std::uint32_t qs) const {
        if (qs == q_) return true;
        return pow(qs).rep() == rep_;
    }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.q_ == b.q_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
    friend bool operator<(const FqElem& a, const FqElem& b) {
        return a.q_ != b.q_ ? a.q_ < b.q_ : a.rep_ < b.rep_;
    }

    std::string str() const { return FqField::get(q_).str(rep_); }

private:
    static void check(const FqElem& a, const FqElem& b) {
        if (a.q_ != b.q_) throw InvalidInput("mixed finite fields");
    }
    std::uint32_t q_;
    std::uint32_t rep_;
};

/// Least root (by packed representation) of y^p - y = a in F_q, if any.
inline std::optional<FqElem> artin_schreier_residue_root(const FqElem& a) {
    const auto& F = FqField::get(a.q());
    for (std::uint32_t y = 0; y < a.q(); ++y) {
        FqElem e(a.q(), y);
        if (e.pow(F.p()) - e == a) return e;
    }
    return std::nullopt;
}

} // namespace ramval
