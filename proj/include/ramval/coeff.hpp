#pragma once

#include <map>
#include <string>

#include "ramval/fq.hpp"
#include "ramval/rational.hpp"

namespace ramval {

/// Series coefficient: an F_q-linear combination of rational powers of a
/// transcendental u. Scenarios whose residue field is F_q(u) put u here;
/// everything else stays at u-degree zero. Rational u-exponents appear
/// because p-th roots are taken termwise in characteristic p.
class Coeff {
public:
    Coeff() : q_(2) {}
    explicit Coeff(FqElem c) : q_(c.q()) {
        if (!c.is_zero()) terms_.emplace(Rat(0), c);
    }
    Coeff(std::uint32_t q, Rat u_exp, FqElem c) : q_(q) {
        if (c.q() != q) throw InvalidInput("coefficient field mismatch");
        if (!c.is_zero()) terms_.emplace(u_exp, c);
    }
    static Coeff zero(std::uint32_t q) { Coeff c; c.q_ = q; return c; }
    static Coeff one(std::uint32_t q) { return Coeff(FqElem::one(q)); }
    static Coeff from_int(std::uint32_t q, std::int64_t k) { return Coeff(FqElem::from_int(q, k)); }

    std::uint32_t q() const { return q_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_u_free() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }
    const std::map<Rat, FqElem>& terms() const { return terms_; }

    /// The F_q part when u-free (zero coefficient allowed).
    FqElem constant_part() const {
        if (terms_.empty()) return FqElem::zero(q_);
        if (!is_u_free()) throw InvalidInput("coefficient involves the transcendental u");
        return terms_.begin()->second;
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        check(a, b);
        Coeff r = a;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
        return r;
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }
    Coeff operator-() const {
        Coeff r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        check(a, b);
        Coeff r = zero(a.q_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.accumulate(ea + eb, ca * cb);
        return r;
    }

    Coeff inv() const {
        if (terms_.empty()) throw DivisionByZero("inverse of zero coefficient");
        if (terms_.size() > 1)
            throw InvalidInput("inverse of a non-monomial coefficient is outside the coefficient ring");
        return Coeff(q_, -terms_.begin()->first, terms_.begin()->second.inv());
    }

    Coeff frobenius(std::uint32_t p) const {
        Coeff r = zero(q_);
        for (const auto& [e, c] : terms_) r.accumulate(e * Rat((std::int64_t)p), c.frobenius());
        return r;
    }
    Coeff pth_root(std::uint32_t p) const {
        Coeff r = zero(q_);
        for (const auto& [e, c] : terms_) r.accumulate(e / Rat((std::int64_t)p), c.pth_root());
        return r;
    }
    Coeff pow(std::uint64_t n) const {
        Coeff r = one(q_);
        Coeff base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.q_ == b.q_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += "+";
            first = false;
            s += c.str();
            if (!e.is_zero()) s += "*u^" + e.str();
        }
        return s;
    }

private:
    static void check(const Coeff& a, const Coeff& b) {
        if (a.q_ != b.q_) throw InvalidInput("mixed coefficient fields");
    }
    void accumulate(const Rat& e, const FqElem& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::uint32_t q_;
    std::map<Rat, FqElem> terms_;
};

} // namespace ramval
