#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ramval/coeff.hpp"
#include "ramval/errors.hpp"
#include "ramval/rational.hpp"

namespace ramval {

struct TruncationPolicy {
    Rat trunc_exponent{32};
    int max_terms = 64;
};

/// Truncated generalized power series over F_q (coefficients may carry the
/// transcendental u, see Coeff). Terms are kept sorted by exponent; all
/// stored exponents lie strictly below the truncation exponent, beyond which
/// nothing is known. A series without a truncation bound is exact.
///
/// Two truncation devices cooperate: the exponent bound tracks guaranteed
/// precision through arithmetic, while the term cap keeps representations
/// finite when supports accumulate (Artin-Schreier roots of negative-value
/// inputs do this). Capping lowers the truncation exponent, never silently
/// drops information.
class HahnSeries {
public:
    using TermMap = std::map<Rat, Coeff>;

    HahnSeries() : q_(2) {}
    explicit HahnSeries(std::uint32_t q, int max_terms = 64) : q_(q), max_terms_(max_terms) {}

    static HahnSeries zero(std::uint32_t q, int max_terms = 64) {
        return HahnSeries(q, max_terms);
    }
    static HahnSeries one(std::uint32_t q, int max_terms = 64) {
        return monomial(q, Rat(0), Coeff::one(q), max_terms);
    }
    static HahnSeries monomial(std::uint32_t q, const Rat& exp, Coeff coeff, int max_terms = 64) {
        HahnSeries s(q, max_terms);
        if (!coeff.is_zero()) s.terms_.emplace(exp, std::move(coeff));
        return s;
    }
    static HahnSeries constant(std::uint32_t q, Coeff coeff, int max_terms = 64) {
        return monomial(q, Rat(0), std::move(coeff), max_terms);
    }

    std::uint32_t q() const { return q_; }
    std::uint32_t char_p() const { return FqField::get(q_).p(); }
    const TermMap& terms() const { return terms_; }
    const std::optional<Rat>& trunc() const { return trunc_; }
    int max_terms() const { return max_terms_; }
    bool is_exact() const { return !trunc_.has_value(); }
    bool is_certified_zero() const { return terms_.empty() && is_exact(); }

    /// The valuation: min exponent of the support, or infinity (nullopt) for
    /// the exact zero series. Throws when every term was truncated away.
    std::optional<Rat> val() const {
        if (!terms_.empty()) return terms_.begin()->first;
        if (is_exact()) return std::nullopt;
        throw IndeterminateValuation("valuation lost to truncation (window starts at " +
                                     trunc_->str() + ")");
    }

    Rat val_finite() const {
        auto v = val();
        if (!v) throw DivisionByZero("expected nonzero series");
        return *v;
    }

    /// Certified lower bound for the valuation; nullopt means infinity.
    std::optional<Rat> val_lower_bound() const {
        if (!terms_.empty()) return terms_.begin()->first;
        if (is_exact()) return std::nullopt;
        return trunc_;
    }

    bool val_known_positive() const {
        auto lb = val_lower_bound();
        return !lb || *lb > Rat(0);
    }

    Coeff coefficient(const Rat& exp) const {
        auto it = terms_.find(exp);
        if (it != terms_.end()) return it->second;
        if (trunc_ && exp >= *trunc_)
            throw IndeterminateValuation("coefficient at " + exp.str() + " beyond window");
        return Coeff::zero(q_);
    }

    Coeff leading_coeff() const {
        if (terms_.empty()) throw DivisionByZero("leading coefficient of zero series");
        return terms_.begin()->second;
    }

    HahnSeries with_policy(const TruncationPolicy& pol) const {
        HahnSeries r = *this;
        r.max_terms_ = pol.max_terms;
        r.lower_trunc(pol.trunc_exponent);
        r.prune();
        return r;
    }

    /// Restricts the guaranteed window (never widens it).
    HahnSeries truncated_at(const Rat& t) const {
        HahnSeries r = *this;
        r.lower_trunc(t);
        r.prune();
        return r;
    }

    friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
        check(a, b);
        HahnSeries r(a.q_, std::min(a.max_terms_, b.max_terms_));
        r.trunc_ = min_trunc(a.trunc_, b.trunc_);
        r.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
        r.prune();
        return r;
    }
    friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }
    HahnSeries operator-() const {
        HahnSeries r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
        check(a, b);
        HahnSeries r(a.q_, std::min(a.max_terms_, b.max_terms_));
        if (a.is_certified_zero() || b.is_certified_zero()) return r;
        // guaranteed window of a product: unknown tail of one factor times
        // the leading value of the other
        std::optional<Rat> t;
        auto vlb_a = a.val_lower_bound(), vlb_b = b.val_lower_bound();
        if (a.trunc_) {
            if (!vlb_b) return r; // b certified zero handled above; unreachable
            t = min_trunc(t, *a.trunc_ + *vlb_b);
        }
        if (b.trunc_) {
            if (!vlb_a) return r;
            t = min_trunc(t, *b.trunc_ + *vlb_a);
        }
        r.trunc_ = t;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Rat e = ea + eb;
                if (t && e >= *t) continue;
                r.accumulate(e, ca * cb);
            }
        r.prune();
        return r;
    }

    HahnSeries scaled(const Coeff& c) const {
        HahnSeries r(q_, max_terms_);
        if (c.is_zero()) return r;
        r.trunc_ = trunc_;
        for (const auto& [e, co] : terms_) r.accumulate(e, co * c);
        r.prune();
        return r;
    }

    HahnSeries shifted(const Rat& by) const {
        HahnSeries r(q_, max_terms_);
        if (trunc_) r.trunc_ = *trunc_ + by;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
        return r;
    }

    HahnSeries pow(unsigned n) const {
        HahnSeries r = one(q_, max_terms_);
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Multiplicative inverse via leading-term inversion and geometric
    /// expansion to the guaranteed window.
    HahnSeries inverse() const {
        if (is_certified_zero()) throw DivisionByZero("inverse of zero series");
        Rat m = val_finite();
        Coeff lead = leading_coeff();
        HahnSeries unit = shifted(-m).scaled(lead.inv()); // 1 + (higher order)
        HahnSeries w = one(q_, max_terms_) - unit;        // v(w) > 0
        HahnSeries geo = one(q_, max_terms_);
        if (unit.trunc_) geo.trunc_ = unit.trunc_;
        HahnSeries wp = w;
        for (int k = 0; k < 4 * max_terms_ + 8; ++k) {
            auto lb = wp.val_lower_bound();
            if (!lb) break;
            if (geo.trunc_ && *lb >= *geo.trunc_) break;
            geo = geo + wp;
            wp = wp * w;
        }
        return geo.shifted(-m).scaled(lead.inv());
    }

    /// Termwise Frobenius x -> x^p (exact in characteristic p).
    HahnSeries frobenius() const {
        std::uint32_t p = char_p();
        HahnSeries r(q_, max_terms_);
        if (trunc_) r.trunc_ = *trunc_ * Rat((std::int64_t)p);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e * Rat((std::int64_t)p), c.frobenius(p));
        return r;
    }

    /// Termwise inverse of Frobenius; the result's p-th power is the input on
    /// the guaranteed window.
    HahnSeries pth_root() const {
        std::uint32_t p = char_p();
        HahnSeries r(q_, max_terms_);
        if (trunc_) r.trunc_ = *trunc_ / Rat((std::int64_t)p);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e / Rat((std::int64_t)p), c.pth_root(p));
        return r;
    }

    /// Subseries with exponents satisfying the predicate sign: -1 negative,
    /// 0 the constant term, +1 positive. Truncation carries over sensibly.
    HahnSeries part(int sign) const {
        HahnSeries r(q_, max_terms_);
        for (const auto& [e, c] : terms_) {
            int s = e.sign();
            if (s == sign) r.terms_.emplace(e, c);
        }
        if (trunc_) {
            if (sign < 0 && *trunc_ < Rat(0)) r.trunc_ = trunc_;
            if (sign > 0) r.trunc_ = trunc_;
            if (sign > 0 && *trunc_ <= Rat(0)) r.trunc_ = Rat(0); // nothing known yet
        }
        return r;
    }

    friend bool operator==(const HahnSeries& a, const HahnSeries& b) {
        return a.q_ == b.q_ && a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
    }

    std::string str() const {
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            bool unit = c == Coeff::one(q_);
            if (e.is_zero()) {
                s += c.str();
            } else {
                if (!unit) s += c.str() + "*";
                s += "t^" + e.str();
            }
        }
        if (s.empty()) s = "0";
        if (trunc_) s += " + O(t^" + trunc_->str() + ")";
        return s;
    }

private:
    static void check(const HahnSeries& a, const HahnSeries& b) {
        if (a.q_ != b.q_) throw InvalidInput("mixed coefficient fields in series");
    }
    static std::optional<Rat> min_trunc(const std::optional<Rat>& a, const std::optional<Rat>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    void lower_trunc(const Rat& t) {
        if (!trunc_ || t < *trunc_) trunc_ = t;
    }
    void accumulate(const Rat& e, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void prune() {
        if (trunc_) {
            auto it = terms_.lower_bound(*trunc_);
            terms_.erase(it, terms_.end());
        }
        while ((int)terms_.size() > max_terms_) {
            auto last = std::prev(terms_.end());
            lower_trunc(last->first);
            terms_.erase(last);
        }
    }

    std::uint32_t q_;
    TermMap terms_;
    std::optional<Rat> trunc_;
    int max_terms_ = 64;
};

namespace detail {

/// Exponents stay representable with room for later lcm arithmetic; a term
/// chain that leaves this window is cut off and recorded as truncation.
inline bool exponent_headroom_ok(const Rat& e) {
    constexpr std::int64_t num_limit = std::int64_t(1) << 40;
    constexpr std::int64_t den_limit = std::int64_t(1) << 24;
    std::int64_t n = e.num() < 0 ? -e.num() : e.num();
    return n < num_limit && e.den() < den_limit;
}

} // namespace detail

/// Canonical root of X^p - X = a in the ambient field, assembled additively:
/// the negative part of a contributes sum_{j>=1} a_-^(1/p^j), the constant
/// part a residue root (least one in F_q), the positive part
/// -sum_{j>=0} a_+^(p^j). The characteristic-p identity (x+y)^p = x^p + y^p
/// makes the three parts independent.
///
/// When the window of a ends below 0 the constant term is formally unknown;
/// `tail_is_negative` declares that every hidden term of a has negative
/// exponent (the defect scenarios provide this), which restores a sound
/// window of trunc(a)/p for the root.
inline HahnSeries artin_schreier_root(const HahnSeries& a, std::uint32_t p,
                                      bool tail_is_negative = false) {
    if (FqField::get(a.q()).p() != p)
        throw InvalidInput("Artin-Schreier root needs coefficient characteristic p");
    const bool window_below_zero = a.trunc() && *a.trunc() <= Rat(0);
    if (window_below_zero && !tail_is_negative)
        throw IndeterminateValuation("window ends at " + a.trunc()->str() +
                                     "; constant term of the right-hand side unknown");

    HahnSeries neg = a.part(-1);
    HahnSeries pos = a.part(+1);
    HahnSeries result = HahnSeries::zero(a.q(), a.max_terms());
    if (!window_below_zero) {
        Coeff a0 = a.coefficient(Rat(0));
        if (!a0.is_u_free())
            throw ResidueRootMissing("residue equation y^p - y = " + a0.str() +
                                     " leaves the coefficient field");
        auto root0 = artin_schreier_residue_root(a0.constant_part());
        if (!root0)
            throw ResidueRootMissing("y^p - y = " + a0.str() + " has no root in F_" +
                                     std::to_string(a.q()));
        result = HahnSeries::constant(a.q(), Coeff(*root0), a.max_terms());
    }

    // negative-exponent part; with a window below 0 the tail declaration
    // bounds the unknown contribution by trunc(a)/p
    if (!neg.terms().empty()) {
        std::optional<Rat> limit;
        if (window_below_zero) limit = *a.trunc() / Rat((std::int64_t)p);
        HahnSeries acc = HahnSeries::zero(a.q(), a.max_terms());
        HahnSeries rj = neg;
        for (int j = 0; j < 200; ++j) {
            rj = rj.pth_root();
            auto lb = rj.val_lower_bound();
            if (!lb) break;
            if (limit && *lb >= *limit) break;
            if (!detail::exponent_headroom_ok(*lb)) {
                acc = acc.truncated_at(*lb);
                break;
            }
            if (acc.trunc() && *lb >= *acc.trunc()) break;
            acc = acc + rj;
        }
        if (limit) acc = acc.truncated_at(*limit);
        result = result + acc;
    } else if (window_below_zero) {
        result = result.truncated_at(*a.trunc() / Rat((std::int64_t)p));
    }

    // positive-exponent part: valuations of a_+^(p^j) grow, so this
    // terminates against either window
    if (!pos.terms().empty()) {
        HahnSeries acc = -pos;
        HahnSeries rj = pos;
        for (int j = 0; j < 200; ++j) {
            rj = rj.frobenius();
            auto lb = rj.val_lower_bound();
            if (!lb) break;
            if (!detail::exponent_headroom_ok(*lb)) {
                acc = acc.truncated_at(*lb);
                break;
            }
            if (acc.trunc() && *lb >= *acc.trunc()) break;
            if (pos.trunc() && *lb >= *pos.trunc()) break;
            acc = acc - rj;
        }
        result = result + acc;
    }

    // a perturbation of a beyond its window moves the canonical root by a
    // series of the same value, so the root inherits a's window
    if (a.trunc() && !window_below_zero) result = result.truncated_at(*a.trunc());
    return result;
}

} // namespace ramval
