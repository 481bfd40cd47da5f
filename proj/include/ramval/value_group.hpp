#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramval/rational.hpp"

namespace ramval {

/// A rank-one value group: a finitely generated subgroup of Q, optionally
/// closed under division by every prime different from p.
///
/// The lattice spanned by the generators is cyclic, so membership reduces to
/// divisibility questions about a single generator.
class ValueGroup {
public:
    ValueGroup() = default;
    ValueGroup(std::int64_t p, std::vector<Rat> generators, bool divisible_coprime_to_p = false)
        : p_(p), generators_(std::move(generators)), divisible_(divisible_coprime_to_p) {
        if (p_ < 2) throw InvalidInput("value group needs a prime p >= 2");
        lattice_gen_ = Rat(0);
        for (const auto& g : generators_) lattice_gen_ = rat_gcd(lattice_gen_, g);
    }

    std::int64_t p() const { return p_; }
    const std::vector<Rat>& generators() const { return generators_; }
    bool divisible_coprime_to_p() const { return divisible_; }

    bool is_trivial() const { return lattice_gen_.is_zero(); }
    bool is_dense() const { return divisible_ && !is_trivial(); }

    bool contains(const Rat& gamma) const {
        if (gamma.is_zero()) return true;
        if (is_trivial()) return false;
        Rat q = gamma / lattice_gen_;
        if (!divisible_) return q.is_integer();
        return q.den() % p_ != 0;
    }

    /// Minimum positive element, absent when the group is dense (or trivial).
    std::optional<Rat> smallest_positive() const {
        if (is_trivial() || is_dense()) return std::nullopt;
        return lattice_gen_;
    }

    /// Least n >= 1 with n*gamma in the group, searched up to `limit`.
    std::optional<int> index_of(const Rat& gamma, int limit) const {
        Rat acc = gamma;
        for (int n = 1; n <= limit; ++n, acc += gamma)
            if (contains(acc)) return n;
        return std::nullopt;
    }

    ValueGroup extended_by(const Rat& gamma) const {
        auto gens = generators_;
        gens.push_back(gamma);
        return ValueGroup(p_, std::move(gens), divisible_);
    }

    /// Canonical generator: two descriptors denote the same subgroup of Q iff
    /// their canonical generators and flags agree. With the divisibility flag
    /// only the p-part of the lattice generator matters.
    Rat canonical_generator() const {
        if (is_trivial()) return Rat(0);
        if (!divisible_) return lattice_gen_;
        int v = lattice_gen_.adic_valuation(p_);
        Rat g(1);
        Rat step = v >= 0 ? Rat(p_) : Rat(1, p_);
        for (int i = 0; i < (v >= 0 ? v : -v); ++i) g *= step;
        return g;
    }

    friend bool operator==(const ValueGroup& a, const ValueGroup& b) {
        return a.p_ == b.p_ && a.divisible_ == b.divisible_ &&
               a.canonical_generator() == b.canonical_generator();
    }

    std::string str() const {
        std::string s = "<";
        for (size_t i = 0; i < generators_.size(); ++i)
            s += (i ? "," : "") + generators_[i].str();
        s += ">";
        if (divisible_) s += " (divisible by primes != " + std::to_string(p_) + ")";
        return s;
    }

private:
    std::int64_t p_ = 2;
    std::vector<Rat> generators_;
    bool divisible_ = false;
    Rat lattice_gen_;
};

inline bool group_contains(const ValueGroup& g, const Rat& gamma) { return g.contains(gamma); }
inline std::optional<Rat> smallest_positive(const ValueGroup& g) { return g.smallest_positive(); }

/// Whether the negative part of gK is cofinal in the negative part of gL
/// (gK a subgroup of gL, caller guarantee): true iff gK is densely ordered
/// or both groups have the same smallest positive element.
inline bool cofinal_below(const ValueGroup& gK, const ValueGroup& gL) {
    if (gK.is_dense()) return true;
    return gK.smallest_positive() == gL.smallest_positive();
}

/// An upward-closed subset of a value group, written as a cut (bound,
/// attained). Attained means [bound, oo), otherwise (bound, oo).
struct FinalSegment {
    Rat bound;
    bool attained = true;
    ValueGroup group;

    bool contains(const Rat& gamma) const {
        if (!group.contains(gamma)) return false;
        return gamma > bound || (attained && gamma == bound);
    }

    friend bool operator==(const FinalSegment& a, const FinalSegment& b) {
        return a.bound == b.bound && a.attained == b.attained && a.group == b.group;
    }
};

/// Canonical form: an attained bound outside the group becomes an open cut,
/// and an open cut over a group that is discrete near the bound snaps to the
/// next group element. Idempotent; the denoted subset never changes.
inline FinalSegment normalize_segment(FinalSegment s) {
    if (s.attained && !s.group.contains(s.bound)) s.attained = false;
    if (!s.attained && !s.group.is_dense() && !s.group.is_trivial()) {
        Rat g = s.group.canonical_generator();
        Rat q = s.bound / g;
        Rat next = Rat(q.floor() + 1) * g;
        if (next <= s.bound) next += g;
        s.bound = next;
        s.attained = true;
    }
    return s;
}

/// The value set of a fractional ideal. Principal iff the segment has a
/// minimum, in which case generator_value is that minimum.
struct IdealDescriptor {
    FinalSegment segment;
    bool principal = false;
    Rat generator_value;

    bool value_in(const Rat& gamma) const { return segment.contains(gamma); }

    friend bool operator==(const IdealDescriptor& a, const IdealDescriptor& b) {
        return a.segment == b.segment && a.principal == b.principal &&
               (!a.principal || a.generator_value == b.generator_value);
    }
};

inline IdealDescriptor make_ideal(FinalSegment s) {
    IdealDescriptor d;
    d.segment = normalize_segment(std::move(s));
    d.principal = d.segment.attained;
    d.generator_value = d.segment.bound;
    return d;
}

inline IdealDescriptor principal_ideal(const Rat& value, const ValueGroup& group) {
    return make_ideal(FinalSegment{value, true, group});
}

/// Ideal whose value set is the open cut (infimum, oo). Over a group that is
/// discrete near the bound this still normalizes to a principal ideal, since
/// such a segment has a minimum.
inline IdealDescriptor open_ideal(const Rat& infimum, const ValueGroup& group) {
    return make_ideal(FinalSegment{infimum, false, group});
}

/// Descriptor of I^n: the cut scales by n, attainment is preserved.
inline IdealDescriptor segment_power(const IdealDescriptor& i, int n) {
    if (n < 1) throw InvalidInput("segment_power needs n >= 1");
    FinalSegment s = i.segment;
    s.bound = s.bound * Rat(n);
    return make_ideal(std::move(s));
}

/// Shift of the value set by vz (the descriptor of z*I).
inline IdealDescriptor segment_shift(const IdealDescriptor& i, const Rat& by) {
    FinalSegment s = i.segment;
    s.bound += by;
    return make_ideal(std::move(s));
}

/// Intersection with a subgroup, at the cut level: same bound, attainment
/// re-decided inside the subgroup.
inline IdealDescriptor segment_restrict(const IdealDescriptor& i, const ValueGroup& sub) {
    FinalSegment s{i.segment.bound, i.segment.attained, sub};
    return make_ideal(std::move(s));
}

/// Descriptor of the product ideal: value sets add, a minimum survives only
/// if both factors have one.
inline IdealDescriptor segment_product(const IdealDescriptor& a, const IdealDescriptor& b) {
    FinalSegment s{a.segment.bound + b.segment.bound,
                   a.segment.attained && b.segment.attained, a.segment.group};
    return make_ideal(std::move(s));
}

/// The maximal ideal of the valuation ring, as a descriptor: principal at
/// the smallest positive element when the group is discrete, otherwise the
/// open cut at 0.
inline IdealDescriptor maximal_ideal_descriptor(const ValueGroup& g) {
    auto pi = g.smallest_positive();
    if (pi) return principal_ideal(*pi, g);
    return make_ideal(FinalSegment{Rat(0), false, g});
}

} // namespace ramval
