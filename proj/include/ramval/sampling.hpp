#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ramval/extension.hpp"

namespace ramval {

struct OracleConfig {
    int samples = 1000;
    std::uint64_t seed = 42;
};

/// Deterministic sampler for oracle checks. All draws go through the same
/// engine so that a (seed, scenario) pair fixes every sampled element.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) { // inclusive bounds
        return lo + (std::int64_t)(eng_() % (std::uint64_t)(hi - lo + 1));
    }
    bool coin() { return eng_() & 1; }

    /// A random element of the value group within a small window around 0.
    Rat group_value(const ValueGroup& g, int window = 6) {
        Rat gen = g.is_trivial() ? Rat(1) : g.canonical_generator();
        Rat v = gen * Rat(int_in(-window, window));
        if (g.divisible_coprime_to_p()) {
            static const int odd_like[] = {1, 2, 3, 4, 5, 7, 9};
            for (int tries = 0; tries < 8; ++tries) {
                std::int64_t b = odd_like[int_in(0, 6)];
                if (b % g.p() != 0) { v = v / Rat(b); break; }
            }
        }
        return v;
    }

    /// Nonzero residue-field coefficient admissible for the ground field.
    Coeff residue_coeff(const GroundFieldSpec& g) {
        std::uint32_t qk = g.residue_kind == ResidueKind::PrimeField
                               ? FqField::get(g.ambient_q).p()
                               : g.residue_q;
        FqElem c = FqElem::zero(g.ambient_q);
        while (c.is_zero()) {
            FqElem cand(g.ambient_q, (std::uint32_t)(raw() % g.ambient_q));
            if (cand.in_subfield(qk)) c = cand;
        }
        if (g.residue_kind == ResidueKind::RationalFunction)
            return Coeff(g.ambient_q, Rat(int_in(0, 2)), c);
        return Coeff(c);
    }

    /// A random ground-field monomial c * u^j * t^gamma, gamma in vK.
    HahnSeries ground_monomial(const GroundFieldSpec& g, const TruncationPolicy& pol,
                               int window = 6) {
        return HahnSeries::monomial(g.ambient_q, group_value(g.value_group, window),
                                    residue_coeff(g), pol.max_terms);
    }

    /// A random ground-field monomial of value >= lo.
    HahnSeries ground_monomial_at_least(const GroundFieldSpec& g, const TruncationPolicy& pol,
                                        const Rat& lo, int window = 6) {
        for (;;) {
            Rat v = group_value(g.value_group, window);
            if (v >= lo) return HahnSeries::monomial(g.ambient_q, v, residue_coeff(g), pol.max_terms);
        }
    }

private:
    std::mt19937_64 eng_;
};

/// Random combination over the valuation basis: sum of ground monomials
/// times theta^j, not all coordinates zero.
inline ExtElem sample_basis_combination(Sampler& rng, const ExtensionData& x) {
    for (;;) {
        ExtElem e = elem_zero(x);
        bool nonzero = false;
        for (int j = 0; j < x.p; ++j) {
            if (rng.int_in(0, 3) == 0) continue; // leave some coordinates zero
            e.coords[0][j] = rng.ground_monomial(x.ground, x.truncation);
            nonzero = true;
        }
        if (nonzero) return e;
    }
}

/// Random element of the lower field L0 of a tower (a polynomial in theta0
/// with ground monomial coefficients).
inline ExtElem sample_lower_field_element(Sampler& rng, const ExtensionData& x) {
    for (;;) {
        ExtElem e = elem_zero(x);
        bool nonzero = false;
        for (int i = 0; i < x.p; ++i) {
            if (rng.int_in(0, 3) == 0) continue;
            e.coords[i][0] = rng.ground_monomial(x.ground, x.truncation);
            nonzero = true;
        }
        if (nonzero) return e;
    }
}

/// v(sigma(b)/b - 1) computed as v(sigma(b) - b) - v(b); nullopt when
/// sigma fixes b (value infinity).
inline std::optional<Rat> ratio_minus_one_value(const ExtensionData& x, const ExtElem& b,
                                                const Auto& g) {
    ExtElem diff = elem_sub(apply_auto(x, b, g), b);
    HahnSeries dv = elem_eval(x, diff);
    if (dv.is_certified_zero()) return std::nullopt;
    Rat vb = elem_eval(x, b).val_finite();
    return dv.val_finite() - vb;
}

} // namespace ramval
