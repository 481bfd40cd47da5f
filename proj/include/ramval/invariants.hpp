#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramval/ramification.hpp"

namespace ramval {

struct TraceReport {
    Rat z_value;
    FinalSegment ideal_in_K;
    std::string formula_used; // defectless-AS | defectless-Kummer-a | defectless-Kummer-b | defect
    std::vector<Rat> oracle_values;

    friend bool operator==(const TraceReport& a, const TraceReport& b) {
        return a.z_value == b.z_value && a.ideal_in_K == b.ideal_in_K &&
               a.formula_used == b.formula_used && a.oracle_values == b.oracle_values;
    }
};

struct DifferentReport {
    IdealDescriptor complementary;
    IdealDescriptor different;
    IdealDescriptor naive;
    IdealDescriptor ann_kahler;
    IdealDescriptor m_E;
    bool equal_D_ann = false;
    bool equal_D_D0 = false;
    std::string branch; // cofinal | non-cofinal | defect-no-infimum | defect-principal
    std::vector<Rat> delta_oracle_values;

    friend bool operator==(const DifferentReport& a, const DifferentReport& b) {
        return a.complementary == b.complementary && a.different == b.different &&
               a.naive == b.naive && a.ann_kahler == b.ann_kahler && a.m_E == b.m_E &&
               a.equal_D_ann == b.equal_D_ann && a.equal_D_D0 == b.equal_D_D0 &&
               a.branch == b.branch && a.delta_oracle_values == b.delta_oracle_values;
    }
};

struct NormReport {
    IdealDescriptor ideal_in_K;
    std::vector<Rat> oracle_values;

    friend bool operator==(const NormReport& a, const NormReport& b) {
        return a.ideal_in_K == b.ideal_in_K && a.oracle_values == b.oracle_values;
    }
};

namespace detail {

/// A few positive values congruent to frac modulo the group, strictly
/// decreasing. Over a discrete group only the coset minimum is returned;
/// over a dense group the values shrink toward 0 (never reaching it, since
/// frac does not lie in the group).
inline std::vector<Rat> shrinking_coset_values(const ValueGroup& g, const Rat& frac, int count) {
    Rat gen = g.canonical_generator();
    Rat base = frac - Rat((frac / gen).floor()) * gen; // representative in [0, gen)
    if (base.is_zero()) return {};
    std::vector<Rat> out{base};
    if (!g.is_dense()) return out;
    std::int64_t qd = g.p() == 3 ? 2 : 3;
    Rat denom(1);
    for (int i = 1; i < count; ++i) {
        denom = denom * Rat(qd);
        Rat scaled = base * denom / gen;
        std::int64_t m = scaled.floor();
        if (Rat(m) == scaled) --m;
        if (m <= 0) continue;
        out.push_back(base - gen * Rat(m) / denom); // still congruent to frac
    }
    return out;
}

/// An element of value exactly vz, written over the valuation basis:
/// one coordinate pinned at the required value, the rest strictly above.
inline ExtElem sample_element_of_value(Sampler& rng, const ExtensionData& x, const Rat& vz) {
    std::vector<int> pivots;
    for (int j = 0; j < x.p; ++j)
        if (x.vK.contains(vz - Rat(j) * x.v_theta)) pivots.push_back(j);
    if (pivots.empty()) throw InvalidInput("z-value " + vz.str() + " is not in vL");
    int jstar = pivots[rng.int_in(0, (std::int64_t)pivots.size() - 1)];
    ExtElem z = elem_zero(x);
    z.coords[0][jstar] = HahnSeries::monomial(x.ground.ambient_q, vz - Rat(jstar) * x.v_theta,
                                              rng.residue_coeff(x.ground), x.truncation.max_terms);
    for (int j = 0; j < x.p; ++j) {
        if (j == jstar || rng.int_in(0, 2) == 0) continue;
        Rat lo = vz - Rat(j) * x.v_theta;
        HahnSeries c = rng.ground_monomial(x.ground, x.truncation);
        if (!c.terms().empty() && c.val_finite() > lo) z.coords[0][j] = c;
    }
    return z;
}

/// A sampled element of the valuation ring (all basis coordinates of
/// nonnegative value).
inline ExtElem sample_integral_element(Sampler& rng, const ExtensionData& x) {
    for (;;) {
        ExtElem w = elem_zero(x);
        bool nz = false;
        for (int j = 0; j < x.p; ++j) {
            if (rng.int_in(0, 2) == 0) continue;
            HahnSeries c = rng.ground_monomial(x.ground, x.truncation);
            if (c.terms().empty()) continue;
            if (c.val_finite() + Rat(j) * x.v_theta < Rat(0)) continue;
            w.coords[0][j] = c;
            nz = true;
        }
        if (nz) return w;
    }
}

/// t_c(theta - c_k), the scaled approximant difference of value 0.
inline ExtElem defect_unit_generator(const ExtensionData& x, size_t k) {
    const auto& prof = *x.profile;
    if (k >= prof.values.size() || !prof.values[k])
        throw InvalidInput("no finite profile value at index " + std::to_string(k));
    Rat vk = *prof.values[k];
    HahnSeries tc = HahnSeries::monomial(x.ground.ambient_q, -vk, Coeff::one(x.ground.ambient_q),
                                         x.truncation.max_terms);
    ExtElem e = elem_zero(x);
    e.coords[0][1] = tc;
    e.coords[0][0] = -(tc * x.ground.approximants[k]);
    return e;
}

} // namespace detail

/// Trace ideal tr(z O_L) for a degree-p Artin-Schreier step, as a cut over
/// vK, cross-checked by brute-force conjugate sums. The trace of
/// c*theta^(p-1) is -c, so every value of the descriptor is realizable; the
/// designated witnesses exercise values at (or arbitrarily near) the bound.
inline TraceReport trace_ideal(const ExtensionData& x, const Rat& vz,
                               const RamificationReport& ram, const OracleConfig& cfg) {
    TraceReport rep;
    rep.z_value = vz;
    Sampler rng(cfg.seed ^ 0x7ace7ace7ace7aceull);

    if (!x.is_defect()) {
        rep.formula_used = "defectless-AS";
        Rat raw = vz - Rat(x.p - 1) * x.v_theta;
        IdealDescriptor d =
            segment_restrict(IdealDescriptor{FinalSegment{raw, true, x.vL}, true, raw}, x.vK);
        rep.ideal_in_K = d.segment;

        std::vector<Rat> targets;
        if (d.principal) {
            targets.push_back(d.generator_value);
        } else {
            for (const Rat& delta : detail::shrinking_coset_values(x.vK, -raw, 3))
                targets.push_back(raw + delta);
        }
        for (const Rat& tv : targets) {
            ExtElem a = elem_monomial(
                x, 0, x.p - 1,
                HahnSeries::monomial(x.ground.ambient_q, tv, Coeff::one(x.ground.ambient_q),
                                     x.truncation.max_terms));
            HahnSeries tr = trace_elem(x, a);
            Rat v = tr.val_finite();
            if (v != tv || !rep.ideal_in_K.contains(v))
                throw OracleMismatch("designated trace witness has value " + v.str() +
                                     ", expected " + tv.str());
            rep.oracle_values.push_back(v);
        }
        const int trace_samples = std::max(1, cfg.samples / 10);
        for (int s = 0; (int)rep.oracle_values.size() < trace_samples && s < 40 * trace_samples;
             ++s) {
            ExtElem z = detail::sample_element_of_value(rng, x, vz);
            ExtElem w = detail::sample_integral_element(rng, x);
            HahnSeries tr = trace_elem(x, elem_mul(x, z, w));
            if (tr.is_certified_zero()) continue;
            Rat v;
            try {
                v = tr.val_finite();
            } catch (const IndeterminateValuation&) {
                continue; // cancelled below the window; the bound still holds
            }
            if (!rep.ideal_in_K.contains(v))
                throw OracleMismatch("sampled trace value " + v.str() + " outside tr(zO_L)");
            rep.oracle_values.push_back(v);
        }
        if ((int)rep.oracle_values.size() < trace_samples)
            throw SamplingInconclusive("could not collect enough trace samples");
        return rep;
    }

    rep.formula_used = "defect";
    IdealDescriptor sig{ram.jump, false, ram.gamma};
    IdealDescriptor d = segment_restrict(segment_shift(segment_power(sig, x.p - 1), vz), x.vK);
    rep.ideal_in_K = d.segment;
    if (d.principal) throw OracleMismatch("defect trace ideal normalized to a principal cut");

    // designated family z* x_k^(p-1): trace value vz + (p-1)(-v_k),
    // strictly decreasing toward the cut bound
    const auto& prof = *x.profile;
    std::optional<Rat> prev;
    for (size_t k = 0; k < prof.values.size(); ++k) {
        if (!prof.values[k]) continue;
        ExtElem xk = detail::defect_unit_generator(x, k);
        ExtElem a = elem_from_ground(
            x, HahnSeries::monomial(x.ground.ambient_q, vz, Coeff::one(x.ground.ambient_q),
                                    x.truncation.max_terms));
        for (int i = 0; i < x.p - 1; ++i) a = elem_mul(x, a, xk);
        HahnSeries tr = trace_elem(x, a);
        Rat expect = vz + Rat(x.p - 1) * (-*prof.values[k]);
        Rat v = tr.val_finite();
        if (v != expect)
            throw OracleMismatch("defect trace witness k=" + std::to_string(k) + " gave " +
                                 v.str() + ", expected " + expect.str());
        if (!rep.ideal_in_K.contains(v))
            throw OracleMismatch("defect trace value " + v.str() + " outside the cut");
        if (prev && !(v < *prev))
            throw OracleMismatch("defect trace witnesses fail to decrease");
        prev = v;
        rep.oracle_values.push_back(v);
    }
    const int trace_samples = std::max(1, cfg.samples / 10);
    for (int s = 0; (int)rep.oracle_values.size() < trace_samples + 15 && s < 40 * trace_samples;
         ++s) {
        ExtElem z = detail::sample_element_of_value(rng, x, vz);
        size_t k = (size_t)rng.int_in(0, (std::int64_t)prof.values.size() - 1);
        ExtElem w = detail::sample_integral_element(rng, x);
        if (rng.coin() && prof.values[k]) w = elem_mul(x, w, detail::defect_unit_generator(x, k));
        HahnSeries tr = trace_elem(x, elem_mul(x, z, w));
        if (tr.is_certified_zero()) continue;
        Rat v;
        try {
            v = tr.val_finite();
        } catch (const IndeterminateValuation&) {
            continue;
        }
        if (!rep.ideal_in_K.contains(v))
            throw OracleMismatch("sampled defect trace value " + v.str() + " outside the cut");
        rep.oracle_values.push_back(v);
    }
    if ((int)rep.oracle_values.size() < trace_samples)
        throw SamplingInconclusive("could not collect enough trace samples");
    return rep;
}

/// Complementary ideal, different, naive different, Kaehler annihilator and
/// m_E of a degree-p step, with the delta-oracle on sampled elements and the
/// designated generator families.
inline DifferentReport different_report(const ExtensionData& x, const RamificationReport& ram,
                                        const OracleConfig& cfg) {
    DifferentReport rep;
    const int p = x.p;
    rep.m_E = maximal_ideal_descriptor(x.vL);

    if (!x.is_defect()) {
        Rat gamma = ram.gamma;
        IdealDescriptor ie = principal_ideal(gamma, x.vL);
        IdealDescriptor ie_pow = segment_power(ie, p - 1);
        bool cofinal = cofinal_below(x.vK, x.vL);
        if (cofinal) {
            rep.branch = "cofinal";
            rep.different = ie_pow;
        } else {
            rep.branch = "non-cofinal";
            Rat pik = *x.vK.smallest_positive();
            Rat pil = *x.vL.smallest_positive();
            rep.different = segment_shift(ie_pow, pik - pil);
        }
        rep.complementary = principal_ideal(-rep.different.generator_value, x.vL);

        if (x.f == p) {
            rep.naive = ie_pow;
        } else {
            rep.naive = segment_power(segment_product(ie, rep.m_E), p - 1);
        }
        rep.equal_D_D0 = (rep.naive == rep.different);
        if (x.f == p && !rep.equal_D_D0)
            throw OracleMismatch("inertia-side naive different differs from the different");
        if (x.e == p && rep.equal_D_D0 != !cofinal)
            throw OracleMismatch("naive-different equality disagrees with the cofinality branch");

        if (x.vL == x.vK) {
            rep.ann_kahler = ie_pow;
        } else if (rep.m_E.principal) {
            rep.ann_kahler = segment_power(segment_product(ie, rep.m_E), p - 1);
        } else {
            rep.ann_kahler = ie_pow; // I_E^(p-1) O_E with O_E = O_L
        }
        rep.equal_D_ann = (rep.ann_kahler == rep.different);
    } else {
        IdealDescriptor ie{ram.jump, false, ram.gamma};
        IdealDescriptor ie_pow = segment_power(ie, p - 1);
        Rat inf = ie_pow.segment.bound;
        if (x.vL.contains(inf)) {
            rep.branch = "defect-principal";
            rep.different = principal_ideal(inf, x.vL);
            IdealDescriptor check = segment_product(rep.m_E, rep.different);
            if (!(check == ie_pow))
                throw OracleMismatch("I^(p-1) = M_L * D fails at descriptor level");
        } else {
            rep.branch = "defect-no-infimum";
            rep.different = ie_pow;
        }
        rep.naive = ie_pow;
        rep.ann_kahler = rep.different; // rank one
        rep.equal_D_ann = true;
        rep.equal_D_D0 = (rep.naive == rep.different);
        rep.complementary = make_ideal(FinalSegment{-inf, true, x.vL});
    }

    Rat lower = rep.naive.segment.bound;
    auto record = [&](const Rat& v) {
        if (v < lower)
            throw OracleMismatch("element different of value " + v.str() +
                                 " undercuts the naive different at " + lower.str());
        rep.delta_oracle_values.push_back(v);
    };

    // designated generator families
    if (!x.is_defect()) {
        if (x.f == p) {
            // c*theta of value 0: attains the descriptor exactly
            ExtElem b =
                elem_monomial(x, 0, 1,
                              HahnSeries::monomial(x.ground.ambient_q, -x.v_theta,
                                                   Coeff::one(x.ground.ambient_q),
                                                   x.truncation.max_terms));
            auto [de, v] = different_of_element(x, b);
            if (v != rep.naive.generator_value)
                throw OracleMismatch("inertia family different " + v.str() + " != descriptor " +
                                     rep.naive.generator_value.str());
            record(v);
        } else {
            // c*theta^j of minimal positive value per j; over a dense vK the
            // values shrink toward the (open) bound instead of attaining it
            std::optional<Rat> best;
            for (int j = 1; j < p; ++j) {
                for (const Rat& target :
                     detail::shrinking_coset_values(x.vK, Rat(j) * x.v_theta, 3)) {
                    Rat cval = target - Rat(j) * x.v_theta;
                    if (!x.vK.contains(cval))
                        throw InvalidInput("coset arithmetic produced a value outside vK");
                    ExtElem b = elem_monomial(
                        x, 0, j,
                        HahnSeries::monomial(x.ground.ambient_q, cval,
                                             Coeff::one(x.ground.ambient_q),
                                             x.truncation.max_terms));
                    auto [de, v] = different_of_element(x, b);
                    Rat expect = Rat(p - 1) * (target - x.v_theta);
                    if (v != expect)
                        throw OracleMismatch("ramified family different " + v.str() + " != " +
                                             expect.str());
                    record(v);
                    if (!best || v < *best) best = v;
                }
            }
            if (!x.vK.is_dense() && (!best || *best != rep.naive.generator_value))
                throw OracleMismatch("generator family fails to attain the naive different");
        }
    } else {
        // x_c family: differents (p-1)(-v_k), strictly decreasing to the bound
        const auto& prof = *x.profile;
        std::optional<Rat> prev;
        for (size_t k = 0; k < prof.values.size(); ++k) {
            if (!prof.values[k]) continue;
            ExtElem b = detail::defect_unit_generator(x, k);
            auto [de, v] = different_of_element(x, b);
            Rat expect = Rat(p - 1) * (-*prof.values[k]);
            if (v != expect)
                throw OracleMismatch("defect family different " + v.str() + " != " + expect.str());
            if (prev && !(v < *prev))
                throw OracleMismatch("defect family differents fail to decrease");
            prev = v;
            record(v);
        }
    }

    // random integral elements outside the ground field
    Sampler rng(cfg.seed ^ 0xde17ade17ade17aull);
    for (int s = 0; s < cfg.samples / 10 + 8; ++s) {
        ExtElem b = detail::sample_integral_element(rng, x);
        if (elem_is_ground(b)) continue;
        try {
            auto [de, v] = different_of_element(x, b);
            record(v);
        } catch (const IndeterminateValuation&) {
            continue; // conjugate differences cancelled below the window
        }
    }
    return rep;
}

/// Descriptor route of the naive different alone (the full report carries
/// the oracle record).
inline IdealDescriptor naive_different(const ExtensionData& x, const RamificationReport& ram,
                                       const OracleConfig& cfg) {
    return different_report(x, ram, cfg).naive;
}

/// Annihilator descriptor of the Kaehler module, with the equality flag
/// against the different.
inline std::pair<IdealDescriptor, bool> ann_kahler(const ExtensionData& x,
                                                   const RamificationReport& ram,
                                                   const OracleConfig& cfg) {
    DifferentReport r = different_report(x, ram, cfg);
    return {r.ann_kahler, r.equal_D_ann};
}

/// Norm of the ramification ideal, as a cut over vK: values scale by p, and
/// principality is preserved.
inline NormReport norm_ideal(const ExtensionData& x, const RamificationReport& ram,
                             const OracleConfig& cfg) {
    NormReport rep;
    IdealDescriptor ie = ram.ideal;
    rep.ideal_in_K = make_ideal(FinalSegment{ie.segment.bound * Rat(x.p), ie.segment.attained, x.vK});

    if (!x.is_defect()) {
        if (!rep.ideal_in_K.principal)
            throw OracleMismatch("norm of a principal ideal must be principal");
        // N(theta) = +- (theta^p - theta), so v N(1/theta) = -v(rhs)
        Rat v_rhs = x.rhs_theta.val_finite();
        HahnSeries n = norm_elem(x, elem_theta(x));
        if (n.val_finite() != v_rhs)
            throw OracleMismatch("v N(theta) disagrees with v(theta^p - theta)");
        if (-v_rhs != rep.ideal_in_K.generator_value)
            throw OracleMismatch("v N(1/theta) = " + (-v_rhs).str() +
                                 " differs from the descriptor " +
                                 rep.ideal_in_K.generator_value.str());
        rep.oracle_values.push_back(-v_rhs);
    } else {
        if (rep.ideal_in_K.principal)
            throw OracleMismatch("norm of the defect ideal must be nonprincipal");
        // generators (sigma theta - theta)/(theta - c_k): norm values p(-v_k)
        const auto& prof = *x.profile;
        ExtElem gen = elem_theta(x);
        ExtElem diff = elem_sub(apply_auto(x, gen, Auto{0, 1}), gen);
        HahnSeries ndiff = norm_elem(x, diff);
        for (size_t k = 0; k < prof.values.size(); ++k) {
            if (!prof.values[k]) continue;
            ExtElem den = elem_zero(x);
            den.coords[0][1] = HahnSeries::one(x.ground.ambient_q, x.truncation.max_terms);
            den.coords[0][0] = -x.ground.approximants[k];
            HahnSeries nden = norm_elem(x, den);
            Rat v = ndiff.val_finite() - nden.val_finite();
            Rat expect = Rat(x.p) * (-*prof.values[k]);
            if (v != expect)
                throw OracleMismatch("norm generator value " + v.str() + " != " + expect.str());
            if (!rep.ideal_in_K.value_in(v))
                throw OracleMismatch("norm generator value " + v.str() + " outside the cut");
            rep.oracle_values.push_back(v);
        }
    }

    // multiplicativity of values under the norm, on random samples
    Sampler rng(cfg.seed ^ 0x5eed5eed5eed5eedull);
    const int norm_samples = std::max(1, cfg.samples / 2);
    for (int s = 0; s < norm_samples; ++s) {
        ExtElem b = sample_basis_combination(rng, x);
        Rat vb, vn;
        try {
            vb = elem_eval(x, b).val_finite();
            vn = norm_elem(x, b).val_finite();
        } catch (const IndeterminateValuation&) {
            continue;
        }
        if (vn != Rat(x.p) * vb)
            throw OracleMismatch("v(N b) = " + vn.str() + " != p*v(b) = " + (Rat(x.p) * vb).str());
    }
    return rep;
}

} // namespace ramval
