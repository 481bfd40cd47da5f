#pragma once

#include <string>

#include "ramval/invariants.hpp"

namespace ramval {

enum class KummerCase { ResidueGen, UnitGen, Defect };

/// Symbolic input for a mixed-characteristic Kummer extension of degree
/// p = residue characteristic: everything is value-group data. ResidueGen is
/// the case of a generator eta with v(eta) >= 0 whose residue (or value)
/// generates the extension; UnitGen the case of a 1-unit generator measured
/// by v(eta - 1); Defect the immediate case measured by the cut v(eta - K).
struct KummerFormulaInput {
    std::int64_t p = 3;
    Rat vp{1};
    KummerCase kcase = KummerCase::ResidueGen;
    Rat v_eta_minus_1;               // UnitGen
    FinalSegment v_eta_minus_K;      // Defect: bound = sup (never attained)
    ValueGroup vK;
    bool e_side = false;             // true: e = p, false: f = p (ignored for Defect)
};

struct KummerReport {
    std::string case_label; // 2a | 2b | defect
    Rat v_zeta_minus_1;     // = vp/(p-1)
    int e = 1, f = 1, d = 1;
    bool residue_separable = false;
    ValueGroup vK, vL;
    RamificationReport ram;
    TraceReport trace; // for z of value 0
    DifferentReport diff;
    NormReport norm;
};

/// Evaluates the closed forms for Kummer extensions of degree p over
/// value-group data: gamma and the ramification ideal, the trace ideal of
/// O_L, complementary/different/naive/annihilator descriptors, and the norm
/// of the ramification ideal.
inline KummerReport kummer_formula_report(const KummerFormulaInput& in) {
    KummerReport rep;
    const std::int64_t p = in.p;
    if (p < 2) throw InvalidInput("p must be a prime >= 2");
    if (!(in.vp > Rat(0))) throw InvalidInput("vp must be positive");
    rep.v_zeta_minus_1 = in.vp / Rat(p - 1);
    rep.vK = in.vK;
    if (!in.vK.contains(in.vp)) throw InvalidInput("vp does not lie in vK");
    if (!in.vK.contains(rep.v_zeta_minus_1))
        throw InvalidInput("v(zeta_p - 1) = vp/(p-1) = " + rep.v_zeta_minus_1.str() +
                           " does not lie in vK, yet zeta_p lies in K");

    Rat gamma;
    switch (in.kcase) {
    case KummerCase::ResidueGen: {
        rep.case_label = "2a";
        gamma = rep.v_zeta_minus_1;
        if (in.e_side) {
            if (!in.vK.is_dense())
                throw InvalidInput("value-group-generating eta over a discrete vK needs the "
                                   "1-unit form to pin down vL");
            rep.e = (int)p;
            rep.vL = in.vK; // dense; the missing generator changes no descriptor below
        } else {
            rep.f = (int)p;
            rep.vL = in.vK;
            rep.residue_separable = false; // eta or c(eta-1) reduces to a p-th root
        }
        break;
    }
    case KummerCase::UnitGen: {
        rep.case_label = "2b";
        if (in.v_eta_minus_1 < Rat(0) || in.v_eta_minus_1 > rep.v_zeta_minus_1)
            throw InvalidInput("need 0 <= v(eta-1) <= vp/(p-1) = " + rep.v_zeta_minus_1.str());
        gamma = rep.v_zeta_minus_1 - in.v_eta_minus_1;
        if (in.e_side) {
            auto idx = in.vK.index_of(in.v_eta_minus_1, (int)p);
            if (!idx || *idx != (int)p)
                throw InvalidInput("v(eta-1) must generate a degree-p value group extension");
            rep.e = (int)p;
            rep.vL = in.vK.extended_by(in.v_eta_minus_1);
        } else {
            if (!in.vK.contains(in.v_eta_minus_1))
                throw InvalidInput("inertia-side v(eta-1) must lie in vK");
            rep.f = (int)p;
            rep.vL = in.vK;
            rep.residue_separable = (gamma == Rat(0));
        }
        break;
    }
    case KummerCase::Defect: {
        rep.case_label = "defect";
        if (in.v_eta_minus_K.attained)
            throw InvalidInput("a defect cut v(eta - K) has no maximal element");
        if (!in.vK.is_dense())
            throw InvalidInput("a rank-one defect needs a dense value group");
        Rat beta = in.v_eta_minus_K.bound;
        if (beta > rep.v_zeta_minus_1)
            throw InvalidInput("sup v(eta - K) exceeds v(zeta_p - 1)");
        gamma = rep.v_zeta_minus_1 - beta;
        rep.d = (int)p;
        rep.vL = in.vK;
        break;
    }
    }

    // ramification data
    rep.ram.gamma = gamma;
    rep.ram.seed = 0;
    rep.ram.samples_used = 0;
    if (in.kcase == KummerCase::Defect) {
        rep.ram.defect_case = true;
        rep.ram.jump = FinalSegment{gamma, false, rep.vL};
        rep.ram.ideal = make_ideal(rep.ram.jump);
        if (rep.ram.ideal.principal)
            throw OracleMismatch("defect jump normalized to a principal cut");
        rep.ram.witness = "Sigma = vp/(p-1) - v(eta - K), open cut";
    } else {
        rep.ram.ideal = principal_ideal(gamma, rep.vL);
        rep.ram.jump = rep.ram.ideal.segment;
        rep.ram.witness = in.kcase == KummerCase::ResidueGen
                              ? "eta; gamma = v(zeta_p - 1)"
                              : "eta - 1; gamma = v(zeta_p - 1) - v(eta - 1)";
    }

    // trace ideal of O_L (z of value 0)
    rep.trace.z_value = Rat(0);
    if (in.kcase == KummerCase::Defect) {
        rep.trace.formula_used = "defect";
        IdealDescriptor sig{rep.ram.jump, false, gamma};
        rep.trace.ideal_in_K = segment_restrict(segment_power(sig, (int)p - 1), rep.vK).segment;
    } else {
        Rat bound = in.kcase == KummerCase::ResidueGen
                        ? in.vp
                        : in.vp - Rat(p - 1) * in.v_eta_minus_1;
        rep.trace.formula_used =
            in.kcase == KummerCase::ResidueGen ? "defectless-Kummer-a" : "defectless-Kummer-b";
        rep.trace.ideal_in_K =
            segment_restrict(IdealDescriptor{FinalSegment{bound, true, rep.vL}, true, bound},
                             rep.vK)
                .segment;
    }

    // differents
    const int pi = (int)p;
    rep.diff.m_E = maximal_ideal_descriptor(rep.vL);
    if (in.kcase != KummerCase::Defect) {
        IdealDescriptor ie = rep.ram.ideal;
        IdealDescriptor ie_pow = segment_power(ie, pi - 1);
        bool cof = cofinal_below(rep.vK, rep.vL);
        if (cof) {
            rep.diff.branch = "cofinal";
            rep.diff.different = ie_pow;
        } else {
            rep.diff.branch = "non-cofinal";
            rep.diff.different =
                segment_shift(ie_pow, *rep.vK.smallest_positive() - *rep.vL.smallest_positive());
        }
        rep.diff.complementary = principal_ideal(-rep.diff.different.generator_value, rep.vL);
        rep.diff.naive = (rep.e == pi)
                             ? segment_power(segment_product(ie, rep.diff.m_E), pi - 1)
                             : ie_pow;
        rep.diff.equal_D_D0 = (rep.diff.naive == rep.diff.different);
        if (rep.vL == rep.vK)
            rep.diff.ann_kahler = ie_pow;
        else if (rep.diff.m_E.principal)
            rep.diff.ann_kahler = segment_power(segment_product(ie, rep.diff.m_E), pi - 1);
        else
            rep.diff.ann_kahler = ie_pow;
        rep.diff.equal_D_ann = (rep.diff.ann_kahler == rep.diff.different);
    } else {
        IdealDescriptor ie{rep.ram.jump, false, gamma};
        IdealDescriptor ie_pow = segment_power(ie, pi - 1);
        Rat inf = ie_pow.segment.bound;
        if (rep.vL.contains(inf)) {
            rep.diff.branch = "defect-principal";
            rep.diff.different = principal_ideal(inf, rep.vL);
            if (!(segment_product(rep.diff.m_E, rep.diff.different) == ie_pow))
                throw OracleMismatch("I^(p-1) = M_L * D fails at descriptor level");
        } else {
            rep.diff.branch = "defect-no-infimum";
            rep.diff.different = ie_pow;
        }
        rep.diff.naive = ie_pow;
        rep.diff.ann_kahler = rep.diff.different;
        rep.diff.equal_D_ann = true;
        rep.diff.equal_D_D0 = (rep.diff.naive == rep.diff.different);
        rep.diff.complementary = make_ideal(FinalSegment{-inf, true, rep.vL});
    }

    // norm of the ramification ideal
    rep.norm.ideal_in_K = make_ideal(
        FinalSegment{rep.ram.ideal.segment.bound * Rat(p), rep.ram.ideal.segment.attained, rep.vK});

    return rep;
}

} // namespace ramval
