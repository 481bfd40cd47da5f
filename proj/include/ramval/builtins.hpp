#pragma once

#include <vector>

#include "ramval/scenario.hpp"

namespace ramval {

namespace detail {

/// Exponent ladder for the defect scenarios with p = 2: q_1 = -1,
/// q_{i+1} = -(3^i + 1)/(2*3^i), strictly increasing with supremum -1/2 and
/// odd denominators after reduction.
inline std::vector<Rat> defect_exponents_p2(int count) {
    std::vector<Rat> q{Rat(-1)};
    std::int64_t pow3 = 1;
    for (int i = 1; i < count; ++i) {
        pow3 *= 3;
        q.push_back(Rat(-(pow3 + 1), 2 * pow3));
    }
    return q;
}

/// Ladder for p = 3: q_1 = -1, q_{k+1} = -(2^(2k-1) + 1)/(3*2^(2k-1)),
/// strictly increasing with supremum -1/3 and denominators prime to 3.
inline std::vector<Rat> defect_exponents_p3(int count) {
    std::vector<Rat> q{Rat(-1)};
    std::int64_t pw = 2; // 2^(2k-1) for k = 1
    for (int k = 1; k < count; ++k) {
        q.push_back(Rat(-(pw + 1), 3 * pw));
        pw *= 4;
    }
    return q;
}

/// Ground data of the equal-characteristic defect construction: value group
/// the p'-divisible hull of Z, residue modeled by the full coefficient
/// field, rhs = sum_i t^(p q_i) truncated after `terms` summands, and the
/// partial sums c_k = sum_{i<=k} t^(q_i) as approximants.
inline Scenario defect_base(std::int64_t p, std::uint32_t ambient_q, int terms,
                            const std::vector<Rat>& q_full, const std::string& name) {
    Scenario sc;
    sc.name = name;
    sc.ground.value_group = ValueGroup(p, {Rat(1)}, true);
    sc.ground.residue_kind = ResidueKind::Fq;
    sc.ground.residue_q = ambient_q;
    sc.ground.ambient_q = ambient_q;
    sc.truncation.max_terms = 256;
    sc.truncation.trunc_exponent = q_full[terms] * Rat(p); // exponents >= p*q_{terms+1} unknown
    HahnSeries rhs = HahnSeries::zero(ambient_q, sc.truncation.max_terms);
    HahnSeries prefix = rhs;
    for (int i = 0; i < terms; ++i) {
        rhs = rhs + HahnSeries::monomial(ambient_q, q_full[i] * Rat(p), Coeff::one(ambient_q),
                                         sc.truncation.max_terms);
        prefix = prefix + HahnSeries::monomial(ambient_q, q_full[i], Coeff::one(ambient_q),
                                               sc.truncation.max_terms);
        if (i + 1 < terms) sc.ground.approximants.push_back(prefix);
    }
    sc.rhs = rhs;
    sc.rhs_tail_negative = true;
    sc.ground.approximant_sup = Rat(-1, p);
    return sc;
}

} // namespace detail

inline std::vector<std::string> builtin_names() {
    return {"as-defectless-e-p2",  "as-defectless-e-p3",    "as-defectless-fsep-p2",
            "as-defectless-finsep-p2", "as-defect-sec3.4-p2", "tower-sec3.4-p2",
            "tower-sec3.4-p3",     "kummer-formula-2a-p3",  "kummer-formula-2b-p3",
            "kummer-formula-defect-p2"};
}

/// The builtin scenario library. Each entry is a complete scenario with a
/// pinned truncation policy and oracle seed.
inline Scenario builtin_scenario(const std::string& name) {
    using detail::defect_base;
    if (name == "as-defectless-e-p2") {
        // theta^2 + theta = 1/t over F_2((t)): ramified, v(theta) = -1/2
        Scenario sc;
        sc.name = name;
        sc.ground.value_group = ValueGroup(2, {Rat(1)});
        sc.ground.residue_kind = ResidueKind::PrimeField;
        sc.ground.residue_q = 2;
        sc.ground.ambient_q = 2;
        sc.truncation = {Rat(24), 96};
        sc.rhs = HahnSeries::monomial(2, Rat(-1), Coeff::one(2), 96);
        return sc;
    }
    if (name == "as-defectless-e-p3") {
        // theta^3 - theta = 1/t over F_3((t)): ramified, v(theta) = -1/3
        Scenario sc;
        sc.name = name;
        sc.ground.value_group = ValueGroup(3, {Rat(1)});
        sc.ground.residue_kind = ResidueKind::PrimeField;
        sc.ground.residue_q = 3;
        sc.ground.ambient_q = 3;
        sc.truncation = {Rat(24), 96};
        sc.rhs = HahnSeries::monomial(3, Rat(-1), Coeff::one(3), 96);
        return sc;
    }
    if (name == "as-defectless-fsep-p2") {
        // theta^2 + theta = 1 over F_2((t)): unramified, residue grows to F_4
        Scenario sc;
        sc.name = name;
        sc.ground.value_group = ValueGroup(2, {Rat(1)});
        sc.ground.residue_kind = ResidueKind::PrimeField;
        sc.ground.residue_q = 2;
        sc.ground.ambient_q = 4; // the residue root lives in F_4
        sc.truncation = {Rat(24), 96};
        sc.rhs = HahnSeries::monomial(4, Rat(0), Coeff::one(4), 96);
        return sc;
    }
    if (name == "as-defectless-finsep-p2") {
        // theta^2 + theta = u/t^2 over F_2(u)((t)): inseparable residue growth
        Scenario sc;
        sc.name = name;
        sc.ground.value_group = ValueGroup(2, {Rat(1)});
        sc.ground.residue_kind = ResidueKind::RationalFunction;
        sc.ground.residue_q = 2;
        sc.ground.ambient_q = 2;
        sc.truncation = {Rat(24), 96};
        sc.rhs = HahnSeries::monomial(2, Rat(-2), Coeff(2, Rat(1), FqElem::one(2)), 96);
        return sc;
    }
    if (name == "as-defect-sec3.4-p2") {
        Scenario sc = defect_base(2, 4, 16, detail::defect_exponents_p2(17), name);
        return sc;
    }
    if (name == "tower-sec3.4-p2") {
        Scenario sc = defect_base(2, 4, 16, detail::defect_exponents_p2(17), name);
        sc.kind = ExtKind::TowerAS;
        return sc;
    }
    if (name == "tower-sec3.4-p3") {
        Scenario sc = defect_base(3, 27, 10, detail::defect_exponents_p3(11), name);
        sc.kind = ExtKind::TowerAS;
        return sc;
    }
    if (name == "kummer-formula-2a-p3") {
        Scenario sc;
        sc.name = name;
        sc.kind = ExtKind::KummerFormula;
        KummerFormulaInput ki;
        ki.p = 3;
        ki.vp = Rat(1);
        ki.kcase = KummerCase::ResidueGen;
        ki.e_side = false;
        ki.vK = ValueGroup(3, {Rat(1, 2)});
        sc.kummer = ki;
        return sc;
    }
    if (name == "kummer-formula-2b-p3") {
        Scenario sc;
        sc.name = name;
        sc.kind = ExtKind::KummerFormula;
        KummerFormulaInput ki;
        ki.p = 3;
        ki.vp = Rat(1);
        ki.kcase = KummerCase::UnitGen;
        ki.v_eta_minus_1 = Rat(1, 6);
        ki.e_side = true;
        ki.vK = ValueGroup(3, {Rat(1, 2)});
        sc.kummer = ki;
        return sc;
    }
    if (name == "kummer-formula-defect-p2") {
        Scenario sc;
        sc.name = name;
        sc.kind = ExtKind::KummerFormula;
        KummerFormulaInput ki;
        ki.p = 2;
        ki.vp = Rat(1);
        ki.kcase = KummerCase::Defect;
        ki.vK = ValueGroup(2, {Rat(1)}, true);
        ki.v_eta_minus_K = FinalSegment{Rat(1), false, ki.vK};
        sc.kummer = ki;
        return sc;
    }
    throw InvalidInput("unknown builtin scenario '" + name + "'");
}

} // namespace ramval
