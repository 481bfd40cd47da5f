#include <catch2/catch_amalgamated.hpp>

#include "ramval/builtins.hpp"
#include "ramval/invariants.hpp"

using namespace ramval;

namespace {

ExtensionData build_builtin(const std::string& name) {
    Scenario sc = builtin_scenario(name);
    ExtensionSpec spec{sc.kind, sc.ground, sc.truncation, sc.rhs, sc.rhs_tail_negative};
    return sc.kind == ExtKind::TowerAS ? build_tower(spec) : build_extension(spec);
}

/// Defect scenario at p = 3 over F_27 (the lower step of the p = 3 tower,
/// taken on its own).
ExtensionData defect_p3() {
    Scenario sc = detail::defect_base(3, 27, 10, detail::defect_exponents_p3(11), "defect-p3");
    return build_extension(ExtensionSpec{sc.kind, sc.ground, sc.truncation, sc.rhs, true});
}

} // namespace

TEST_CASE("gamma from the valuation basis") {
    CHECK(gamma_from_basis(build_builtin("as-defectless-e-p2")) == Rat(1, 2));
    CHECK(gamma_from_basis(build_builtin("as-defectless-e-p3")) == Rat(1, 3));
    CHECK(gamma_from_basis(build_builtin("as-defectless-fsep-p2")) == Rat(0));
    CHECK(gamma_from_basis(build_builtin("as-defectless-finsep-p2")) == Rat(1));
    CHECK_THROWS_AS(gamma_from_basis(build_builtin("as-defect-sec3.4-p2")), NoValuationBasis);
}

TEST_CASE("the identity generates the zero ideal") {
    ExtensionData x = build_builtin("as-defectless-e-p2");
    CHECK_FALSE(ratio_minus_one_value(x, elem_theta(x), Auto{0, 0}).has_value());
}

TEST_CASE("principal ramification ideals with sampled minima") {
    OracleConfig cfg{1000, 42};
    {
        RamificationReport r = ram_ideal_defectless(build_builtin("as-defectless-e-p2"), cfg);
        CHECK(r.gamma == Rat(1, 2));
        CHECK(r.ideal.principal);
        CHECK(r.ideal.generator_value == Rat(1, 2));
        CHECK(r.oracle_min == Rat(1, 2));
        CHECK(r.witness.find("theta^1") != std::string::npos);
    }
    {
        // separable inertial step: the ideal is the whole valuation ring
        RamificationReport r = ram_ideal_defectless(build_builtin("as-defectless-fsep-p2"), cfg);
        CHECK(r.gamma == Rat(0));
        CHECK(r.ideal == principal_ideal(Rat(0), ValueGroup(2, {Rat(1)})));
    }
    {
        RamificationReport r = ram_ideal_defectless(build_builtin("as-defectless-finsep-p2"), cfg);
        CHECK(r.gamma == Rat(1));
        CHECK(r.ideal.generator_value == Rat(1));
    }
    CHECK_THROWS_AS(ram_ideal_defectless(build_builtin("as-defect-sec3.4-p2"), cfg),
                    NoValuationBasis);
}

TEST_CASE("defect jump is an open cut with no smallest element") {
    OracleConfig cfg{600, 42};
    ExtensionData x = build_builtin("as-defect-sec3.4-p2");
    RamificationReport r = sigma_defect(x, *x.profile, cfg);
    CHECK(r.defect_case);
    CHECK(r.gamma == Rat(1, 2));
    CHECK_FALSE(r.ideal.principal);
    CHECK(r.jump.bound == Rat(1, 2));
    CHECK_FALSE(r.jump.attained);
    // witness values -q_{k+1} decrease strictly and every one is undercut
    REQUIRE(r.witness_values.size() == 15);
    CHECK(r.witness_values[0] == Rat(2, 3));
    for (size_t i = 0; i + 1 < r.witness_values.size(); ++i) {
        CHECK(r.witness_values[i + 1] < r.witness_values[i]);
        CHECK(r.witness_values[i + 1] > Rat(1, 2));
    }
    // applying the wrong route fails loudly
    ExtensionData dl = build_builtin("as-defectless-e-p2");
    CHECK_THROWS_AS(sigma_defect(dl, *x.profile, cfg), InvalidInput);
}

TEST_CASE("defect jump does not depend on the choice of sigma (p = 3)") {
    // sigma_defect already compares v(a - sigma a) across both nontrivial
    // automorphisms and would abort on a mismatch
    OracleConfig cfg{200, 7};
    ExtensionData x = defect_p3();
    RamificationReport r = sigma_defect(x, *x.profile, cfg);
    CHECK(r.gamma == Rat(1, 3));
    CHECK_FALSE(r.ideal.principal);
    // direct check on a sampled element for both generators
    Sampler rng(99);
    ExtElem b = sample_basis_combination(rng, x);
    auto v1 = ratio_minus_one_value(x, b, Auto{0, 1});
    auto v2 = ratio_minus_one_value(x, b, Auto{0, 2});
    REQUIRE(v1.has_value());
    REQUIRE(v2.has_value());
    CHECK(*v1 == *v2);
}

TEST_CASE("exponent invariance: v(sigma a^i / a^i - 1) = v(sigma a / a - 1)") {
    ExtensionData x = build_builtin("as-defectless-e-p3");
    Sampler rng(31337);
    for (int s = 0; s < 100; ++s) {
        ExtElem a = sample_basis_combination(rng, x);
        auto v1 = ratio_minus_one_value(x, a, Auto{0, 1});
        if (!v1) continue;
        REQUIRE(*v1 > Rat(0));
        ExtElem ai = a;
        for (int i = 2; i < x.p; ++i) {
            ai = elem_mul(x, ai, a);
            auto vi = ratio_minus_one_value(x, ai, Auto{0, 1});
            REQUIRE(vi.has_value());
            CHECK(*vi == *v1);
        }
    }
}

TEST_CASE("combination bound: v(sigma b/b - 1) >= min_i v(sigma(c_i b_i)/(c_i b_i) - 1)") {
    ExtensionData x = build_builtin("as-defectless-e-p2");
    Sampler rng(424242);
    for (int s = 0; s < 500; ++s) {
        ExtElem b = sample_basis_combination(rng, x);
        for (int t = 1; t < x.p; ++t) {
            std::optional<Rat> rhs;
            for (int j = 0; j < x.p; ++j) {
                if (b.coords[0][j].terms().empty()) continue;
                ExtElem term = elem_monomial(x, 0, j, b.coords[0][j]);
                auto v = ratio_minus_one_value(x, term, Auto{0, t});
                if (v && (!rhs || *v < *rhs)) rhs = *v;
            }
            auto lhs = ratio_minus_one_value(x, b, Auto{0, t});
            if (!rhs) continue;
            if (lhs) CHECK(*lhs >= *rhs);
        }
    }
}

TEST_CASE("multiplicative and additive ramification conditions agree when vL = vK") {
    // for each sampled ideal I, (for all b: sigma b - b in I) holds iff
    // (for all b: sigma b / b - 1 in I) holds
    for (const char* name : {"as-defectless-fsep-p2", "as-defectless-finsep-p2"}) {
        ExtensionData x = build_builtin(name);
        REQUIRE(x.vL == x.vK);
        Sampler rng(808);
        for (int trial = 0; trial < 40; ++trial) {
            FinalSegment seg{Rat(rng.int_in(0, 5)), rng.coin(), x.vL};
            IdealDescriptor I = make_ideal(seg);
            bool additive_all = true, multiplicative_all = true;
            for (int s = 0; s < 60; ++s) {
                ExtElem b = ramval::detail::sample_integral_element(rng, x);
                HahnSeries diff = elem_eval(x, elem_sub(apply_auto(x, b, Auto{0, 1}), b));
                if (diff.is_certified_zero()) continue;
                Rat vdiff = diff.val_finite();
                Rat vb = elem_eval(x, b).val_finite();
                if (!I.value_in(vdiff)) additive_all = false;
                if (!I.value_in(vdiff - vb)) multiplicative_all = false;
            }
            CHECK(additive_all == multiplicative_all);
        }
    }
}

TEST_CASE("tower subgroup ideals all coincide and are principal") {
    OracleConfig cfg{400, 42};
    {
        ExtensionData x = build_builtin("tower-sec3.4-p2");
        TowerReport tr = tower_subgroup_ideals(x, cfg);
        CHECK(tr.subgroup_ideals.size() == 4); // <tau>, <sigma tau^0>, <sigma tau^1>, G
        for (const auto& [label, rep] : tr.subgroup_ideals) {
            CHECK(rep.gamma == Rat(1, 2));
            CHECK(rep.ideal.principal);
            CHECK(rep.ideal.generator_value == Rat(1, 2));
            CHECK(rep.oracle_min == Rat(1, 2));
        }
        CHECK(tr.all_coincide_principal);
        CHECK(tr.strict_inequality_certified);
        CHECK_FALSE(tr.lower_ideal.ideal.principal);
        CHECK(tr.lower_ideal.jump.bound == Rat(1, 2));
        CHECK(tr.d_lower == 2);
        CHECK(tr.d_upper == 1);
        CHECK(tr.d_total == 2);
        CHECK(tr.ostrowski_ok);
    }
    {
        ExtensionData x = build_builtin("tower-sec3.4-p3");
        TowerReport tr = tower_subgroup_ideals(x, cfg);
        CHECK(tr.subgroup_ideals.size() == 5);
        for (const auto& [label, rep] : tr.subgroup_ideals) {
            CHECK(rep.gamma == Rat(1, 3));
            CHECK(rep.ideal.principal);
        }
        CHECK(tr.all_coincide_principal);
        CHECK_FALSE(tr.lower_ideal.ideal.principal);
        CHECK(tr.lower_ideal.jump.bound == Rat(1, 3));
    }
}

TEST_CASE("swapped tower: a defect step on top has a nonprincipal smallest ideal") {
    // ground field M0 = K(y) with y^2 + y = 1/t over the divisible-hull K:
    // vM0 = vK + Z/2. The same rhs s now defines a defect step on top of M0,
    // whose ramification ideal is the open cut at 1/2 even though 1/2 lies
    // in vM0.
    Scenario base = builtin_scenario("as-defect-sec3.4-p2");
    Scenario swapped = base;
    swapped.ground.value_group = ValueGroup(2, {Rat(1), Rat(1, 2)}, true);
    ExtensionData x = build_extension(ExtensionSpec{swapped.kind, swapped.ground,
                                                    swapped.truncation, swapped.rhs, true});
    CHECK(x.d == 2);
    CHECK(x.vL.contains(Rat(1, 2)));
    OracleConfig cfg{400, 42};
    RamificationReport r = sigma_defect(x, *x.profile, cfg);
    CHECK_FALSE(r.ideal.principal);
    CHECK(r.jump.bound == Rat(1, 2));
    CHECK_FALSE(r.jump.attained);
    // the other intermediate step of the rearranged tower is defectless with
    // the principal ideal [1/2, oo), which strictly contains the open cut
    IdealDescriptor principal_side = principal_ideal(Rat(1, 2), x.vL);
    CHECK(principal_side.principal);
    CHECK(principal_side.segment.contains(Rat(1, 2)));
    CHECK_FALSE(r.ideal.segment.contains(Rat(1, 2)));
}
