#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramval/value_group.hpp"

using namespace ramval;

namespace {
const ValueGroup Z1(2, {Rat(1)});                  // Z
const ValueGroup Zhalf(2, {Rat(1), Rat(1, 2)});    // (1/2) Z
const ValueGroup OddDiv2(2, {Rat(1)}, true);       // Z closed under division by odd primes
const ValueGroup Div3(3, {Rat(1)}, true);          // p = 3 analogue
} // namespace

TEST_CASE("group membership by denominator analysis") {
    CHECK_FALSE(Z1.contains(Rat(1, 2)));
    CHECK(Z1.contains(Rat(-7)));
    CHECK(OddDiv2.contains(Rat(-5, 9)));
    CHECK_FALSE(OddDiv2.contains(Rat(-1, 2)));
    CHECK(OddDiv2.contains(Rat(0)));
    CHECK(Zhalf.contains(Rat(-3, 2)));
    CHECK_FALSE(Zhalf.contains(Rat(1, 4)));
    CHECK(Div3.contains(Rat(5, 8)));
    CHECK_FALSE(Div3.contains(Rat(1, 6)));
}

TEST_CASE("group axioms hold on samples") {
    std::mt19937_64 rng(7);
    auto sample = [&](const ValueGroup& g) {
        Rat v = g.canonical_generator() * Rat((std::int64_t)(rng() % 17) - 8);
        if (g.divisible_coprime_to_p()) {
            std::int64_t d = 1 + (std::int64_t)(rng() % 9);
            while (d % g.p() == 0) ++d;
            v = v / Rat(d);
        }
        return v;
    };
    for (const ValueGroup* g : {&Z1, &Zhalf, &OddDiv2, &Div3}) {
        for (int i = 0; i < 200; ++i) {
            Rat a = sample(*g), b = sample(*g);
            REQUIRE(g->contains(a));
            CHECK(g->contains(a + b));
            CHECK(g->contains(-a));
        }
    }
}

TEST_CASE("smallest positive element") {
    CHECK(Z1.smallest_positive() == Rat(1));
    CHECK_FALSE(OddDiv2.smallest_positive().has_value()); // contains 1/3^k: dense
    CHECK(Zhalf.smallest_positive() == Rat(1, 2));
}

TEST_CASE("cofinality criterion") {
    CHECK_FALSE(cofinal_below(Z1, Zhalf)); // smallest positive elements differ
    CHECK(cofinal_below(Z1, Z1));
    CHECK(cofinal_below(OddDiv2, OddDiv2.extended_by(Rat(1, 2)))); // dense below
}

TEST_CASE("value group equality is canonical") {
    CHECK(ValueGroup(2, {Rat(1)}) == ValueGroup(2, {Rat(3), Rat(5)})); // gcd(3,5) = 1, both are Z
    CHECK(ValueGroup(2, {Rat(1)}, true) == ValueGroup(2, {Rat(1, 3)}, true));
    CHECK_FALSE(ValueGroup(2, {Rat(1)}, true) == ValueGroup(2, {Rat(1, 2)}, true));
    CHECK_FALSE(ValueGroup(2, {Rat(1)}) == ValueGroup(2, {Rat(1, 2)}));
}

TEST_CASE("normalize_segment canonical forms") {
    // open cut over a discrete group snaps to the next element
    FinalSegment s1 = normalize_segment({Rat(1), false, Z1});
    CHECK(s1.attained);
    CHECK(s1.bound == Rat(2));
    // open cut over a dense group has no minimum: unchanged
    FinalSegment s2 = normalize_segment({Rat(1, 2), false, OddDiv2});
    CHECK_FALSE(s2.attained);
    CHECK(s2.bound == Rat(1, 2));
    // [0, oo) is already canonical
    FinalSegment s3 = normalize_segment({Rat(0), true, OddDiv2});
    CHECK(s3.attained);
    CHECK(s3.bound == Rat(0));
    // attained at a non-member re-decides attainment
    FinalSegment s4 = normalize_segment({Rat(1, 2), true, Z1});
    CHECK(s4.attained);
    CHECK(s4.bound == Rat(1));
}

TEST_CASE("normalize_segment is idempotent and preserves membership") {
    std::mt19937_64 rng(11);
    const ValueGroup* groups[] = {&Z1, &Zhalf, &OddDiv2, &Div3};
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const ValueGroup& g = *groups[rng() % 4];
        Rat bound((std::int64_t)(rng() % 13) - 6, 1 + (std::int64_t)(rng() % 4));
        FinalSegment s{bound, (rng() & 1) != 0, g};
        FinalSegment n = normalize_segment(s);
        CHECK(normalize_segment(n) == n);
        // membership agrees on sampled group values
        for (int k = 0; k < 8; ++k) {
            Rat v = g.canonical_generator() * Rat((std::int64_t)(rng() % 25) - 12);
            if (g.divisible_coprime_to_p()) v = v / Rat(1 + 2 * (std::int64_t)(rng() % 5));
            if (!g.contains(v)) continue;
            CHECK(s.contains(v) == n.contains(v));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("segment_power scales cuts") {
    IdealDescriptor half = principal_ideal(Rat(1, 2), Zhalf);
    IdealDescriptor sq = segment_power(half, 2);
    CHECK(sq.principal);
    CHECK(sq.generator_value == Rat(1));

    IdealDescriptor open_half = open_ideal(Rat(1, 2), OddDiv2);
    CHECK(segment_power(open_half, 1) == open_half);

    IdealDescriptor open_sq = segment_power(open_half, 2);
    CHECK_FALSE(open_sq.principal);
    CHECK(open_sq.segment.bound == Rat(1));
}

TEST_CASE("segment_power matches enumerated n-fold sums") {
    // enumeration oracle: values -q_{k+1} = (3^k+1)/(2*3^k) of the defect
    // ideal, doubled, confirm the resulting cut
    std::vector<Rat> vals;
    std::int64_t pow3 = 1;
    for (int k = 1; k <= 12; ++k) {
        pow3 *= 3;
        vals.push_back(Rat(pow3 + 1, 2 * pow3));
    }
    IdealDescriptor ideal = open_ideal(Rat(1, 2), OddDiv2);
    for (const Rat& v : vals) REQUIRE(ideal.value_in(v));

    IdealDescriptor doubled = segment_power(ideal, 2);
    Rat least_double = vals.back() * Rat(2);
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = 0; j < vals.size(); ++j) {
            Rat s = vals[i] + vals[j];
            CHECK(doubled.value_in(s));
            if (s < least_double) least_double = s;
        }
    // the doubled values approach 1 but the cut at 1 is not attained
    CHECK(least_double > Rat(1));
    CHECK(least_double - Rat(1) < Rat(1, 100000));
    CHECK_FALSE(doubled.value_in(Rat(1)));
    CHECK_FALSE(doubled.principal);
}

TEST_CASE("power identity: ideal generated by (I cap K)^n when vL = vK") {
    // discrete case: enumerate segment elements, form n-fold sums, compare
    for (int n = 1; n <= 3; ++n) {
        IdealDescriptor i = principal_ideal(Rat(2), Z1);
        IdealDescriptor pow = segment_power(i, n);
        Rat least(1000);
        for (int a = 2; a < 8; ++a) { // sums of n values >= 2
            for (int b = 2; b < 8; ++b) {
                Rat s = n == 1 ? Rat(a) : (n == 2 ? Rat(a + b) : Rat(a + b + 2));
                CHECK(pow.value_in(s));
                if (s < least) least = s;
            }
        }
        CHECK(least == Rat(2 * n));
        CHECK(pow.generator_value == Rat(2 * n));
    }
    // dense case: sums of sampled elements of an open segment stay in the
    // scaled segment and undercut every candidate minimum
    IdealDescriptor open_seg = open_ideal(Rat(1, 3), Div3);
    IdealDescriptor sq = segment_power(open_seg, 2);
    std::mt19937_64 rng(5);
    Rat least(1000);
    for (int k = 0; k < 400; ++k) {
        Rat a = Rat(1, 3) + Rat(1, 2 + (std::int64_t)(rng() % 64));
        Rat b = Rat(1, 3) + Rat(1, 2 + (std::int64_t)(rng() % 64));
        if (!Div3.contains(a) || !Div3.contains(b)) continue;
        REQUIRE(open_seg.value_in(a));
        Rat s = a + b;
        CHECK(sq.value_in(s));
        if (s < least) least = s;
    }
    CHECK(least > Rat(2, 3));
    CHECK_FALSE(sq.value_in(Rat(2, 3)));
}

TEST_CASE("segment restrict re-decides attainment in the subgroup") {
    IdealDescriptor d = principal_ideal(Rat(1, 2), Zhalf);
    IdealDescriptor r = segment_restrict(d, Z1);
    CHECK(r.principal);
    CHECK(r.generator_value == Rat(1));
    IdealDescriptor r2 = segment_restrict(principal_ideal(Rat(2), Zhalf), Z1);
    CHECK(r2.generator_value == Rat(2));
}

TEST_CASE("maximal ideal descriptor") {
    CHECK(maximal_ideal_descriptor(Z1) == principal_ideal(Rat(1), Z1));
    IdealDescriptor m = maximal_ideal_descriptor(OddDiv2);
    CHECK_FALSE(m.principal);
    CHECK(m.segment.bound == Rat(0));
}
