#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramval/hahn.hpp"

using namespace ramval;

namespace {

HahnSeries mono(std::uint32_t q, Rat e, int c = 1, int cap = 64) {
    return HahnSeries::monomial(q, e, Coeff::from_int(q, c), cap);
}

/// Random nonzero series: a handful of terms with small fractional
/// exponents, occasionally truncated.
HahnSeries random_series(std::mt19937_64& rng, std::uint32_t q, bool allow_trunc = true) {
    for (;;) {
        HahnSeries s = HahnSeries::zero(q, 64);
        int n = 1 + (int)(rng() % 4);
        for (int i = 0; i < n; ++i) {
            Rat e((std::int64_t)(rng() % 17) - 8, 1 + (std::int64_t)(rng() % 4));
            std::uint32_t c = (std::uint32_t)(rng() % q);
            if (c == 0) c = 1;
            s = s + HahnSeries::monomial(q, e, Coeff(FqElem(q, c)), 64);
        }
        if (allow_trunc && (rng() % 3) == 0)
            s = s.truncated_at(Rat(3 + (std::int64_t)(rng() % 6)));
        if (!s.terms().empty()) return s;
    }
}

} // namespace

TEST_CASE("valuation of simple series") {
    HahnSeries x = mono(2, Rat(-1)) + mono(2, Rat(0));
    CHECK(x.val() == Rat(-1));
    CHECK_FALSE(HahnSeries::zero(2).val().has_value()); // exact zero: infinity

    // s = sum t^(2 q_i) with q_1 = -1 has valuation -2
    HahnSeries s = mono(2, Rat(-2)) + mono(2, Rat(-4, 3)) + mono(2, Rat(-10, 9));
    CHECK(s.val() == Rat(-2));

    HahnSeries lost = HahnSeries::zero(2).truncated_at(Rat(5));
    CHECK_THROWS_AS(lost.val(), IndeterminateValuation);
    CHECK(lost.val_lower_bound() == Rat(5));
}

TEST_CASE("multiplication examples") {
    CHECK((mono(2, Rat(-1, 2)) * mono(2, Rat(1, 2))) == HahnSeries::one(2));
    // (1+t)^2 = 1 + t^2 in characteristic 2
    HahnSeries one_t = HahnSeries::one(2) + mono(2, Rat(1));
    HahnSeries sq = one_t * one_t;
    CHECK(sq == HahnSeries::one(2) + mono(2, Rat(2)));
}

TEST_CASE("Artin-Schreier relation of the embedded root") {
    // theta = t^(-1/2) + t^(-1/4) + ... satisfies theta^2 + theta = 1/t up
    // to the guaranteed window
    HahnSeries a = mono(2, Rat(-1), 1, 24);
    HahnSeries theta = artin_schreier_root(a, 2);
    CHECK(theta.val() == Rat(-1, 2));
    HahnSeries residual = theta.frobenius() - theta - a; // char 2: theta^2 + theta + a
    CHECK(residual.terms().empty());
    REQUIRE(residual.trunc().has_value());
}

TEST_CASE("inverse by geometric expansion") {
    CHECK(mono(2, Rat(1)).inverse() == mono(2, Rat(-1)));

    HahnSeries one_t = (HahnSeries::one(2) + mono(2, Rat(1))).truncated_at(Rat(6));
    HahnSeries inv = one_t.inverse();
    for (int k = 0; k < 6; ++k) CHECK(inv.coefficient(Rat(k)) == Coeff::one(2));
    HahnSeries prod = one_t * inv;
    CHECK(prod.coefficient(Rat(0)) == Coeff::one(2));
    CHECK(prod.terms().size() == 1);

    HahnSeries theta = artin_schreier_root(mono(2, Rat(-1), 1, 24), 2);
    HahnSeries itheta = theta.inverse();
    CHECK(itheta.val() == Rat(1, 2));
    HahnSeries check = theta * itheta;
    CHECK(check.coefficient(Rat(0)) == Coeff::one(2));
    CHECK(check.terms().size() == 1);

    CHECK_THROWS_AS(HahnSeries::zero(2).inverse(), DivisionByZero);
}

TEST_CASE("pth root examples") {
    CHECK(mono(2, Rat(2)).pth_root() == mono(2, Rat(1)));
    HahnSeries x = mono(2, Rat(-2)) + mono(2, Rat(-4, 3));
    CHECK(x.pth_root() == mono(2, Rat(-1)) + mono(2, Rat(-2, 3)));
    CHECK(x.pth_root().frobenius() == x);
}

TEST_CASE("Artin-Schreier root construction cases") {
    // a = 0: the canonical root is 0
    CHECK(artin_schreier_root(HahnSeries::zero(2), 2).is_certified_zero());

    // a = t: root t + t^2 + t^4 + ... (positive part only)
    HahnSeries a = mono(2, Rat(1), 1, 16);
    HahnSeries th = artin_schreier_root(a, 2);
    CHECK(th.coefficient(Rat(1)) == Coeff::one(2));
    CHECK(th.coefficient(Rat(2)) == Coeff::one(2));
    CHECK(th.coefficient(Rat(4)) == Coeff::one(2));
    CHECK((th.frobenius() - th - a).terms().empty());

    // a = 1/t: root t^(-1/2) + t^(-1/4) + ..., value -1/2
    HahnSeries b = mono(2, Rat(-1), 1, 24);
    HahnSeries tb = artin_schreier_root(b, 2);
    CHECK(tb.val() == Rat(-1, 2));
    CHECK(tb.coefficient(Rat(-1, 2)) == Coeff::one(2));
    CHECK(tb.coefficient(Rat(-1, 4)) == Coeff::one(2));
    CHECK(tb.coefficient(Rat(-1, 8)) == Coeff::one(2));

    // residue equation without a root in the coefficient field
    CHECK_THROWS_AS(artin_schreier_root(HahnSeries::one(2), 2), ResidueRootMissing);
    CHECK_NOTHROW(artin_schreier_root(HahnSeries::one(4), 2));
}

TEST_CASE("random roots satisfy their equations") {
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint32_t q = (i % 2) ? 4u : 9u;
        std::uint32_t p = (i % 2) ? 2u : 3u;
        HahnSeries a = random_series(rng, q);
        // keep the residue equation solvable: drop the constant term
        if (a.terms().count(Rat(0))) a = a - HahnSeries::constant(q, a.coefficient(Rat(0)));
        if (a.terms().empty()) continue;
        HahnSeries th = artin_schreier_root(a, p);
        HahnSeries residual = th.frobenius() - th - a;
        CHECK(residual.terms().empty());
        // p-th roots match termwise exponent division
        HahnSeries r = a.pth_root();
        CHECK(r.frobenius() == a);
        ++done;
    }
    CHECK(done >= 90);
}

TEST_CASE("valuation is multiplicative and ultrametric on samples") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        std::uint32_t q = (i % 2) ? 4u : 3u;
        HahnSeries x = random_series(rng, q);
        HahnSeries y = random_series(rng, q);
        Rat vx = x.val_finite(), vy = y.val_finite();
        HahnSeries xy = x * y;
        CHECK(xy.val_finite() == vx + vy);
        HahnSeries s = x + y;
        if (!s.terms().empty()) {
            CHECK(s.val_finite() >= std::min(vx, vy));
            if (vx != vy) CHECK(s.val_finite() == std::min(vx, vy));
        }
    }
}

TEST_CASE("refining the policy never changes guaranteed terms") {
    // the root of 1/t at two precisions agrees on the coarse window
    HahnSeries coarse_rhs = mono(2, Rat(-1), 1, 12);
    HahnSeries fine_rhs = mono(2, Rat(-1), 1, 48);
    HahnSeries coarse = artin_schreier_root(coarse_rhs, 2);
    HahnSeries fine = artin_schreier_root(fine_rhs, 2);
    REQUIRE(coarse.trunc().has_value());
    for (const auto& [e, c] : coarse.terms()) {
        auto it = fine.terms().find(e);
        REQUIRE(it != fine.terms().end());
        CHECK(it->second == c);
    }
    // and no fine term below the coarse window is missing from coarse
    for (const auto& [e, c] : fine.terms()) {
        if (e >= *coarse.trunc()) continue;
        CHECK(coarse.terms().count(e) == 1);
    }

    // same stability for a truncated product
    HahnSeries a = (mono(2, Rat(-1)) + mono(2, Rat(1, 2))).truncated_at(Rat(2));
    HahnSeries b = (HahnSeries::one(2) + mono(2, Rat(1, 3))).truncated_at(Rat(3));
    HahnSeries ab = a * b;
    HahnSeries a2 = (mono(2, Rat(-1)) + mono(2, Rat(1, 2))).truncated_at(Rat(5));
    HahnSeries b2 = (HahnSeries::one(2) + mono(2, Rat(1, 3))).truncated_at(Rat(6));
    HahnSeries ab2 = a2 * b2;
    REQUIRE(ab.trunc().has_value());
    for (const auto& [e, c] : ab.terms()) {
        auto it = ab2.terms().find(e);
        REQUIRE(it != ab2.terms().end());
        CHECK(it->second == c);
    }
}

TEST_CASE("windows below zero need the negative-tail declaration") {
    HahnSeries a = mono(2, Rat(-2), 1, 24).truncated_at(Rat(-1));
    CHECK_THROWS_AS(artin_schreier_root(a, 2), IndeterminateValuation);
    HahnSeries th = artin_schreier_root(a, 2, /*tail_is_negative=*/true);
    CHECK(th.val() == Rat(-1));
    REQUIRE(th.trunc().has_value());
    CHECK(*th.trunc() == Rat(-1, 2));
}
