#include "classify.hpp"

#include <doctest.h>

using namespace csurg;

TEST_CASE("unknot tightness certificates") {
    auto neg = unknot_tightness(-2, 1, 0, Rational(-5, 3));
    CHECK(neg.tight);
    CHECK(neg.certificate == Certificate::NegativeCoefficient);

    auto ot = unknot_tightness(-3, 1, 1, Rational(1));
    CHECK_FALSE(ot.tight);

    auto lantern = unknot_tightness(-3, 2, 0, Rational(7, 2), 1);
    CHECK(lantern.tight);
    CHECK(lantern.certificate == Certificate::LanternReductionToTight);

    auto flipped = unknot_tightness(-3, 0, 2, Rational(7, 2), -1);
    CHECK(flipped.tight == lantern.tight);
}

TEST_CASE("family evaluation") {
    auto a = family_eval("T1.1-1", {{"m", 4}});
    REQUIRE(a.d3);
    CHECK(*a.d3 == Rational(-5));
    CHECK_THROWS_AS(family_eval("T1.1-1", {{"m", 3}}), DomainError);

    auto b = family_eval("T1.7-1", {{"m", 1}, {"k", -1}});
    CHECK(*b.e == 3);
    CHECK(*b.d3 == Rational(17, 14));

    std::set<BigInt> es;
    for (long long l : {0, 1}) es.insert(*family_eval("T1.5", {{"m", 2}, {"l", l}}).e);
    CHECK(es == std::set<BigInt>{BigInt(6), BigInt(3)});

    CHECK_THROWS_AS(family("no-such-family"), DomainError);
}

TEST_CASE("lens classes") {
    CHECK(lens_order(1) == 7);
    CHECK(canonical_lens_class(BigInt(4), 1) == 3);
    CHECK(canonical_lens_class(BigInt(-3), 1) == 3);
}

TEST_CASE("overtwisted structures beyond surgery number one") {
    Bounds b;
    auto x = xi_Nm(1, 7, b);
    CHECK(x.euler == 0);
    CHECK(x.d3 == Rational(15, 2));
    CHECK(x.cs_gt_1);

    auto z = xi_Nm(1, 0, b);
    CHECK(z.d3 == Rational(1, 2));
    CHECK(xi_Nm(2, 0, b).d3 == Rational(1, 2) - Rational(1, 11));
}

TEST_CASE("surgery number bounds on the negative Brieskorn sphere") {
    Bounds b;
    auto rows = cs_bounds(Manifold::NegSigma2311, 0, false, std::nullopt, Rational(0), b);
    bool found = false;
    for (const auto& r : rows)
        if (r.flavor == "cs_pm1") {
            found = true;
            CHECK(r.lo == 1);
            CHECK(r.hi == 1);
        }
    CHECK(found);
}

TEST_CASE("bounds parsing") {
    Bounds b;
    b.apply("m=2,t=-8");
    CHECK(b.m_max == 2);
    CHECK(b.t_min == -8);
    CHECK(b.m_explicit);
    CHECK_THROWS(b.apply("bogus=1"));
}
