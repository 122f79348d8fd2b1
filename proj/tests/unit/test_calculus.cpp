#include "calculus.hpp"

#include <doctest.h>

using namespace csurg;

namespace {
LegendrianComponent knot(const char* label, long long tb, long long rot, Rational coeff) {
    return {"K", label, tb, rot, coeff};
}
}  // namespace

TEST_CASE("reciprocal replacement") {
    auto c = replace_reciprocal(knot("unknot", -1, 0, Rational(1, 4)));
    CHECK(c.entries.size() == 4);
    CHECK(c.total_stabilizations() == 0);
    CHECK(chain_coefficient(c) == Rational(1, 4));
}

TEST_CASE("transform of a negative integer") {
    auto c = transform(knot(torus_label(1).c_str(), -6, 1, Rational(-2)));
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].coeff == Rational(-1));
    CHECK(c.entries[0].increment == 1);
    CHECK(c.tb(0) == -7);
}

TEST_CASE("transform reassembles the coefficient") {
    for (long long p = -13; p <= 13; ++p)
        for (long long q = 1; q <= 7; ++q) {
            Rational r(p, q);
            if (r.is_zero() || big_gcd(BigInt(p), BigInt(q)) != 1) continue;
            auto c = transform(knot("unknot", -2, 1, r));
            CHECK(chain_coefficient(c) == r);
            auto u = transform(knot("unknot", -2, 1, r), std::nullopt, false);
            for (const auto& e : u.entries) CHECK(e.coeff.abs() == Rational(1));
        }
}

TEST_CASE("sign assignments") {
    auto c = transform(knot("unknot", -1, 0, Rational(-11, 9)), std::nullopt, false);
    CHECK(c.increments() == std::vector<long long>{1, 0, 0, 0, 1});
    auto all = enumerate_sign_assignments(c);
    CHECK(all.size() == 4);
    for (const auto& a : all) CHECK(a.signs_assigned());
    auto one = assign_signs(c, {1, -1});
    CHECK(one.rot(0) == 1);
    CHECK(one.rot(4) == 0);
    CHECK_THROWS(assign_signs(c, {1}));
}

TEST_CASE("cancellation pair and unit expansion") {
    auto d = cancellation_pair(knot("unknot", -3, 2, Rational(1)), 2);
    REQUIRE(d.size() == 2);
    CHECK(d.components[0].coeff + d.components[1].coeff == Rational(0));
    CHECK(d.linking[0][1] == -3);
    auto u = unit_expansion(d);
    CHECK(u.size() == 4);
    CHECK(is_reciprocal(Rational(-1, 5)));
    CHECK_FALSE(is_reciprocal(Rational(2, 3)));
}

TEST_CASE("normal forms of a general diagram") {
    ContactSurgeryDiagram d;
    d.add_component(knot("unknot", -1, 0, Rational(-3, 4)));
    CHECK(required_sign_count(d) == 2);
    CHECK(normal_forms(d).size() == 3);
    CHECK(normal_forms(d, std::vector<int>{1, -1}).size() == 1);
}
