#include "calculus.hpp"
#include "invariants.hpp"

#include <doctest.h>

using namespace csurg;

namespace {
ContactSurgeryDiagram single(const std::string& label, long long tb, long long rot, Rational coeff) {
    ContactSurgeryDiagram d;
    d.add_component({"K", label, tb, rot, coeff});
    return d;
}
}  // namespace

TEST_CASE("generalized linking matrix of a cancellation pair") {
    auto d = cancellation_pair({"K", "unknot", -4, 1, Rational(1)}, 1);
    auto g = build_q(d);
    CHECK(g.Q == make_int_matrix({{-3, -4}, {-4, -5}}));
    CHECK(h1(d).factors.size() == 2);
    CHECK(nontrivial_factors(h1(d).factors).empty());
}

TEST_CASE("homology of lens surgeries") {
    auto p = h1(single(torus_label(1), -6, 1, Rational(-1)));
    CHECK(nontrivial_factors(p.factors) == IntVector{BigInt(7)});
}

TEST_CASE("d3 anchors") {
    auto r = evaluate_reciprocal(single(torus_label(1), -8, 1, Rational(1)), true);
    REQUIRE(r.d3);
    CHECK(*r.d3 == Rational(17, 14));

    auto t = compute_invariants(single("right-trefoil", 1, 0, Rational(-1, 2)));
    REQUIRE(t.size() == 1);
    REQUIRE(t[0].d3);
    CHECK(*t[0].d3 == Rational(-1));

    auto c = compute_invariants(cancellation_pair({"K", "unknot", -3, 2, Rational(1)}, 2));
    REQUIRE(c.size() == 1);
    CHECK(c[0].h1_factors.empty());
    CHECK(*c[0].d3 == Rational(0));
}

TEST_CASE("d3 is undefined off torsion") {
    auto r = compute_invariants(single("unknot", -2, 1, Rational(2)));
    REQUIRE_FALSE(r.empty());
    bool free_class = false;
    for (const auto& row : r) {
        CHECK(row.euler_torsion == row.d3.has_value());
        free_class = free_class || !row.euler_torsion;
    }
    CHECK(free_class);
}

TEST_CASE("meridian images agree with the linear solve") {
    for (auto coeff : {Rational(-11, 9), Rational(5, 3), Rational(-3), Rational(7, 2)}) {
        LegendrianComponent k{"K", "unknot", -2, 1, coeff};
        auto raw = transform(k, std::nullopt, false);
        for (const auto& c : enumerate_sign_assignments(raw)) {
            auto solved = euler_coefficient(chain_diagram(c));
            REQUIRE(solved);
            auto images = meridian_images(c.positive_count, static_cast<long long>(c.entries.size()), c.tb(0),
                                          c.increments());
            CHECK(images.size() == c.entries.size());
            BigInt via = 0;
            auto rots = c.rot_vector();
            for (std::size_t j = 0; j < images.size(); ++j) via += BigInt(rots[j]) * images[j];
            if (solved->modulus == 0) CHECK(via == solved->value);
            else CHECK(mod_floor(via - solved->value, solved->modulus) == 0);
        }
    }
}

TEST_CASE("connected sum adds d3") {
    ClassAndD3 a{HomologyClass{{BigInt(3)}, {BigInt(7)}}, Rational(1, 2)};
    ClassAndD3 b{HomologyClass{{}, {}}, Rational(7)};
    auto s = connected_sum(a, b);
    CHECK(s.d3 == Rational(15, 2));
    CHECK(s.euler == a.euler);
}

TEST_CASE("rational tb of a meridian") {
    CHECK(meridian_rational_tb(BigInt(5), BigInt(2), -3) == Rational(1));
    CHECK(meridian_rational_tb(BigInt(1), BigInt(2), -1) == Rational(1));
    CHECK(meridian_rational_tb(BigInt(1), BigInt(1), -2) == Rational(0));
}
