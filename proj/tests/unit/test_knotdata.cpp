#include "knotdata.hpp"

#include <doctest.h>

using namespace csurg;

TEST_CASE("realizations from mountain ranges") {
    const Atlas& a = default_atlas();
    CHECK(a.realizations("unknot", -3) == std::set<long long>{-2, 0, 2});
    CHECK(a.realizations("unknot", -1) == std::set<long long>{0});
    CHECK(a.realizations("unknot", 0).empty());
    CHECK(a.realizations(torus_label(1), -6) == std::set<long long>{-1, 1});
    CHECK(a.realizations(torus_label(1), -8) == std::set<long long>{-3, -1, 1, 3});
    CHECK(a.max_tb("right-trefoil") == 1);
    CHECK(torus_label(2) == "T(2,-5)");
}

TEST_CASE("atlas json round trip") {
    Atlas a = Atlas::from_json_text(default_atlas().to_json_text());
    CHECK(a.labels() == default_atlas().labels());
    CHECK(a.realizations("K5a1", -5) == default_atlas().realizations("K5a1", -5));
    CHECK_THROWS(Atlas::from_json_text("{"));
}

TEST_CASE("topological coefficient") {
    CHECK(topological_coefficient({"K", "unknot", -1, 0, Rational(-3, 4)}) == Rational(-7, 4));
    CHECK(topological_coefficient({"K", "right-trefoil", 1, 0, Rational(-1)}) == Rational(0));
}

TEST_CASE("validation") {
    ContactSurgeryDiagram ok;
    ok.add_component({"K", "unknot", -3, 2, Rational(1, 2)});
    CHECK(validate(ok).empty());

    ContactSurgeryDiagram bad_rot;
    bad_rot.add_component({"K", "unknot", -3, 1, Rational(1)});
    CHECK_FALSE(validate(bad_rot).empty());

    ContactSurgeryDiagram zero;
    zero.add_component({"K", "unknot", -1, 0, Rational(0)});
    CHECK_FALSE(validate(zero).empty());

    ContactSurgeryDiagram above;
    above.add_component({"K", "unknot", 0, 0, Rational(1)});
    CHECK_FALSE(validate(above).empty());
}
