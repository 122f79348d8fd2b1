#include "diagram_io.hpp"

#include <doctest.h>

using namespace csurg;

TEST_CASE("parse and serialize round trip") {
    const std::string text =
        "component A knot=unknot tb=-3 rot=2 coeff=1/2\n"
        "component B knot=unknot tb=-3 rot=2 coeff=-1/2\n"
        "link A B -3\n";
    auto p = parse_diagram(text);
    CHECK(p.warnings.empty());
    REQUIRE(p.diagram.size() == 2);
    CHECK(p.diagram.linking[0][1] == -3);
    auto again = parse_diagram(serialize_diagram(p.diagram));
    CHECK(serialize_diagram(again.diagram) == serialize_diagram(p.diagram));
}

TEST_CASE("topological coefficients are converted") {
    auto p = parse_diagram("component K knot=unknot tb=-1 rot=0 topo=-7/4\n");
    CHECK(p.diagram.components[0].coeff == Rational(-3, 4));
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_diagram("component K knot=unknot tb=-1 rot=0 coeff=-1\nlink K\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("invalid diagrams are rejected") {
    CHECK_THROWS_AS(parse_diagram("component K knot=unknot tb=-1 rot=0 coeff=0\n"), InvalidDiagram);
    CHECK_THROWS_AS(parse_diagram("component K knot=unknot tb=-2 rot=0 coeff=1\n"), InvalidDiagram);
}

TEST_CASE("unknown knots produce a warning") {
    auto p = parse_diagram(read_file(std::string(FIXTURES) + "/custom_knot.dgm"));
    CHECK_FALSE(p.warnings.empty());
    CHECK_THROWS_AS(read_file(std::string(FIXTURES) + "/missing.dgm"), IoError);
}
