#include "csurg/csurg.h"

#include <doctest.h>

#include <string>

TEST_CASE("c api smoke test") {
    csurg_diagram* d = nullptr;
    char* warnings = nullptr;
    REQUIRE(csurg_diagram_parse("component K knot=T(2,-3) tb=-6 rot=1 coeff=-1\n", nullptr, &d, &warnings) ==
            CSURG_OK);
    CHECK(std::string(warnings).empty());
    csurg_free_string(warnings);

    char* out = nullptr;
    REQUIRE(csurg_invariants(d, nullptr, 0, CSURG_JSON, &out) == CSURG_OK);
    std::string json = out;
    csurg_free_string(out);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"h1_factors\"") != std::string::npos);

    CHECK(csurg_invariants(d, "+-+", 0, CSURG_HUMAN, &out) == CSURG_DOMAIN);
    CHECK(std::string(csurg_last_error()).size() > 0);
    csurg_diagram_free(d);
}

TEST_CASE("c api error codes") {
    csurg_diagram* d = nullptr;
    CHECK(csurg_diagram_parse("component K knot=unknot\n", nullptr, &d, nullptr) == CSURG_PARSE);
    CHECK(csurg_diagram_parse("component K knot=unknot tb=-1 rot=0 coeff=0\n", nullptr, &d, nullptr) == CSURG_INVALID);
    CHECK(csurg_diagram_parse_file("/nonexistent/x.dgm", nullptr, &d, nullptr) == CSURG_IO);

    char* out = nullptr;
    CHECK(csurg_family_eval("T1.1-1", 3, nullptr, CSURG_HUMAN, &out) == CSURG_DOMAIN);
    REQUIRE(csurg_family_eval("T1.7-1", 1, "k=-1", CSURG_HUMAN, &out) == CSURG_OK);
    CHECK(std::string(out).find("17/14") != std::string::npos);
    csurg_free_string(out);

    csurg_atlas* a = nullptr;
    REQUIRE(csurg_atlas_builtin(&a) == CSURG_OK);
    csurg_atlas_free(a);
    CHECK(std::string(csurg_version()) == "1.0.0");
}
