#pragma once

#include "acceptance.hpp"
#include "classify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace csurg {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& r);  // "p/q"
Json integer_json(const BigInt& v);     // number when it fits in 64 bits, else a string

Json invariants_report(const ContactSurgeryDiagram& d, const std::optional<std::vector<int>>& signs);
Json expand_report(const ContactSurgeryDiagram& d);
Json tightness_report(long long tb, long long plus, long long minus, const Rational& r, std::optional<int> first);
Json family_list_report();
Json family_eval_report(const std::string& id, const Params& params);
Json family_describe_report(const std::string& id, const Params& params, const Atlas& atlas);
Json family_verify_report(const VerifyResult& v, const std::vector<long long>& ms, const Bounds& b);
Json xi_report(const XiResult& x, const Bounds& b);
Json cs_bounds_report(Manifold mf, long long m, bool tight, const std::optional<BigInt>& euler,
                      const std::optional<Rational>& d3, const std::vector<FlavorBound>& rows);
Json enumerate_report(Manifold mf, long long m, const Bounds& b, const std::vector<Cs1Entry>& entries);
Json selftest_report(const std::vector<CriterionResult>& results, const Bounds& b);

// Plain-text form of any report above.
std::string render_human(const Json& report);

Manifold parse_manifold(const std::string& name);
std::string manifold_key(Manifold m);  // sigma, negsigma, lens

}  // namespace csurg
