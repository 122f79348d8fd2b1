#include "report.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace csurg {

Json rational_json(const Rational& r) { return r.str(); }

Json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

namespace {

Json integers(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

Json header(const char* kind) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

std::string sign_text(const std::vector<int>& s) {
    std::string out;
    for (int x : s) out += x > 0 ? '+' : '-';
    return out;
}

Json component_json(const LegendrianComponent& c) {
    return Json{{"name", c.name}, {"knot", c.knot_label}, {"tb", c.tb}, {"rot", c.rot}, {"coeff", rational_json(c.coeff)}};
}

Json params_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

// H1 = Z/4m+3 with the knot T(2,-(2m+1)): coordinate in the standard generator
std::optional<BigInt> standard_lens_coordinate(const ContactSurgeryDiagram& d, const InvariantReport& rep) {
    if (d.size() != 1 || !rep.euler_coefficient || rep.h1_factors.size() != 1) return std::nullopt;
    for (int m = 1; m <= 64; ++m) {
        if (d.components[0].knot_label != torus_label(m)) continue;
        BigInt p = lens_order(m);
        if (rep.h1_factors[0] != p) return std::nullopt;
        return mod_floor(rep.euler_coefficient->value * 2 * (m + 1), p);
    }
    return std::nullopt;
}

}  // namespace

Json invariants_report(const ContactSurgeryDiagram& d, const std::optional<std::vector<int>>& signs) {
    Json j = header("invariants");
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(component_json(c));
    j["components"] = comps;
    auto reports = compute_invariants(d, signs);
    j["h1_factors"] = reports.empty() ? Json::array() : integers(reports.front().h1_factors);
    j["expansion_trace"] = reports.empty() ? "" : reports.front().expansion_trace;
    Json rows = Json::array();
    std::set<std::pair<std::vector<BigInt>, std::string>> distinct;
    Json distinct_rows = Json::array();
    for (const auto& rep : reports) {
        Json row;
        row["signs"] = sign_text(rep.signs);
        row["rots"] = rep.rots;
        row["euler"] = Json{{"coords", integers(rep.euler.coords)}, {"factors", integers(rep.euler.factors)}};
        row["euler_torsion"] = rep.euler_torsion;
        row["d3"] = rep.d3 ? rational_json(*rep.d3) : Json(nullptr);
        if (rep.euler_coefficient)
            row["euler_coefficient"] = Json{{"value", integer_json(rep.euler_coefficient->value)},
                                            {"modulus", integer_json(rep.euler_coefficient->modulus)}};
        else
            row["euler_coefficient"] = nullptr;
        if (auto s = standard_lens_coordinate(d, rep)) row["euler_standard"] = integer_json(*s);
        row["signature"] = Json{{"plus", rep.inertia.n_plus}, {"minus", rep.inertia.n_minus}, {"zero", rep.inertia.n_zero}};
        rows.push_back(row);
        auto key = std::make_pair(rep.euler.coords, rep.d3 ? rep.d3->str() : std::string("-"));
        if (distinct.insert(key).second)
            distinct_rows.push_back(Json{{"euler", integers(rep.euler.coords)}, {"d3", row["d3"]}});
    }
    j["rows"] = rows;
    j["distinct"] = distinct_rows;
    return j;
}

Json expand_report(const ContactSurgeryDiagram& d) {
    Json j = header("expand");
    Json comps = Json::array();
    auto entries_json = [](const ExpansionChain& ch) {
        Json a = Json::array();
        for (std::size_t i = 0; i < ch.entries.size(); ++i) {
            const auto& e = ch.entries[i];
            a.push_back(Json{{"coeff", rational_json(e.coeff)},
                             {"tb", ch.tb(i)},
                             {"new_stabilizations", e.increment},
                             {"stabilizations", e.stab_count}});
        }
        return a;
    };
    for (const auto& c : d.components) {
        Json x = component_json(c);
        bool rec = is_reciprocal(c.coeff);
        ExpansionChain ch = rec ? replace_reciprocal(c) : transform(c);
        x["reciprocal"] = rec;
        x["positive_entries"] = ch.positive_count;
        x["chain"] = entries_json(ch);
        Json lk = Json::array();
        for (std::size_t a = 0; a < ch.entries.size(); ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < ch.entries.size(); ++b)
                row.push_back(a == b ? 0 : ch.tb(std::min(a, b)));
            lk.push_back(row);
        }
        x["linking"] = lk;
        if (!rec) {
            ExpansionChain units = transform(c, std::nullopt, false);
            x["unit_chain"] = entries_json(units);
            Rational residual = c.coeff;
            if (residual.sign() > 0) {
                Rational rest = residual.reciprocal() - Rational(ch.positive_count);
                residual = rest.is_zero() ? Rational(0) : rest.reciprocal();
            }
            if (residual.sign() < 0) {
                x["residual"] = rational_json(residual);
                x["negcf"] = integers(negcf(residual));
                x["negcf_display"] = integers(negcf_display(residual));
                Json inc = Json::array();
                for (const auto& e : negcf(residual)) inc.push_back(integer_json(abs(BigInt(2) + e)));
                x["stabilizations_per_entry"] = inc;
            }
            x["total_stabilizations"] = ch.total_stabilizations();
        }
        comps.push_back(x);
    }
    j["components"] = comps;
    Json links = Json::array();
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b)
            if (d.linking[a][b] != 0)
                links.push_back(Json{{"a", d.components[a].name}, {"b", d.components[b].name}, {"lk", d.linking[a][b]}});
    j["links"] = links;
    return j;
}

Json tightness_report(long long tb, long long plus, long long minus, const Rational& r, std::optional<int> first) {
    TightnessVerdict v = unknot_tightness(tb, plus, minus, r, first);
    Json j = header("tightness");
    j["tb"] = tb;
    j["stab_plus"] = plus;
    j["stab_minus"] = minus;
    j["coeff"] = rational_json(r);
    j["first_stab_sign"] = first ? Json(*first) : Json(nullptr);
    j["status"] = v.tight ? "tight" : "overtwisted";
    j["certificate"] = to_string(v.certificate);
    j["meridian_tb"] = v.meridian_tb ? rational_json(*v.meridian_tb) : Json(nullptr);
    j["reduced_coeff"] = v.reduced_coeff ? rational_json(*v.reduced_coeff) : Json(nullptr);
    return j;
}

Json family_list_report() {
    Json j = header("family_list");
    Json a = Json::array();
    for (const auto& r : family_records()) {
        Json axes = Json::array();
        for (const auto& ax : r.axes) axes.push_back(Json{{"name", ax.name}, {"domain", ax.domain}});
        a.push_back(Json{{"id", r.id},
                         {"manifold", to_string(r.manifold)},
                         {"params", axes},
                         {"euler", r.euler_text},
                         {"d3", r.d3_text},
                         {"citation", r.citation},
                         {"template", r.template_text},
                         {"group", r.group},
                         {"obstruction", r.obstruction}});
    }
    j["families"] = a;
    return j;
}

Json family_eval_report(const std::string& id, const Params& params) {
    const FamilyRecord& rec = family(id);
    FamilyValue raw = family_eval_raw(id, params);
    FamilyValue v = family_eval(id, params);
    Json j = header("family_eval");
    j["id"] = id;
    j["manifold"] = to_string(rec.manifold);
    j["params"] = params_json(params);
    j["euler"] = v.e ? integer_json(*v.e) : Json(nullptr);
    j["euler_formula"] = raw.e ? integer_json(*raw.e) : Json(nullptr);
    if (rec.manifold == Manifold::Lens && v.e && params.count("m"))
        j["euler_class"] = integer_json(canonical_lens_class(*v.e, params.at("m")));
    j["d3"] = v.d3 ? rational_json(*v.d3) : Json(nullptr);
    return j;
}

Json family_describe_report(const std::string& id, const Params& params, const Atlas& atlas) {
    const FamilyRecord& rec = family(id);
    TemplateInstance ti = family_surgery_description(id, params, atlas);
    Json j = header("family_describe");
    j["id"] = id;
    j["params"] = params_json(params);
    j["template"] = rec.template_text;
    j["knot"] = component_json(ti.knot);
    Json chain = Json::array();
    for (std::size_t i = 0; i < ti.chain.entries.size(); ++i)
        chain.push_back(Json{{"coeff", rational_json(ti.chain.entries[i].coeff)},
                             {"tb", ti.chain.tb(i)},
                             {"new_stabilizations", ti.chain.entries[i].increment}});
    j["chain"] = chain;
    j["meridian_factor"] = ti.meridian_factor;
    j["description"] = ti.description;
    return j;
}

namespace {
Json invariant_list(const std::vector<Invariant>& v) {
    Json a = Json::array();
    for (const auto& [e, d] : v) a.push_back(Json{{"euler", integer_json(e)}, {"d3", rational_json(d)}});
    return a;
}
}  // namespace

Json family_verify_report(const VerifyResult& v, const std::vector<long long>& ms, const Bounds& b) {
    Json j = header("family_verify");
    j["id"] = v.id;
    j["group"] = v.group;
    j["m"] = ms;
    j["bounds"] = b.str();
    j["points"] = v.points;
    Json mm = Json::array();
    for (const auto& x : v.mismatches)
        mm.push_back(Json{{"point", params_json(x.point)},
                          {"engine_only", invariant_list(x.engine_only)},
                          {"formula_only", invariant_list(x.formula_only)}});
    j["mismatches"] = mm;
    j["status"] = v.ok() ? "PASS" : "FAIL";
    return j;
}

Json xi_report(const XiResult& x, const Bounds& b) {
    Json j = header("xi");
    j["m"] = x.m;
    j["N"] = x.N;
    j["bounds"] = b.str();
    j["euler"] = integer_json(x.euler);
    j["d3"] = rational_json(x.d3);
    j["cs_gt_1"] = x.cs_gt_1;
    Json f = Json::array();
    for (const auto& s : x.families) f.push_back(Json{{"id", s.id}, {"status", s.status}, {"detail", s.detail}});
    j["families"] = f;
    j["findings"] = x.findings;
    return j;
}

Json cs_bounds_report(Manifold mf, long long m, bool tight, const std::optional<BigInt>& euler,
                      const std::optional<Rational>& d3, const std::vector<FlavorBound>& rows) {
    Json j = header("cs_bounds");
    j["manifold"] = to_string(mf);
    if (mf == Manifold::Lens) j["m"] = m;
    j["tight"] = tight;
    j["euler"] = euler ? integer_json(*euler) : Json(nullptr);
    j["d3"] = d3 ? rational_json(*d3) : Json(nullptr);
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(Json{{"flavor", r.flavor}, {"lower", r.lo}, {"upper", r.hi}, {"source", r.source}});
    j["bounds"] = a;
    return j;
}

Json enumerate_report(Manifold mf, long long m, const Bounds& b, const std::vector<Cs1Entry>& entries) {
    Json j = header("enumerate");
    j["manifold"] = to_string(mf);
    if (mf == Manifold::Lens) j["m"] = m;
    j["bounds"] = b.str();
    Json a = Json::array();
    for (const auto& e : entries)
        a.push_back(Json{{"knot", e.knot},
                         {"tb", e.tb},
                         {"rot", e.rot},
                         {"coeff", rational_json(e.coeff)},
                         {"euler", integer_json(e.euler)},
                         {"d3", rational_json(e.d3)},
                         {"flavors", flavor_names(e.flavors)},
                         {"tight", e.tight ? Json(*e.tight) : Json(nullptr)}});
    j["entries"] = a;
    return j;
}

Json selftest_report(const std::vector<CriterionResult>& results, const Bounds& b) {
    Json j = header("selftest");
    j["bounds"] = b.str();
    Json a = Json::array();
    bool all = !results.empty();
    for (const auto& r : results) {
        all = all && r.pass;
        a.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    }
    j["criteria"] = a;
    j["pass"] = all;
    return j;
}

Manifold parse_manifold(const std::string& name) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (n == "sigma" || n == "sigma(2,3,11)") return Manifold::Sigma2311;
    if (n == "negsigma" || n == "-sigma" || n == "-sigma(2,3,11)") return Manifold::NegSigma2311;
    if (n == "lens" || n == "l(4m+3,4)") return Manifold::Lens;
    throw DomainError("unknown manifold '" + name + "' (sigma, negsigma, lens)");
}

std::string manifold_key(Manifold m) {
    switch (m) {
        case Manifold::Sigma2311: return "sigma";
        case Manifold::NegSigma2311: return "negsigma";
        default: return "lens";
    }
}

// ---- human rendering ----

namespace {

std::string text(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + text(v[i]);
        return s + ")";
    }
    return v.dump();
}

// "p/q" -> "p" for integers
std::string num(const Json& v) {
    if (!v.is_string()) return text(v);
    std::string s = v.get<std::string>();
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) return s.substr(0, s.size() - 2);
    return s;
}

std::string group_text(const Json& factors) {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::string f = text(factors[i]);
        s += (i ? " + " : "") + (f == "0" ? std::string("Z") : "Z/" + f);
    }
    return s;
}

void render_invariants(const Json& j, std::ostream& os) {
    for (const auto& c : j["components"])
        os << "component " << text(c["name"]) << " knot=" << text(c["knot"]) << " tb=" << text(c["tb"])
           << " rot=" << text(c["rot"]) << " coeff=" << num(c["coeff"]) << "\n";
    os << "H1 = " << group_text(j["h1_factors"]) << "\n";
    std::string trace = j["expansion_trace"].get<std::string>();
    if (!trace.empty()) os << "expansion:\n" << trace;
    const Json& rows = j["rows"];
    os << rows.size() << (rows.size() == 1 ? " stabilization assignment\n" : " stabilization assignments\n");
    for (const auto& r : rows) {
        std::string signs = r["signs"].get<std::string>();
        os << "  signs " << (signs.empty() ? "-" : signs) << "  rots " << text(r["rots"]) << "\n";
        os << "    e = " << (r["euler"]["coords"].empty() ? "0" : text(r["euler"]["coords"]));
        if (!r["euler"]["factors"].empty()) os << " in " << group_text(r["euler"]["factors"]);
        os << (r["euler_torsion"].get<bool>() ? " (torsion)" : " (not torsion)");
        if (!r["euler_coefficient"].is_null()) {
            os << ", e = " << text(r["euler_coefficient"]["value"]) << " mu_K";
            if (text(r["euler_coefficient"]["modulus"]) != "0") os << " mod " << text(r["euler_coefficient"]["modulus"]);
        }
        if (r.contains("euler_standard")) os << ", standard coordinate " << text(r["euler_standard"]);
        os << "\n    d3 = " << (r["d3"].is_null() ? std::string("undefined") : num(r["d3"])) << "  signature "
           << r["signature"]["plus"].get<int>() - r["signature"]["minus"].get<int>() << "\n";
    }
}

void render_chain(const Json& chain, std::ostream& os, const char* indent) {
    for (const auto& e : chain)
        os << indent << num(e["coeff"]) << " tb=" << text(e["tb"]) << " new stabilizations " << text(e["new_stabilizations"])
           << (e.contains("stabilizations") ? " total " + text(e["stabilizations"]) : std::string()) << "\n";
}

void render_expand(const Json& j, std::ostream& os) {
    for (const auto& c : j["components"]) {
        os << text(c["name"]) << " (" << text(c["knot"]) << " tb=" << text(c["tb"]) << " rot=" << text(c["rot"])
           << ") coeff " << num(c["coeff"]) << "\n";
        if (c.contains("negcf")) {
            os << "  residual " << num(c["residual"]) << " negcf " << text(c["negcf_display"]) << " stored "
               << text(c["negcf"]) << "\n";
            os << "  stabilizations per entry " << text(c["stabilizations_per_entry"]) << "\n";
        }
        if (c["positive_entries"].get<long long>() > 0)
            os << "  " << text(c["positive_entries"]) << " leading (+1) push-offs\n";
        os << "  chain:\n";
        render_chain(c["chain"], os, "    ");
        if (c["chain"].size() > 1) {
            os << "  linking:\n";
            for (const auto& row : c["linking"]) os << "    " << text(row) << "\n";
        }
    }
    for (const auto& l : j["links"]) os << "link " << text(l["a"]) << " " << text(l["b"]) << " " << text(l["lk"]) << "\n";
}

void render_tightness(const Json& j, std::ostream& os) {
    os << "unknot tb=" << text(j["tb"]) << " (+" << text(j["stab_plus"]) << " -" << text(j["stab_minus"]) << ") coeff "
       << num(j["coeff"]) << ": " << text(j["status"]) << " [" << text(j["certificate"]) << "]\n";
    if (!j["meridian_tb"].is_null()) os << "  meridian rational tb " << num(j["meridian_tb"]) << "\n";
    if (!j["reduced_coeff"].is_null()) os << "  reduces to the tb -1 unknot with coefficient " << num(j["reduced_coeff"]) << "\n";
}

void render_family_list(const Json& j, std::ostream& os) {
    for (const auto& f : j["families"]) {
        os << text(f["id"]) << "  " << text(f["manifold"]) << "\n";
        std::string params;
        for (const auto& p : f["params"]) params += (params.empty() ? "" : "; ") + text(p["domain"]);
        os << "  params: " << params << "\n";
        os << "  e = " << text(f["euler"]) << "\n";
        if (!f["d3"].get<std::string>().empty()) os << "  d3 = " << text(f["d3"]) << "\n";
        if (!f["template"].get<std::string>().empty()) os << "  diagram: " << text(f["template"]) << "\n";
        os << "  source: " << text(f["citation"]) << "\n";
    }
}

std::string params_text(const Json& p) {
    std::string s;
    for (auto it = p.begin(); it != p.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + text(it.value());
    return s;
}

void render_family_eval(const Json& j, std::ostream& os) {
    os << text(j["id"]) << " " << params_text(j["params"]) << ": (" << text(j["euler"]) << ", "
       << (j["d3"].is_null() ? std::string("-") : num(j["d3"])) << ")\n";
}

void render_family_describe(const Json& j, std::ostream& os) {
    os << text(j["id"]) << " " << params_text(j["params"]) << "\n  " << text(j["description"]) << "\n";
    os << "  knot " << text(j["knot"]["knot"]) << " tb=" << text(j["knot"]["tb"]) << " rot=" << text(j["knot"]["rot"])
       << " coeff " << num(j["knot"]["coeff"]) << ", meridian factor " << text(j["meridian_factor"]) << "\n  chain:\n";
    render_chain(j["chain"], os, "    ");
}

std::string invariants_text(const Json& a) {
    std::string s;
    std::size_t n = 0;
    for (const auto& x : a) {
        if (n++ == 8) {
            s += ", ...";
            break;
        }
        s += (s.empty() ? "" : ", ") + std::string("(") + text(x["euler"]) + ", " + num(x["d3"]) + ")";
    }
    return "{" + s + "}";
}

void render_family_verify(const Json& j, std::ostream& os) {
    os << text(j["status"]) << " " << text(j["id"]) << " (group " << text(j["group"]) << ") m " << text(j["m"]) << ": "
       << text(j["points"]) << " diagram shapes, " << j["mismatches"].size() << " mismatches\n";
    for (const auto& m : j["mismatches"]) {
        std::string at = params_text(m["point"]);
        os << "  at " << (at.empty() ? "all points" : at) << "\n    engine only " << invariants_text(m["engine_only"])
           << "\n    formula only " << invariants_text(m["formula_only"]) << "\n";
    }
}

void render_xi(const Json& j, std::ostream& os) {
    os << "xi m=" << text(j["m"]) << " N=" << text(j["N"]) << ": e = " << text(j["euler"]) << ", d3 = " << num(j["d3"])
       << "\n";
    os << "contact surgery number > 1: " << text(j["cs_gt_1"]) << "\n";
    for (const auto& f : j["families"]) {
        os << "  " << text(f["id"]) << " " << text(f["status"]);
        if (!f["detail"].get<std::string>().empty()) os << " (" << text(f["detail"]) << ")";
        os << "\n";
    }
    for (const auto& f : j["findings"]) os << "  finding: " << text(f) << "\n";
}

void render_cs_bounds(const Json& j, std::ostream& os) {
    os << text(j["manifold"]) << (j.contains("m") ? " m=" + text(j["m"]) : std::string()) << " "
       << (j["tight"].get<bool>() ? "tight" : "overtwisted") << "\n";
    for (const auto& r : j["bounds"]) {
        os << "  " << text(r["flavor"]) << ": ";
        if (r["lower"] == r["upper"]) os << text(r["lower"]);
        else os << text(r["lower"]) << ".." << text(r["upper"]);
        os << "  (" << text(r["source"]) << ")\n";
    }
}

void render_enumerate(const Json& j, std::ostream& os) {
    os << text(j["manifold"]) << (j.contains("m") ? " m=" + text(j["m"]) : std::string()) << ", "
       << j["entries"].size() << " diagrams\n";
    for (const auto& e : j["entries"])
        os << "  " << text(e["knot"]) << " tb=" << text(e["tb"]) << " rot=" << text(e["rot"]) << " coeff " << num(e["coeff"])
           << ": e=" << text(e["euler"]) << " d3=" << num(e["d3"]) << " "
           << (e["tight"].is_null() ? "?" : (e["tight"].get<bool>() ? "tight" : "ot")) << " [" << text(e["flavors"])
           << "]\n";
}

void render_selftest(const Json& j, std::ostream& os) {
    std::size_t passed = 0;
    for (const auto& c : j["criteria"]) {
        bool p = c["pass"].get<bool>();
        passed += p;
        os << (p ? "PASS" : "FAIL") << "  " << c["id"].get<int>() << "  " << text(c["name"]) << "\n";
        for (const auto& d : c["details"]) os << "        " << text(d) << "\n";
    }
    os << passed << "/" << j["criteria"].size() << " criteria passed (bounds " << text(j["bounds"]) << ")\n";
}

}  // namespace

std::string render_human(const Json& j) {
    std::ostringstream os;
    std::string kind = j.value("kind", "");
    if (kind == "invariants") render_invariants(j, os);
    else if (kind == "expand") render_expand(j, os);
    else if (kind == "tightness") render_tightness(j, os);
    else if (kind == "family_list") render_family_list(j, os);
    else if (kind == "family_eval") render_family_eval(j, os);
    else if (kind == "family_describe") render_family_describe(j, os);
    else if (kind == "family_verify") render_family_verify(j, os);
    else if (kind == "xi") render_xi(j, os);
    else if (kind == "cs_bounds") render_cs_bounds(j, os);
    else if (kind == "enumerate") render_enumerate(j, os);
    else if (kind == "selftest") render_selftest(j, os);
    else os << j.dump(2) << "\n";
    return os.str();
}

}  // namespace csurg
