#include "csurg/csurg.h"

#include "acceptance.hpp"
#include "diagram_io.hpp"
#include "report.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct csurg_atlas {
    csurg::Atlas atlas;
};

struct csurg_diagram {
    csurg::ContactSurgeryDiagram diagram;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
int guarded(F&& f) {
    last_error.clear();
    try {
        return f();
    } catch (const csurg::ParseError& e) {
        last_error = e.what();
        return CSURG_PARSE;
    } catch (const csurg::InvalidDiagram& e) {
        last_error = e.what();
        return CSURG_INVALID;
    } catch (const csurg::IoError& e) {
        last_error = e.what();
        return CSURG_IO;
    } catch (const csurg::DomainError& e) {
        last_error = e.what();
        return CSURG_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return CSURG_DOMAIN;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return CSURG_INTERNAL;
    } catch (...) {
        last_error = "internal error";
        return CSURG_INTERNAL;
    }
}

int emit(const csurg::Json& j, int format, char** out) {
    if (!out) throw csurg::DomainError("output pointer is NULL");
    if (format == CSURG_JSON) *out = dup(j.dump(2) + "\n");
    else if (format == CSURG_HUMAN) *out = dup(csurg::render_human(j));
    else throw csurg::DomainError("unknown output format " + std::to_string(format));
    return CSURG_OK;
}

const csurg::Atlas& atlas_of(const csurg_atlas* a) { return a ? a->atlas : csurg::default_atlas(); }

csurg::Bounds bounds_of(const char* text) {
    csurg::Bounds b;
    if (text) b.apply(text);
    return b;
}

long long to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw csurg::DomainError(what + ": '" + s + "' is not an integer");
    return v;
}

csurg::Params params_of(long long m, const char* text) {
    csurg::Params p;
    if (m > 0) p["m"] = m;
    if (!text) return p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw csurg::DomainError("params: expected name=value, got '" + item + "'");
        p[item.substr(0, eq)] = to_int(item.substr(eq + 1), "params");
    }
    return p;
}

std::optional<std::vector<int>> signs_of(const char* text) {
    if (!text || std::strcmp(text, "enumerate") == 0) return std::nullopt;
    std::vector<int> s;
    for (const char* c = text; *c; ++c) {
        if (*c == '+') s.push_back(1);
        else if (*c == '-') s.push_back(-1);
        else throw csurg::DomainError(std::string("stabilization signs: expected '+' or '-', got '") + *c + "'");
    }
    return s;
}

int parse_into(const std::string& text, const csurg_atlas* atlas, csurg_diagram** out, char** warnings) {
    if (!out) throw csurg::DomainError("output pointer is NULL");
    csurg::ParsedDiagram p = csurg::parse_diagram(text, atlas_of(atlas));
    std::string w;
    for (const auto& x : p.warnings) w += x + "\n";
    if (warnings) *warnings = dup(w);
    *out = new csurg_diagram{std::move(p.diagram)};
    return CSURG_OK;
}

}  // namespace

extern "C" {

const char* csurg_last_error(void) { return last_error.c_str(); }

void csurg_free_string(char* s) { std::free(s); }

const char* csurg_version(void) { return "1.0.0"; }

int csurg_atlas_builtin(csurg_atlas** out) {
    return guarded([&] {
        if (!out) throw csurg::DomainError("output pointer is NULL");
        *out = new csurg_atlas{csurg::Atlas::builtin()};
        return CSURG_OK;
    });
}

int csurg_atlas_load(const char* path, csurg_atlas** out) {
    return guarded([&] {
        if (!out || !path) throw csurg::DomainError("NULL argument");
        *out = new csurg_atlas{csurg::Atlas::from_json_text(csurg::read_file(path))};
        return CSURG_OK;
    });
}

void csurg_atlas_free(csurg_atlas* atlas) { delete atlas; }

int csurg_diagram_parse(const char* text, const csurg_atlas* atlas, csurg_diagram** out, char** warnings) {
    return guarded([&] {
        if (!text) throw csurg::DomainError("NULL diagram text");
        return parse_into(text, atlas, out, warnings);
    });
}

int csurg_diagram_parse_file(const char* path, const csurg_atlas* atlas, csurg_diagram** out, char** warnings) {
    return guarded([&] {
        if (!path) throw csurg::DomainError("NULL path");
        return parse_into(csurg::read_file(path), atlas, out, warnings);
    });
}

void csurg_diagram_free(csurg_diagram* d) { delete d; }

int csurg_diagram_serialize(const csurg_diagram* d, char** out) {
    return guarded([&] {
        if (!d || !out) throw csurg::DomainError("NULL argument");
        *out = dup(csurg::serialize_diagram(d->diagram));
        return CSURG_OK;
    });
}

int csurg_invariants(const csurg_diagram* d, const char* signs, int d3_only, int format, char** out) {
    return guarded([&] {
        if (!d) throw csurg::DomainError("NULL diagram");
        csurg::Json j = csurg::invariants_report(d->diagram, signs_of(signs));
        if (!d3_only) return emit(j, format, out);
        csurg::Json v;
        v["schema_version"] = csurg::kSchemaVersion;
        v["kind"] = "d3";
        v["values"] = csurg::Json::array();
        bool undefined = false;
        std::string text;
        for (const auto& row : j["rows"]) {
            v["values"].push_back(row["d3"]);
            undefined = undefined || row["d3"].is_null();
            std::string s = row["d3"].is_null() ? "undefined" : row["d3"].get<std::string>();
            if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
            text += s + "\n";
        }
        if (!out) throw csurg::DomainError("output pointer is NULL");
        *out = dup(format == CSURG_JSON ? v.dump(2) + "\n" : text);
        if (undefined) {
            last_error = "d3 is undefined: the Euler class is not torsion";
            return CSURG_UNDEFINED_D3;
        }
        return CSURG_OK;
    });
}

int csurg_expand(const csurg_diagram* d, int format, char** out) {
    return guarded([&] {
        if (!d) throw csurg::DomainError("NULL diagram");
        return emit(csurg::expand_report(d->diagram), format, out);
    });
}

int csurg_tightness(long long tb, long long plus, long long minus, const char* coeff, int first_stab, int format,
                    char** out) {
    return guarded([&] {
        if (!coeff) throw csurg::DomainError("NULL coefficient");
        std::optional<int> first;
        if (first_stab != 0) first = first_stab;
        return emit(csurg::tightness_report(tb, plus, minus, csurg::Rational::parse(coeff), first), format, out);
    });
}

int csurg_family_list(int format, char** out) {
    return guarded([&] { return emit(csurg::family_list_report(), format, out); });
}

int csurg_family_eval(const char* id, long long m, const char* params, int format, char** out) {
    return guarded([&] {
        if (!id) throw csurg::DomainError("NULL family id");
        return emit(csurg::family_eval_report(id, params_of(m, params)), format, out);
    });
}

int csurg_family_describe(const char* id, long long m, const char* params, const csurg_atlas* atlas, int format,
                          char** out) {
    return guarded([&] {
        if (!id) throw csurg::DomainError("NULL family id");
        return emit(csurg::family_describe_report(id, params_of(m, params), atlas_of(atlas)), format, out);
    });
}

int csurg_family_verify(const char* id, long long m, const char* bounds, const csurg_atlas* atlas, int format,
                        char** out) {
    return guarded([&] {
        if (!id) throw csurg::DomainError("NULL family id");
        csurg::Bounds b = bounds_of(bounds);
        std::vector<long long> ms;
        if (m > 0) ms.push_back(m);
        else
            for (long long i = 1; i <= b.m_max; ++i) ms.push_back(i);
        csurg::VerifyResult v = csurg::family_verify(id, ms, b, atlas_of(atlas));
        int rc = emit(csurg::family_verify_report(v, ms, b), format, out);
        if (!v.ok()) {
            last_error = std::string(id) + ": family and engine disagree";
            return CSURG_MISMATCH;
        }
        return rc;
    });
}

int csurg_xi(long long m, long long n, const char* bounds, int format, char** out) {
    return guarded([&] {
        csurg::Bounds b = bounds_of(bounds);
        return emit(csurg::xi_report(csurg::xi_Nm(m, n, b), b), format, out);
    });
}

int csurg_cs_bounds(const char* manifold, long long m, int tight, const char* euler, const char* d3, const char* bounds,
                    int format, char** out) {
    return guarded([&] {
        if (!manifold) throw csurg::DomainError("NULL manifold");
        csurg::Manifold mf = csurg::parse_manifold(manifold);
        std::optional<csurg::BigInt> e;
        std::optional<csurg::Rational> r;
        if (euler) e = csurg::BigInt(to_int(euler, "euler"));
        if (d3) r = csurg::Rational::parse(d3);
        auto rows = csurg::cs_bounds(mf, m, tight != 0, e, r, bounds_of(bounds));
        return emit(csurg::cs_bounds_report(mf, m, tight != 0, e, r, rows), format, out);
    });
}

int csurg_enumerate(const char* manifold, long long m, const char* bounds, const csurg_atlas* atlas, int format,
                    char** out) {
    return guarded([&] {
        if (!manifold) throw csurg::DomainError("NULL manifold");
        csurg::Manifold mf = csurg::parse_manifold(manifold);
        csurg::Bounds b = bounds_of(bounds);
        auto entries = csurg::enumerate_manifold(mf, m, b, atlas_of(atlas));
        return emit(csurg::enumerate_report(mf, m, b, entries), format, out);
    });
}

int csurg_selftest(const char* bounds, const char* criteria, const csurg_atlas* atlas, int format, char** out) {
    return guarded([&] {
        csurg::Bounds b = bounds_of(bounds);
        std::set<int> only;
        if (criteria) only = csurg::parse_criteria(criteria);
        auto results = csurg::run_acceptance(b, atlas_of(atlas), only);
        int rc = emit(csurg::selftest_report(results, b), format, out);
        for (const auto& r : results)
            if (!r.pass) {
                last_error = "criterion " + std::to_string(r.id) + " failed: " + r.name;
                return CSURG_MISMATCH;
            }
        return rc;
    });
}

}  // extern "C"
