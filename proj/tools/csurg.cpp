// Command-line front end. Talks to the library only through csurg.h.
#include "csurg/csurg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Handle {
    csurg_atlas* atlas = nullptr;
    ~Handle() { csurg_atlas_free(atlas); }
};

int finish(int rc, char* out) {
    if (out) {
        std::fputs(out, stdout);
        csurg_free_string(out);
    }
    if (rc != CSURG_OK) std::cerr << "error: " << csurg_last_error() << "\n";
    return rc;
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contact surgery diagrams: invariants, tightness, surgery-number families"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::optional<std::string> atlas_path;
    app.add_option("--format", format, "human, machine or json")
        ->check(CLI::IsMember({"human", "machine", "json"}));
    app.add_option("--atlas", atlas_path, "Legendrian atlas JSON (default: builtin)");

    std::string file;
    std::optional<std::string> signs, bounds, params, criteria, euler, d3;
    bool d3_only = false;
    long long m = 0, n = 0, tb = 0, plus = 0, minus = 0;
    int first = 0;
    std::string coeff, id, manifold = "lens";
    bool tight = false;

    auto* inv = app.add_subcommand("invariants", "H1, Euler class and d3 of a diagram file");
    inv->add_option("file", file, "diagram file")->required();
    inv->add_option("--stabilization-signs", signs, "enumerate (default) or a string of + and -");
    inv->add_flag("--d3-only", d3_only, "print only d3; exit 4 when it is undefined");

    auto* exp = app.add_subcommand("expand", "expansion of every component into +-1 and +-1/n surgeries");
    exp->add_option("file", file, "diagram file")->required();

    auto* ser = app.add_subcommand("serialize", "canonical form of a diagram file");
    ser->add_option("file", file, "diagram file")->required();

    auto* tgt = app.add_subcommand("tightness", "tightness of rational surgery on a Legendrian unknot");
    tgt->add_option("--tb", tb, "Thurston-Bennequin invariant (<= -1)")->required();
    tgt->add_option("--plus", plus, "positive stabilizations")->required();
    tgt->add_option("--minus", minus, "negative stabilizations")->required();
    tgt->add_option("--coeff", coeff, "contact surgery coefficient p/q")->required();
    tgt->add_option("--first-stab", first, "sign of the first stabilization of the chain (+1 or -1)")
        ->check(CLI::IsMember({-1, 1}));

    auto* fam = app.add_subcommand("family", "contact surgery number one families");
    fam->require_subcommand(1);
    auto* flist = fam->add_subcommand("list", "all families with their domains");
    auto* feval = fam->add_subcommand("eval", "(e, d3) at a parameter point");
    auto* fdesc = fam->add_subcommand("describe", "single-knot surgery diagram of a family");
    auto* fver = fam->add_subcommand("verify", "compare a family with the engine over the bounded grid");
    for (auto* sc : {feval, fdesc, fver}) {
        sc->add_option("id", id, "family id, e.g. T1.7-1 or Table1-5")->required();
        sc->add_option("--m", m, "m parameter");
    }
    for (auto* sc : {feval, fdesc}) sc->add_option("--params", params, "name=value list, e.g. k=-1,l=0");
    fver->add_option("--bounds", bounds, "key=value list: m, t, k, sigma_tb, trefoil_tb, lens_tb");

    auto* xi = app.add_subcommand("xi", "overtwisted structure (e, d3) = xi_N^m and its surgery number");
    xi->add_option("--m", m, "lens parameter, L(4m+3,4)")->required();
    xi->add_option("--N", n, "d3 offset")->required();
    xi->add_option("--bounds", bounds, "search bounds");

    auto* bnd = app.add_subcommand("bounds", "bounds on the contact surgery numbers of a structure");
    bnd->add_option("--manifold", manifold, "sigma, negsigma or lens");
    bnd->add_option("--m", m, "lens parameter");
    bnd->add_flag("--tight", tight, "the structure is tight");
    bnd->add_option("--euler", euler, "Euler class in the standard generator");
    bnd->add_option("--d3", d3, "d3 invariant p/q");
    bnd->add_option("--bounds", bounds, "search bounds");

    auto* enm = app.add_subcommand("enumerate", "single-knot surgeries onto a manifold within bounds");
    enm->add_option("--manifold", manifold, "sigma, negsigma or lens");
    enm->add_option("--m", m, "lens parameter");
    enm->add_option("--bounds", bounds, "search bounds");

    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--bounds", bounds, "search bounds, e.g. m=1");
    st->add_option("--criteria", criteria, "criteria to run, e.g. 1,3-5");

    CLI11_PARSE(app, argc, argv);

    int fmt = format == "human" ? CSURG_HUMAN : CSURG_JSON;
    Handle h;
    if (atlas_path && csurg_atlas_load(atlas_path->c_str(), &h.atlas) != CSURG_OK) {
        std::cerr << "error: " << csurg_last_error() << "\n";
        return CSURG_IO;
    }
    char* out = nullptr;

    if (inv->parsed() || exp->parsed() || ser->parsed()) {
        csurg_diagram* d = nullptr;
        char* warnings = nullptr;
        int rc = csurg_diagram_parse_file(file.c_str(), h.atlas, &d, &warnings);
        if (warnings) {
            std::string w = warnings;
            csurg_free_string(warnings);
            if (!w.empty()) std::cerr << "warning: " << w;
        }
        if (rc != CSURG_OK) return finish(rc, nullptr);
        if (inv->parsed()) rc = csurg_invariants(d, opt(signs), d3_only ? 1 : 0, fmt, &out);
        else if (exp->parsed()) rc = csurg_expand(d, fmt, &out);
        else rc = csurg_diagram_serialize(d, &out);
        csurg_diagram_free(d);
        return finish(rc, out);
    }
    int rc = CSURG_OK;
    if (tgt->parsed()) rc = csurg_tightness(tb, plus, minus, coeff.c_str(), first, fmt, &out);
    else if (flist->parsed()) rc = csurg_family_list(fmt, &out);
    else if (feval->parsed()) rc = csurg_family_eval(id.c_str(), m, opt(params), fmt, &out);
    else if (fdesc->parsed()) rc = csurg_family_describe(id.c_str(), m, opt(params), h.atlas, fmt, &out);
    else if (fver->parsed()) rc = csurg_family_verify(id.c_str(), m, opt(bounds), h.atlas, fmt, &out);
    else if (xi->parsed()) rc = csurg_xi(m, n, opt(bounds), fmt, &out);
    else if (bnd->parsed())
        rc = csurg_cs_bounds(manifold.c_str(), m, tight ? 1 : 0, opt(euler), opt(d3), opt(bounds), fmt, &out);
    else if (enm->parsed()) rc = csurg_enumerate(manifold.c_str(), m, opt(bounds), h.atlas, fmt, &out);
    else if (st->parsed()) rc = csurg_selftest(opt(bounds), opt(criteria), h.atlas, fmt, &out);
    return finish(rc, out);
}
