#include "classify.hpp"

#include <algorithm>
#include <sstream>

namespace csurg {

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::NegativeCoefficient: return "negative-coefficient";
        case Certificate::BennequinViolation: return "bennequin-violation";
        case Certificate::MixedStabilization: return "mixed-stabilization";
        case Certificate::WrongFirstStabilization: return "wrong-first-stabilization";
        case Certificate::LanternReductionToTight: return "lantern-reduction-to-tight";
        case Certificate::StabilizedPositiveSurgery: return "stabilized-positive-surgery";
    }
    return "?";
}

std::string to_string(Manifold m) {
    switch (m) {
        case Manifold::Sigma2311: return "Sigma2311";
        case Manifold::NegSigma2311: return "NegSigma2311";
        case Manifold::Lens: return "Lens";
    }
    return "?";
}

TightnessVerdict unknot_tightness(long long t, long long stab_plus, long long stab_minus, const Rational& r,
                                  std::optional<int> first_stab_sign) {
    if (t > -1) throw DomainError("unknot tb must be at most -1");
    if (stab_plus < 0 || stab_minus < 0 || stab_plus + stab_minus != -1 - t)
        throw DomainError("stabilization counts must add up to -1 - tb");
    if (r.is_zero()) throw DomainError("vanishing contact surgery coefficient");
    TightnessVerdict v;
    if (r.sign() < 0) {
        v.tight = true;
        v.certificate = Certificate::NegativeCoefficient;
        return v;
    }
    if (r < Rational(-t)) {
        v.certificate = Certificate::BennequinViolation;
        v.meridian_tb = meridian_rational_tb(r.num(), r.den(), t);
        return v;
    }
    if (stab_plus > 0 && stab_minus > 0) {
        v.certificate = Certificate::MixedStabilization;
        return v;
    }
    if (stab_plus + stab_minus == 0) {
        v.tight = true;
        v.certificate = Certificate::LanternReductionToTight;
        v.reduced_coeff = r;
        return v;
    }
    int sign = stab_plus > 0 ? 1 : -1;
    if (!first_stab_sign)
        throw DomainError("first_stab_sign is required: the transformation chain of this unknot surgery is stabilized");
    if (*first_stab_sign != 1 && *first_stab_sign != -1) throw DomainError("first_stab_sign must be +1 or -1");
    if (*first_stab_sign != sign) {
        v.certificate = Certificate::WrongFirstStabilization;
        return v;
    }
    // U_{-t-1}(r) = U_{-t-2}(r - 1) = ... = U(r + t + 1)
    v.tight = true;
    v.certificate = Certificate::LanternReductionToTight;
    v.reduced_coeff = r + Rational(t + 1);
    return v;
}

std::optional<int> first_chain_stabilization(const ExpansionChain& chain) {
    for (const auto& e : chain.entries) {
        if (e.increment == 0) continue;
        if (!e.signs || e.signs->empty()) return std::nullopt;
        return e.signs->front();
    }
    return std::nullopt;
}

void Bounds::apply(const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("bounds: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        long long value;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DomainError("bounds: '" + item.substr(eq + 1) + "' is not an integer");
        }
        if (key == "m") {
            if (value < 1) throw DomainError("bounds: m must be positive");
            m_max = static_cast<int>(value);
            m_explicit = true;
        } else if (key == "t") {
            if (value > -1) throw DomainError("bounds: t must be negative");
            t_min = value;
        } else if (key == "k") {
            if (value < 1) throw DomainError("bounds: k must be positive");
            k_abs = value;
        } else if (key == "sigma_tb") {
            sigma_tb_min = value;
        } else if (key == "trefoil_tb") {
            trefoil_tb_min = value;
        } else if (key == "lens_tb") {
            lens_tb_min = value;
        } else {
            throw DomainError("bounds: unknown key '" + key + "' (m, t, k, sigma_tb, trefoil_tb, lens_tb)");
        }
    }
}

std::string Bounds::str() const {
    std::ostringstream os;
    os << "m=" << m_max << ",t=" << t_min << ",k=" << k_abs << ",sigma_tb=" << sigma_tb_min
       << ",trefoil_tb=" << trefoil_tb_min << ",lens_tb=" << lens_tb_min;
    return os.str();
}

BigInt lens_order(long long m) { return BigInt(4 * m + 3); }

BigInt canonical_lens_class(const BigInt& e, long long m) {
    BigInt p = lens_order(m);
    BigInt a = mod_floor(e, p);
    BigInt b = mod_floor(-e, p);
    return a < b ? a : b;
}

Rational unknot_lens_coefficient(long long m, long long k, long long t, bool dual) {
    BigInt p = lens_order(m), M(m), K(k), T(t);
    if (dual) return Rational(-p * (1 - K * T) - T * (M + 1), M + 1 - K * p);
    return Rational(-p * (1 - K * T) - 4 * T, 4 - K * p);
}

bool FamilyRecord::has_param(const std::string& name) const {
    return std::any_of(axes.begin(), axes.end(), [&](const ParamAxis& a) { return a.name == name; });
}

namespace {

using Vals = std::vector<long long>;
using Bound = std::function<long long(const Params&)>;

BigInt g(const Params& p, const char* key) { return BigInt(p.at(key)); }
Rational fr(const BigInt& a, const BigInt& b) { return Rational(a, b); }
const Rational kHalf(1, 2);

BigInt pw(const BigInt& base, const BigInt& e) {
    if (e < 0) throw DomainError("negative exponent " + to_string(e) + " in a family formula");
    BigInt r = 1;
    for (BigInt i = 0; i < e; ++i) r *= base;
    return r;
}

ParamAxis listed(std::string name, Vals values) {
    ParamAxis a;
    a.name = std::move(name);
    std::string dom = "{";
    for (std::size_t i = 0; i < values.size(); ++i) dom += (i ? "," : "") + std::to_string(values[i]);
    a.domain = dom + "}";
    a.grid = [values](const Params&, const Bounds&) { return values; };
    a.admits = [values](long long v, const Params&) { return std::find(values.begin(), values.end(), v) != values.end(); };
    return a;
}

ParamAxis sign_axis(std::string name) {
    ParamAxis a = listed(std::move(name), {1, -1});
    a.domain = "{+1,-1}";
    return a;
}

ParamAxis span(std::string name, std::string domain, Bound lo, Bound hi) {
    ParamAxis a;
    a.name = std::move(name);
    a.domain = std::move(domain);
    a.grid = [lo, hi](const Params& p, const Bounds&) {
        Vals out;
        for (long long v = lo(p); v <= hi(p); ++v) out.push_back(v);
        return out;
    };
    a.admits = [lo, hi](long long v, const Params& p) { return v >= lo(p) && v <= hi(p); };
    return a;
}

// v <= hi, enumerated down to a floor taken from the bounds
ParamAxis at_most(std::string name, std::string domain, Bound hi, std::function<long long(const Params&, const Bounds&)> floor) {
    ParamAxis a;
    a.name = std::move(name);
    a.domain = std::move(domain);
    a.clipped = true;
    a.grid = [hi, floor](const Params& p, const Bounds& b) {
        Vals out;
        for (long long v = floor(p, b); v <= hi(p); ++v) out.push_back(v);
        return out;
    };
    a.admits = [hi](long long v, const Params& p) { return v <= hi(p); };
    return a;
}

ParamAxis at_least(std::string name, std::string domain, Bound lo, std::function<long long(const Params&, const Bounds&)> ceil) {
    ParamAxis a;
    a.name = std::move(name);
    a.domain = std::move(domain);
    a.clipped = true;
    a.grid = [lo, ceil](const Params& p, const Bounds& b) {
        Vals out;
        for (long long v = lo(p); v <= ceil(p, b); ++v) out.push_back(v);
        return out;
    };
    a.admits = [lo](long long v, const Params& p) { return v >= lo(p); };
    return a;
}

Bound cst(long long c) { return [c](const Params&) { return c; }; }
Bound par(const char* k, long long off = 0) { return [k, off](const Params& p) { return p.at(k) + off; }; }

ParamAxis m_axis() {
    ParamAxis a = at_least("m", "m >= 1", cst(1), [](const Params&, const Bounds& b) { return static_cast<long long>(b.m_max); });
    a.clipped = false;
    return a;
}

ParamAxis t_axis(std::string domain, Bound hi) {
    return at_most("t", std::move(domain), hi, [](const Params&, const Bounds& b) { return b.t_min; });
}
ParamAxis k_neg(long long hi) {
    return at_most("k", "k <= " + std::to_string(hi), cst(hi), [](const Params&, const Bounds& b) { return -b.k_abs; });
}
ParamAxis k_pos() {
    return at_least("k", "k >= 1", cst(1), [](const Params&, const Bounds& b) { return b.k_abs; });
}
ParamAxis n_axis(long long hi) {
    return span("n", hi == -1 ? "t <= n <= -1" : "t <= n <= " + std::to_string(hi), par("t"), cst(hi));
}
ParamAxis l_axis(const char* name, long long extra) {
    std::string top = extra == 0 ? "m" : (extra > 0 ? "m+" + std::to_string(extra) : "m" + std::to_string(extra));
    return span(name, std::string("0 <= ") + name + " <= " + top, cst(0), par("m", extra));
}

FamilyValue value(const BigInt& e, const Rational& d3) { return FamilyValue{e, d3}; }

std::vector<TemplatePoint> unknot_points(long long m, const Bounds& b, bool dual, std::function<bool(long long, long long)> tp,
                                         std::function<bool(long long)> kp) {
    std::vector<TemplatePoint> out;
    for (long long t = b.t_min; t <= -1; ++t) {
        if (!tp(m, t)) continue;
        for (long long k = -b.k_abs; k <= b.k_abs; ++k) {
            if (!kp(k)) continue;
            Rational c = unknot_lens_coefficient(m, k, t, dual);
            if (c.is_zero()) continue;
            out.push_back({"unknot", t, k, c, dual ? m + 1 : 1, false});
        }
    }
    return out;
}

struct RowDef {
    std::string id;
    std::vector<ParamAxis> axes;
    std::function<FamilyValue(const Params&)> eval;
    std::string e_text, d3_text;
    bool dual = false;
    std::function<bool(long long, long long)> tp;
    std::function<bool(long long)> kp;
    std::string tk_text;
    std::string diagram;
    std::string group;
    std::string obstruction;
};

FamilyRecord lens_row(RowDef s) {
    FamilyRecord r;
    r.id = "Table1-" + s.id;
    r.manifold = Manifold::Lens;
    r.axes.push_back(m_axis());
    for (auto& a : s.axes) r.axes.push_back(std::move(a));
    r.eval = std::move(s.eval);
    r.euler_text = std::move(s.e_text);
    r.d3_text = std::move(s.d3_text);
    r.citation = "overtwisted structures on L(4m+3,4) with rational surgery number one, row " + s.id;
    r.kind = s.dual ? TemplateKind::UnknotDual : TemplateKind::UnknotStandard;
    r.template_text = s.diagram + " with " + s.tk_text + (s.dual ? " (dual unknot)" : " (standard unknot)");
    bool dual = s.dual;
    auto tp = s.tp;
    auto kp = s.kp;
    r.points = [dual, tp, kp](long long m, const Bounds& b) { return unknot_points(m, b, dual, tp, kp); };
    r.group = s.group.empty() ? r.id : "Table1-" + s.group;
    r.obstruction = std::move(s.obstruction);
    return r;
}

auto t_eq(long long off) {  // t = -off - m style predicates built by callers
    return [off](long long m, long long t) { return t == off - m; };
}
auto t_is(long long v) {
    return [v](long long, long long t) { return t == v; };
}
auto t_le(long long v) {
    return [v](long long, long long t) { return t <= v; };
}
auto k_is(long long v) {
    return [v](long long k) { return k == v; };
}
auto k_le(long long v) {
    return [v](long long k) { return k <= v; };
}
auto k_ge(long long v) {
    return [v](long long k) { return k >= v; };
}

Vals even4() { return {0, 2, -2, 4, -4}; }
Vals even2() { return {0, 2, -2}; }
Vals odd3() { return {1, -1, 3, -3}; }

FamilyRecord torus_tight() {
    FamilyRecord r;
    r.id = "T1.5";
    r.manifold = Manifold::Lens;
    r.axes = {m_axis(), l_axis("l", -1)};
    r.eval = [](const Params& P) {
        BigInt m = g(P, "m"), l = g(P, "l");
        return FamilyValue{2 * m * (l + 1) + 2 + 4 * l, std::nullopt};
    };
    r.euler_text = "2m(l+1)+2+4l";
    r.d3_text = "-";
    r.citation = "tight structures on L(4m+3,4) with integer surgery number one: k = 2m(l+1)+2+4l mod 4m+3";
    r.kind = TemplateKind::TorusLens;
    r.template_text = "T(2,-(2m+1)) at tb -4m-2, coefficient -1";
    r.points = [](long long m, const Bounds&) {
        return std::vector<TemplatePoint>{{torus_label(static_cast<int>(m)), -4 * m - 2, 0, Rational(-1), 2 * (m + 1), true}};
    };
    r.group = r.id;
    return r;
}

FamilyRecord torus_unit(const std::string& id) {
    FamilyRecord r;
    r.id = id;
    r.manifold = Manifold::Lens;
    r.axes = {m_axis(), span("k", "-1 <= k <= m", cst(-1), par("m"))};
    r.eval = [](const Params& P) {
        BigInt m = g(P, "m"), k = g(P, "k"), p = 4 * m + 3;
        return value(2 * m + 2 + k, fr(3 * m + 2 - k * (k + 1), p) + kHalf);
    };
    r.euler_text = "2m+2+k";
    r.d3_text = "(3m+2-k(k+1))/(4m+3) + 1/2";
    r.citation = "overtwisted structures on L(4m+3,4) with surgery number one for coefficients +-1";
    r.kind = TemplateKind::TorusLens;
    r.template_text = "T(2,-(2m+1)) at tb -4m-4, coefficient +1";
    r.points = [](long long m, const Bounds&) {
        return std::vector<TemplatePoint>{{torus_label(static_cast<int>(m)), -4 * m - 4, 0, Rational(1), 2 * (m + 1), false}};
    };
    r.group = r.id;
    r.obstruction = "A";
    return r;
}

FamilyRecord torus_integer(const std::string& id) {
    FamilyRecord r;
    r.id = id;
    r.manifold = Manifold::Lens;
    r.axes = {m_axis(),
              at_most("k", "k <= -m-2", [](const Params& p) { return -p.at("m") - 2; },
                      [](const Params& p, const Bounds& b) { return b.lens_tb_min + p.at("m") + 1; }),
              sign_axis("s")};
    r.eval = [](const Params& P) {
        BigInt m = g(P, "m"), k = g(P, "k"), s = g(P, "s"), p = 4 * m + 3;
        return value(s * (k + 1), -fr((k + 1) * (k + 1), p) - Rational(k + m) - kHalf);
    };
    r.euler_text = "s(k+1)";
    r.d3_text = "-(k+1)^2/(4m+3) - k - m - 1/2";
    r.citation = "overtwisted structures on L(4m+3,4) with integer surgery number one";
    r.kind = TemplateKind::TorusLens;
    r.template_text = "T(2,-(2m+1)) at tb t <= -4m-5, coefficient -4m-3-t, chain K(+1) then K_1(-1/(-4m-4-t))";
    r.points = [](long long m, const Bounds& b) {
        std::vector<TemplatePoint> out;
        for (long long t = b.lens_tb_min; t <= -4 * m - 5; ++t)
            out.push_back({torus_label(static_cast<int>(m)), t, 0, Rational(-4 * m - 3 - t), 2 * (m + 1), false});
        return out;
    };
    // at tb t the realized twists are k >= t + m + 1
    r.point_filter = [](const Params& p, const TemplatePoint& pt) { return p.at("k") >= pt.t + p.at("m") + 1; };
    r.group = r.id;
    r.obstruction = "B3";
    return r;
}

FamilyRecord sigma_family(const std::string& id, Manifold mf, std::vector<ParamAxis> axes,
                          std::function<Rational(const Params&)> d3, std::string d3_text, std::string citation,
                          std::string knot, std::function<Rational(long long)> coeff, std::function<long long(const Bounds&)> tlo,
                          long long thi, std::string group) {
    FamilyRecord r;
    r.id = id;
    r.manifold = mf;
    r.axes = std::move(axes);
    r.eval = [d3](const Params& P) { return value(BigInt(0), d3(P)); };
    r.euler_text = "0";
    r.d3_text = std::move(d3_text);
    r.citation = std::move(citation);
    r.kind = mf == Manifold::Sigma2311 ? TemplateKind::Sigma : TemplateKind::NegSigma;
    r.template_text = knot;
    r.points = [knot, coeff, tlo, thi](long long, const Bounds& b) {
        std::vector<TemplatePoint> out;
        for (long long t = tlo(b); t <= thi; ++t) {
            Rational c = coeff(t);
            if (c.is_zero()) continue;
            out.push_back({knot, t, 0, c, 1, false});
        }
        return out;
    };
    r.group = std::move(group);
    return r;
}

ParamAxis branch_axis() { return listed("branch", {1, 2}); }

std::vector<FamilyRecord> build_records() {
    std::vector<FamilyRecord> rs;

    // homology spheres
    rs.push_back(sigma_family(
        "T1.1-1", Manifold::Sigma2311,
        {at_least("m", "m >= 4", cst(4), [](const Params&, const Bounds& b) { return 3 - b.sigma_tb_min; })},
        [](const Params& P) {
            BigInt m = g(P, "m");
            return Rational(m * (3 - m) - 1);
        },
        "m(3-m)-1", "Sigma(2,3,11), integer surgery number one", "K5a1", [](long long t) { return Rational(-1 - t); },
        [](const Bounds& b) { return b.sigma_tb_min; }, -8, "T1.1"));
    {
        ParamAxis m = at_least("m", "m >= -3 (branch 1), m <= -3 (branch 2)", cst(-3),
                               [](const Params&, const Bounds& b) { return -b.trefoil_tb_min; });
        m.grid = [](const Params& p, const Bounds& b) {
            Vals out;
            if (p.at("branch") == 1)
                for (long long v = -3; v <= 4 - b.trefoil_tb_min; ++v) out.push_back(v);
            else
                for (long long v = b.trefoil_tb_min - 4; v <= -3; ++v) out.push_back(v);
            return out;
        };
        m.admits = [](long long v, const Params& p) { return p.at("branch") == 1 ? v >= -3 : v <= -3; };
        rs.push_back(sigma_family(
            "T1.1-2", Manifold::Sigma2311, {branch_axis(), m},
            [](const Params& P) {
                BigInt m = g(P, "m");
                if (P.at("branch") == 1) return Rational(-2 * (m * (m + 2) + 2));
                return Rational(-2 * (m * (m + 3) + 3));
            },
            "-2(m(m+2)+2) (branch 1), -2(m(m+3)+3) (branch 2)", "Sigma(2,3,11), rational surgery number one",
            "left-trefoil", [](long long t) { return Rational(-1 - 2 * t, 2); },
            [](const Bounds& b) { return b.trefoil_tb_min; }, -6, "T1.1"));
    }
    rs.push_back(sigma_family(
        "T1.3-1", Manifold::NegSigma2311,
        {at_least("m", "m >= 0", cst(0), [](const Params&, const Bounds& b) { return 2 - b.sigma_tb_min; })},
        [](const Params& P) {
            BigInt m = g(P, "m");
            return Rational(m * (m - 1));
        },
        "m(m-1)", "-Sigma(2,3,11), integer surgery number one", "-K5a1", [](long long t) { return Rational(1 - t); },
        [](const Bounds& b) { return b.sigma_tb_min; }, 0, "T1.3"));
    rs.push_back(sigma_family(
        "T1.3-2", Manifold::NegSigma2311,
        {branch_axis(),
         at_most("m", "m <= -1", cst(-1), [](const Params&, const Bounds& b) { return b.trefoil_tb_min - 4; })},
        [](const Params& P) {
            BigInt m = g(P, "m");
            if (P.at("branch") == 1) return Rational(2 * m * (m + 1));
            return Rational(2 * (m + 1) * (m + 1));
        },
        "2m(m+1) (branch 1), 2(m+1)^2 (branch 2)", "-Sigma(2,3,11), overtwisted, rational surgery number one",
        "right-trefoil", [](long long t) { return Rational(1 - 2 * t, 2); },
        [](const Bounds& b) { return b.trefoil_tb_min; }, 0, "T1.3"));

    // lens spaces, single torus knot
    rs.push_back(torus_tight());
    rs.push_back(torus_unit("T1.7-1"));
    rs.push_back(torus_integer("T1.7-2"));
    rs.push_back(torus_unit("Table1-1"));
    rs.push_back(torus_integer("Table1-2"));

    // lens spaces, rational unknot surgeries
    rs.push_back(lens_row({"3",
                           {t_axis("t < -2-m", [](const Params& p) { return -p.at("m") - 3; }), n_axis(-1), listed("x", {1, 3}), sign_axis("s"), sign_axis("s2")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), x = g(P, "x"), s = g(P, "s"),
                                      s2 = g(P, "s2"), p = 4 * m + 3;
                               BigInt e = s * (2 * n + 1 + s2) + (2 - t) * (1 + t) * pw(1 - t, -t - m - 3);
                               Rational d = kHalf - fr(m * (7 + x * x) + (19 + x * x), 4 * p) -
                                            fr(m * m + 1 + n * (n + 8 + 4 * m) - 4 * s2 * (1 + n), p);
                               return value(e, d);
                           },
                           "s(2n+1+s2)+(2-t)(1+t)(1-t)^(-t-m-3)",
                           "1/2-(m(7+x^2)+(19+x^2))/(4(4m+3))-(m^2+1+n(n+8+4m)-4 s2 (1+n))/(4m+3)", false,
                           [](long long m, long long t) { return t < -2 - m; }, k_is(0), "t < -2-m, k = 0",
                           "K(+1), K_1(-1/(-t-m-2)), K_{1,3}(-1)", "", "B1"}));
    rs.push_back(lens_row({"4",
                           {listed("y", even4()), l_axis("l", 1)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), y = g(P, "y"), l = g(P, "l"), p = 4 * m + 3;
                               BigInt R = m + 1 - 2 * l;
                               return value((-1 - m) * y + (-m - 1 + 2 * l),
                                            kHalf - fr((3 + m) * R * R + R * (2 + m) * y, p) +
                                                fr(2 * R * y - (1 + m) * y * y, 4 * p));
                           },
                           "(-1-m)y+(-m-1+2l)",
                           "1/2-((3+m)(m+1-2l)^2+(m+1-2l)(2+m)y)/(4m+3)+(2(1+m-2l)y-(1+m)y^2)/(4(4m+3))", false,
                           t_eq(-2), k_is(0), "t = -2-m, k = 0", "K(+1), K_4(-1)", "", "A"}));
    rs.push_back(lens_row({"5",
                           {l_axis("l", 0)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), l = g(P, "l"), p = 4 * m + 3;
                               return value(-m + 2 * l, kHalf - fr((m - 2 * l) * (m - 2 * l), p));
                           },
                           "-m+2l", "1/2-(m-2l)^2/(4m+3)", false, t_eq(-1), k_is(0), "t = -1-m, k = 0", "K(1/4)", "",
                           "A"}));
    auto row67 = [](bool seven) {
        return [seven](const Params& P) {
            BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), k = g(P, "k"), r4 = g(P, "r4"), l = g(P, "l"),
                   s1 = g(P, "s"), s2 = g(P, "s2"), s3 = g(P, "s3"), p = 4 * m + 3;
            BigInt L = -m + 2 * l;
            BigInt inner = (seven ? -s3 : s3) + (2 - t) * pw(1 - t, -k - 2) * (L + r4 * (1 - t + m));
            BigInt e = s1 * (1 + 2 * n) + s2 + (2 - t) * (1 + t) * pw(1 - t, -t - 3) * inner;
            Rational d;
            if (!seven)
                d = kHalf + Rational(k * n * (n + 1) - (1 + 2 * n)) - fr((1 + 2 * n) * (1 + 2 * n) + L * L, p) +
                    fr(2 * L * r4 + r4 * r4 * (m + 1) + s1 * 2 * (1 + 2 * n) * (4 * L + r4), 4 * p);
            else
                d = kHalf + Rational(k * (n + 1) * (n + 2)) -
                    fr(5 - 4 * m - 6 * L + n * (8 - 4 * L - r4) + (1 + 2 * n) * (1 + 2 * n) + L * L, p) -
                    fr(r4 * r4 * (m + 1) + 2 * L * r4 - 2 * r4, 4 * p);
            return value(e, d);
        };
    };
    auto axes67 = [] {
        return std::vector<ParamAxis>{k_neg(-2),       listed("r4", even2()), l_axis("l", 0), t_axis("t <= -3", cst(-3)),
                                      n_axis(-1),      sign_axis("s"),        sign_axis("s2"), sign_axis("s3")};
    };
    rs.push_back(lens_row({"6", axes67(), row67(false),
                           "s(1+2n)+s2+(2-t)(1+t)(1-t)^(-t-3)(s3+(2-t)(1-t)^(-k-2)((-m+2l)+r4(1-t+m)))",
                           "1/2+kn(n+1)-(1+2n)-((1+2n)^2+(-m+2l)^2)/(4m+3)+(2(-m+2l)r4+r4^2(m+1)+2s(1+2n)(4(-m+2l)+r4))/(4(4m+3))",
                           false, t_le(-3), k_le(-2), "t < -2, k <= -2",
                           "K(+1), K_1(-1/(-t-2)), K_{1,1}(-1/(-k-1)), K_{1,1,m}(-1), K_{1,1,m,2}(-1)", "6", "B1"}));
    rs.push_back(lens_row({"7", axes67(), row67(true),
                           "s(1+2n)+s2+(2-t)(1+t)(1-t)^(-t-3)(-s3+(2-t)(1-t)^(-k-2)((-m+2l)+r4(1-t+m)))",
                           "1/2+k(n+1)(n+2)-(5-4m-6(-m+2l)+n(8-4(-m+2l)-r4)+(1+2n)^2+(-m+2l)^2)/(4m+3)-(r4^2(m+1)+2(-m+2l)r4-2r4)/(4(4m+3))",
                           false, t_le(-3), k_le(-2), "t < -2, k <= -2",
                           "K(+1), K_1(-1/(-t-2)), K_{1,1}(-1/(-k-1)), K_{1,1,m}(-1), K_{1,1,m,2}(-1)", "6", "B2"}));
    rs.push_back(lens_row({"8",
                           {k_neg(-2), listed("r1", even2()), listed("r3", even2()), l_axis("l", 0), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), k = g(P, "k"), r1 = g(P, "r1"), r3 = g(P, "r3"), l = g(P, "l"),
                                      s = g(P, "s"), p = 4 * m + 3;
                               BigInt M = m - 2 * l;
                               BigInt e = s - r1 - pw(3, -k - 2) * 5 * (M + (3 + m) * r3);
                               Rational d = kHalf + fr(k * r1 * (r1 - 2 * s), 4) +
                                            fr(2 * M * (s - r1) - M * M - 2 * s * m * r1 + 4 * m + 2, p) +
                                            fr(r1 * r1 * (4 * m - 1) - 2 * r3 * (r1 + M) - r3 * r3 * (1 + m) + 2 * s * (r1 + r3), 4 * p);
                               return value(e, d);
                           },
                           "s-r1-3^(-k-2)5((m-2l)+(3+m)r3)",
                           "1/2+kr1(r1-2s)/4+(2(m-2l)(s-r1)-(m-2l)^2-2s m r1+4m+2)/(4m+3)+(r1^2(4m-1)-2r3(r1+m-2l)-r3^2(1+m)+2s(r1+r3))/(4(4m+3))",
                           false, t_is(-2), k_le(-2), "t = -2, k <= -2", "K(+1), K_2(-1/(-k-1)), K_{2,m}(-1), K_{2,m,2}(-1)",
                           "", "B2"}));
    rs.push_back(lens_row({"9",
                           {listed("r3", even2()), l_axis("l", 1), t_axis("t < -2", cst(-3)), n_axis(-1), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r3 = g(P, "r3"), l = g(P, "l"), t = g(P, "t"), n = g(P, "n"),
                                      s = g(P, "s"), p = 4 * m + 3;
                               BigInt L = -m - 1 + 2 * l;
                               BigInt e = s * (2 + 2 * n) + pw(1 - t, -t - 3) * (2 - t) * (1 + t) * (L + (2 - t + m) * r3);
                               Rational d = kHalf -
                                            fr(n * (n + 1) * (4 * m + 7) + 2 * n * (5 + 4 * m) - s * (n + 1) * (4 * L + r3) + L * L, p) +
                                            fr(2 * L * r3 + r3 * r3 * (m + 1), 4 * p);
                               return value(e, d);
                           },
                           "s(2+2n)+(1-t)^(-t-3)(2-t)(1+t)((-m-1+2l)+(2-t+m)r3)",
                           "1/2-(n(n+1)(4m+7)+2n(5+4m)-s(n+1)(4(-m-1+2l)+r3)+(-m-1+2l)^2)/(4m+3)+(2(-m-1+2l)r3+r3^2(m+1))/(4(4m+3))",
                           false, t_le(-3), k_is(-1), "t < -2, k = -1", "K(+1), K_1(-1/(-t-2)), K_{1,m+1}(-1), K_{1,m+1,2}(-1)",
                           "", "B1"}));
    rs.push_back(lens_row({"10",
                           {listed("r2", even2()), l_axis("l", 2), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r2 = g(P, "r2"), l = g(P, "l"), s = g(P, "s"), p = 4 * m + 3;
                               BigInt L = m + 2 - 2 * l;
                               return value(s * (5 + 2 * m) + (3 + 2 * m) * L + (m - 1) * r2,
                                            kHalf + fr(2 * r2 * (L - s) + r2 * r2 * (1 + m), 4 * p) +
                                                fr(2 + 4 * m + 2 * s * r2 - L * L, p));
                           },
                           "s(5+2m)+(3+2m)(m+2-2l)+(m-1)r2",
                           "1/2+(2r2((m+2-2l)-s)+r2^2(1+m))/(4(4m+3))+(2+4m+2s r2-(m+2-2l)^2)/(4m+3)", false, t_is(-1),
                           k_le(-3), "t = -1, k < -2", "K(+1), K_{m+2}(-1), K_{m+2,2}(-1)", "10", "B2"}));
    rs.push_back(lens_row({"11",
                           {listed("r3", even2()), l_axis("l", 0), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r3 = g(P, "r3"), l = g(P, "l"), s = g(P, "s"), p = 4 * m + 3;
                               BigInt L = -m + 2 * l;
                               return value(BigInt(0), kHalf - fr(-2 * (2 * m + 1) + L * L, p) -
                                                           fr(r3 * r3 * (m + 1) + 2 * L * r3 + 2 * s * (r3 + 4 * L), 4 * p));
                           },
                           "0", "1/2-(-2(2m+1)+(-m+2l)^2)/(4m+3)-(r3^2(m+1)+2(-m+2l)r3+2s(r3+4(-m+2l)))/(4(4m+3))", false,
                           t_is(-1), k_le(-3), "t = -1, k < -2", "K(1/2), K_1(-1/(-k-2)), K_{1,m}(-1), K_{1,m,2}(-1)", "10",
                           "B2"}));
    rs.push_back(lens_row({"12",
                           {listed("r2", even2()), l_axis("l", 1)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r2 = g(P, "r2"), l = g(P, "l"), p = 4 * m + 3;
                               BigInt L = m + 1 - 2 * l;
                               return value(BigInt(0), kHalf + 1 - fr(L * L, p) - fr(r2 * r2 * (1 + m) + 2 * r2 * L, 4 * p));
                           },
                           "0", "1/2+1-(m+1-2l)^2/(4m+3)-(r2^2(1+m)+2r2(m+1-2l))/(4(4m+3))", false, t_is(-1), k_is(-2),
                           "t = -1, k = -2", "K(1/2), K_{m+1}(-1), K_{m+1,2}(-1)", "", "B2"}));
    rs.push_back(lens_row({"13",
                           {listed("r", {1, 3})},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r = g(P, "r"), p = 4 * m + 3;
                               return value(BigInt(0), kHalf - fr(m * m, p) + fr((1 + m) * (9 - r * r), 4 * p));
                           },
                           "0", "1/2-m^2/(4m+3)+(1+m)(9-r^2)/(4(4m+3))", false, t_is(-1), k_is(-1), "t = -1, k = -1",
                           "K(1/(m+2)), K_3(-1)", "", "B2"}));
    rs.push_back(lens_row({"14",
                           {listed("r4", even2()), k_pos(), span("l1", "0 <= l1 <= k-1", cst(0), par("k", -1)),
                            l_axis("l2", -1), t_axis("t <= -2", cst(-2)), n_axis(-2), sign_axis("s"), sign_axis("s2")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r4 = g(P, "r4"), k = g(P, "k"), l1 = g(P, "l1"), l2 = g(P, "l2"),
                                      t = g(P, "t"), n = g(P, "n"), s = g(P, "s"), s2 = g(P, "s2"), p = 4 * m + 3;
                               BigInt L2 = -m + 1 + 2 * l2;
                               BigInt e = s * (2 * n + 1) + s2 +
                                          pw(1 - t, -t - 2) * (2 - t) * (1 + t) * (-k - 1 + 2 * l1 - (t - k) * (L2 - (t - m) * r4));
                               Rational d = kHalf - Rational(1 + n) + Rational(k * (1 + n) * (1 + n)) -
                                            fr(4 * (n + 1) * (n + 1) + s * (n + 1) * (-k + 1 + 2 * l1 + 4 * L2 + r4), p) -
                                            fr((1 + m) * r4 * r4 + 2 * L2 * r4 + 4 * L2 * L2, 4 * p);
                               return value(e, d);
                           },
                           "s(2n+1)+s2+(1-t)^(-t-2)(2-t)(1+t)(-k-1+2l1-(t-k)(-m+1+2l2-(t-m)r4))",
                           "1/2-(1+n)+k(1+n)^2-(4(n+1)^2+s(n+1)(-k+1+2l1+4(-m+1+2l2)+r4))/(4m+3)-((1+m)r4^2+2(-m+1+2l2)r4+4(-m+1+2l2)^2)/(4(4m+3))",
                           false, t_le(-2), k_ge(1), "t <= -2, k > 0",
                           "K(+1), K_1(-1/(-t-1)), K_{1,k-1}(-1), K_{1,k-1,m-1}(-1), K_{1,k-1,m-1,2}(-1)", "", "D"}));
    auto row1516 = [](bool sixteen) {
        return [sixteen](const Params& P) {
            BigInt m = g(P, "m"), r2 = g(P, "r2"), l = g(P, "l"), p = 4 * m + 3;
            BigInt L = -m + 1 + 2 * l;
            if (!sixteen) return value(BigInt(0), kHalf + fr(3 * (m + 1) + l - L * L, p) + fr((1 + m) * (1 - r2 * r2), 4 * p));
            return value(BigInt(0), kHalf + fr(-5 - 8 * m + r2 * (l + 1) + l + L * L, p) + fr((1 + m) * (r2 * r2 - 1), 4 * p));
        };
    };
    rs.push_back(lens_row({"15", {listed("r2", odd3()), l_axis("l", -1)}, row1516(false), "0",
                           "1/2+(3(m+1)+l-(-m+1+2l)^2)/(4m+3)+(1+m)(1-r2^2)/(4(4m+3))", true, t_is(-1), k_le(-3),
                           "t = -1, k < -2", "K(1/2), K_1(-1/(-k-2)), K_{1,3}(-1), K_{1,3,m-1}(-1)", "15", "B2"}));
    rs.push_back(lens_row({"16", {listed("r2", odd3()), l_axis("l", -1)}, row1516(true), "0",
                           "1/2+(-5-8m+r2(l+1)+l+(-m+1+2l)^2)/(4m+3)+(1+m)(r2^2-1)/(4(4m+3))", true, t_is(-1), k_le(-3),
                           "t = -1, k < -2", "K(1/2), K_1(-1/(-k-2)), K_{1,3}(-1), K_{1,3,m-1}(-1)", "15", "C"}));
    rs.push_back(lens_row({"17",
                           {listed("r1", even4()), l_axis("l", -1)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r1 = g(P, "r1"), l = g(P, "l"), p = 4 * m + 3;
                               BigInt L = m - 1 - 2 * l;
                               return value(BigInt(0), kHalf + 1 - fr(L * L, p) - fr(r1 * r1 * (1 + m) + 2 * r1 * L, 4 * p));
                           },
                           "0", "1/2+1-(m-1-2l)^2/(4m+3)-(r1^2(1+m)+2r1(m-1-2l))/(4(4m+3))", true, t_is(-1), k_is(-2),
                           "t = -1, k = -2", "K(1/2), K_4(-1), K_{4,m-1}(-1)", "", "B2"}));
    auto axes1820 = [](bool with_sign) {
        std::vector<ParamAxis> a{listed("r3", odd3()), t_axis("t <= -3", cst(-3)), n_axis(-1), k_neg(-2), l_axis("l", -1)};
        if (with_sign) a.push_back(sign_axis("s"));
        return a;
    };
    // shared tail of the Euler class in rows 18-20
    auto tail1820 = [](const Params& P) {
        BigInt m = g(P, "m"), t = g(P, "t"), k = g(P, "k"), r3 = g(P, "r3"), l = g(P, "l");
        return pw(1 - t, -t - k - 5) * (2 - t) * (2 - t) * (1 + t) * (r3 + (4 - t) * (-m + 1 + 2 * l));
    };
    rs.push_back(lens_row({"18", axes1820(false),
                           [tail1820](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), k = g(P, "k"), r3 = g(P, "r3"),
                                      l = g(P, "l"), p = 4 * m + 3;
                               BigInt e = (m + 1) * ((2 * n + 2) + pw(1 - t, -t - 3) * (1 + t) * (2 - t) + tail1820(P));
                               Rational d = kHalf + Rational(k * n * (n + 1)) -
                                            fr(n * (m + 1) * (n + 1) + n * (6 - r3 + m - 1 - 2 * l), p) +
                                            fr((-m + 1 + 2 * l) * (-m + 1 + 2 * l) + 4 * m * (1 + 2 * n) + (m - l) + 3 -
                                                   r3 * (l - m * (n + 1)),
                                               p) -
                                            fr((m + 1) * (r3 * r3 - 1), 4 * p);
                               return value(e, d);
                           },
                           "(m+1)((2n+2)+(1-t)^(-t-3)(1+t)(2-t)+(1-t)^(-t-k-5)(2-t)^2(1+t)(r3+(4-t)(-m+1+2l)))",
                           "1/2+kn(n+1)-(n(m+1)(n+1)+n(6-r3+m-1-2l))/(4m+3)+((-m+1+2l)^2+4m(1+2n)+(m-l)+3-r3(l-m(n+1)))/(4m+3)-(m+1)(r3^2-1)/(4(4m+3))",
                           true, t_le(-3), k_le(-2), "t < -2, k <= -2",
                           "K(+1), K_1(-1/(-t-2)), K_{1,1}(-1/(-k-1)), K_{1,1,3}(-1), K_{1,1,3,m-1}(-1)", "18", "C"}));
    rs.push_back(lens_row({"19", axes1820(false),
                           [tail1820](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), k = g(P, "k"), r3 = g(P, "r3"),
                                      l = g(P, "l"), p = 4 * m + 3;
                               BigInt e = (m + 1) * (-(2 * n + 2) - pw(1 - t, -t - 3) * (1 + t) * (2 - t) + tail1820(P));
                               Rational d = kHalf + Rational(k * n * (n + 1)) -
                                            fr(n * (m + 1) * (n + 1) + n * (6 + r3 - m + 1 + 2 * l), p) +
                                            fr((-m + 1 + 2 * l) * (-m + 1 + 2 * l) + 4 * m * (1 + 2 * n) + l + 4 + r3 * (l + m * n), p) -
                                            fr((m + 1) * (r3 * r3 - 1), 4 * p);
                               return value(e, d);
                           },
                           "(m+1)(-(2n+2)-(1-t)^(-t-3)(1+t)(2-t)+(1-t)^(-t-k-5)(2-t)^2(1+t)(r3+(4-t)(-m+1+2l)))",
                           "1/2+kn(n+1)-(n(m+1)(n+1)+n(6+r3-m+1+2l))/(4m+3)+((-m+1+2l)^2+4m(1+2n)+l+4+r3(l+mn))/(4m+3)-(m+1)(r3^2-1)/(4(4m+3))",
                           true, t_le(-3), k_le(-2), "t < -2, k <= -2",
                           "K(+1), K_1(-1/(-t-2)), K_{1,1}(-1/(-k-1)), K_{1,1,3}(-1), K_{1,1,3,m-1}(-1)", "18", "C"}));
    rs.push_back(lens_row({"20", axes1820(true),
                           [tail1820](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), k = g(P, "k"), r3 = g(P, "r3"),
                                      l = g(P, "l"), s = g(P, "s"), p = 4 * m + 3;
                               BigInt e = (m + 1) * (s * (2 * n + 2) - s * pw(1 - t, -t - 3) * (1 + t) * (2 - t) + tail1820(P));
                               BigInt M = m - 1 - 2 * l;
                               Rational d = kHalf + Rational(k * (n + 1) * (n + 2)) -
                                            fr((m + 1) * (n * n + 3 * n - r3 * (n + 1)) - 2 * M + M * M, p) -
                                            fr(-2 * m - r3 * (l + 1) + l, p) - fr((m + 1) * (r3 * r3 - 1), 4 * p);
                               return value(e, d);
                           },
                           "(m+1)(s(2n+2)-s(1-t)^(-t-3)(1+t)(2-t)+(1-t)^(-t-k-5)(2-t)^2(1+t)(r3+(4-t)(-m+1+2l)))",
                           "1/2+k(n+1)(n+2)-((m+1)(n^2+3n-r3(n+1))-2(m-1-2l)+(m-1-2l)^2)/(4m+3)-(-2m-r3(l+1)+l)/(4m+3)-(m+1)(r3^2-1)/(4(4m+3))",
                           true, t_le(-3), k_le(-2), "t < -2, k <= -2",
                           "K(+1), K_1(-1/(-t-2)), K_{1,1}(-1/(-k-1)), K_{1,1,3}(-1), K_{1,1,3,m-1}(-1)", "18", "B1"}));
    auto row2122 = [](bool twentytwo) {
        return [twentytwo](const Params& P) {
            BigInt m = g(P, "m"), r1 = g(P, "r1"), r2 = g(P, "r2"), l = g(P, "l"), k = g(P, "k"), p = 4 * m + 3;
            BigInt M = m - 1 - 2 * l, c = pw(3, -k - 2);
            BigInt e = (m + 1) * ((twentytwo ? -1 : 1) - r1 - 5 * c * r2 - c * 30 * M);
            Rational d;
            if (!twentytwo)
                d = kHalf + fr(k * r1 * (r1 - 2), 4) -
                    fr(2 * (1 + m) * r1 * r2 + 2 * r1 * M + (r2 * r2 - 1) * (1 + m) + (3 * m + 2) * (r1 * r1 - 2 * r1), 4 * p) +
                    fr((4 * m + 2) - (r2 + 1) * l + M * M + r1, p);
            else
                d = kHalf + fr(k * r1 * (r1 + 2), 4) -
                    fr(2 * (1 + m) * r1 * r2 + 2 * r1 * M + (r2 * r2 - 1) * (1 + m) + (3 * m + 2) * (r1 * r1 + 2 * r1), 4 * p) +
                    fr(3 * (m + 1) - l - r2 * (m - l) - M * M + r1, p);
            return value(e, d);
        };
    };
    auto axes2122 = [] {
        return std::vector<ParamAxis>{listed("r1", even2()), listed("r2", odd3()), l_axis("l", -1), k_neg(-2)};
    };
    rs.push_back(lens_row({"21", axes2122(), row2122(false), "(m+1)(1-r1-5*3^(-k-2)r2-3^(-k-2)30(m-1-2l))",
                           "1/2+kr1(r1-2)/4-(2(1+m)r1r2+2r1(m-1-2l)+(r2^2-1)(1+m)+(3m+2)(r1^2-2r1))/(4(4m+3))+((4m+2)-(r2+1)l+(m-1-2l)^2+r1)/(4m+3)",
                           true, t_is(-2), k_le(-2), "t = -2, k <= -2", "K(+1), K_2(-1/(-k-1)), K_{2,3}(-1), K_{2,3,m-1}(-1)",
                           "21", "C"}));
    rs.push_back(lens_row({"22", axes2122(), row2122(true), "(m+1)(-1-r1-5*3^(-k-2)r2-3^(-k-2)30(m-1-2l))",
                           "1/2+kr1(r1+2)/4-(2(1+m)r1r2+2r1(m-1-2l)+(r2^2-1)(1+m)+(3m+2)(r1^2+2r1))/(4(4m+3))+(3(m+1)-l-r2(m-l)-(m-1-2l)^2+r1)/(4m+3)",
                           true, t_is(-2), k_le(-2), "t = -2, k <= -2", "K(+1), K_2(-1/(-k-1)), K_{2,3}(-1), K_{2,3,m-1}(-1)",
                           "21", "B2"}));
    rs.push_back(lens_row({"23",
                           {t_axis("t <= -3", cst(-3)), n_axis(-1), listed("r2", even4()), l_axis("l", -1), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), r2 = g(P, "r2"), l = g(P, "l"),
                                      s = g(P, "s"), p = 4 * m + 3;
                               BigInt L = -m + 1 + 2 * l;
                               BigInt e = (m + 1) * (s * (2 * n + 2) + (2 - t) * (1 + t) * pw(1 - t, -t - 3) * ((5 - t) * L + r2));
                               BigInt q = 1 + n + n * n;
                               Rational d = kHalf - Rational(q) - fr((m + 1) * q, p) +
                                            fr(7 * n - s * (1 + n) * (r2 * (m + 1) + L) + r2 * r2 + 9 * m * n, p) -
                                            fr(2 * r2 * L + r2 * r2 * (1 + m), 4 * p);
                               return value(e, d);
                           },
                           "(m+1)(s(2n+2)+(2-t)(1+t)(1-t)^(-t-3)((5-t)(-m+1+2l)+r2))",
                           "1/2-(1+n+n^2)-(m+1)(1+n+n^2)/(4m+3)+(7n-s(1+n)(r2(m+1)+(-m+1+2l))+r2^2+9mn)/(4m+3)-(2r2(-m+1+2l)+r2^2(1+m))/(4(4m+3))",
                           true, t_le(-3), k_is(-1), "t < -2, k = -1", "K(+1), K_1(-1/(-t-2)), K_{1,4}(-1), K_{1,4,m-1}(-1)",
                           "", "B1"}));
    auto row2425 = [](bool twentyfive) {
        return [twentyfive](const Params& P) {
            BigInt m = g(P, "m"), r = g(P, "r"), l = g(P, "l"), p = 4 * m + 3;
            BigInt M = m - 1 - 2 * l;
            BigInt e = (m + 1) * ((twentyfive ? -1 : 1) - r - 27 * (-m + 1 + 2 * l));
            Rational d = twentyfive ? kHalf - fr(r * (l + 1) + (M * M - m + r), p) + fr((1 + m) * (r * r - 1), 4 * p)
                                    : kHalf + fr(r * (m - l) + (M * M - l - r), p) + fr((1 + m) * (r * r - 1), 4 * p);
            return value(e, d);
        };
    };
    Vals odd5{1, -1, 3, -3, 5, -5};
    rs.push_back(lens_row({"24", {listed("r", odd5), l_axis("l", -1)}, row2425(false), "(m+1)(1-r-27(-m+1+2l))",
                           "1/2+(r(m-l)+((m-1-2l)^2-l-r))/(4m+3)+(1+m)(r^2-1)/(4(4m+3))", true, t_is(-2), k_is(-1),
                           "t = -2, k = -1", "K(+1), K_5(-1), K_{5,m-1}(-1)", "24", "C"}));
    rs.push_back(lens_row({"25", {listed("r", odd5), l_axis("l", -1)}, row2425(true), "(m+1)(-1-r-27(-m+1+2l))",
                           "1/2-(r(l+1)+((m-1-2l)^2-m+r))/(4m+3)+(1+m)(r^2-1)/(4(4m+3))", true, t_is(-2), k_is(-1),
                           "t = -2, k = -1", "K(+1), K_5(-1), K_{5,m-1}(-1)", "24", "C"}));
    rs.push_back(lens_row({"26",
                           {l_axis("l", 0)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), l = g(P, "l"), p = 4 * m + 3;
                               return value(BigInt(0), kHalf - fr((-m + 2 * l) * (-m + 2 * l), p));
                           },
                           "0", "1/2-(-m+2l)^2/(4m+3)", true, t_is(-1), k_is(-1), "t = -1, k = -1", "K(1/5), K_m(-1)", "",
                           "B2"}));
    rs.push_back(lens_row({"27",
                           {t_axis("t < -1", cst(-2)), listed("r2", even2()), k_pos(),
                            span("l1", "0 <= l1 <= k-1", cst(0), par("k", -1)), l_axis("l2", -1), n_axis(-2), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), r2 = g(P, "r2"), k = g(P, "k"), l1 = g(P, "l1"),
                                      l2 = g(P, "l2"), n = g(P, "n"), s = g(P, "s"), p = 4 * m + 3;
                               BigInt L1 = -k + 1 + 2 * l1, L2 = -m + 1 + 2 * l2;
                               BigInt e = (m + 1) * (s * (2 * n + 2) +
                                                     (1 + t) * (2 - t) * pw(1 - t, -t - 2) * (L1 - (t + k) * ((3 + t) * L2 + r2)));
                               Rational d = kHalf + Rational(k * (1 + n) * (1 + n) - s * (1 + n) * L1) -
                                            fr(s * (n + 1) * (r2 * (m + 1) + L2), p) - fr(L2 * L2, p) -
                                            fr(2 * r2 * L2 + s * (1 + m) * r2 * r2, 4 * p) - fr((n + 1) * (5 * m + m * n + n + 4), p);
                               return value(e, d);
                           },
                           "(m+1)(s(2n+2)+(1+t)(2-t)(1-t)^(-t-2)((-k+1+2l1)-(t+k)((3+t)(-m+1+2l2)+r2)))",
                           "1/2+k(1+n)^2-s(1+n)(-k+1+2l1)-s(n+1)(r2(m+1)+(-m+1+2l2))/(4m+3)-(-m+1+2l2)^2/(4m+3)-(2r2(-m+1+2l2)+s(1+m)r2^2)/(4(4m+3))-(n+1)(5m+mn+n+4)/(4m+3)",
                           true, t_le(-2), k_ge(1), "t < -1, k > 0",
                           "K(+1), K_1(-1/(-t-1)), K_{1,k-1}(-1), K_{1,k-1,2}(-1), K_{1,k-1,2,m-1}(-1)", "", "D"}));
    rs.push_back(lens_row({"28",
                           {t_axis("t <= -6", cst(-6)), n_axis(-1), l_axis("l", 0), sign_axis("s")},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), t = g(P, "t"), n = g(P, "n"), l = g(P, "l"), s = g(P, "s"), p = 4 * m + 3;
                               BigInt L = -m + 2 * l;
                               BigInt e = (m + 1) * (s * (2 * n + 2) - (t - 2) * (1 + t) * pw(1 - t, -t - 6) * L);
                               Rational d = kHalf + fr(s * L * (1 + n), p) -
                                            fr(L * L - (m + 1) * (n * n + 5 * n + 2) + m * n + 3 * m + 2, p);
                               return value(e, d);
                           },
                           "(m+1)(s(2n+2)-(t-2)(1+t)(1-t)^(-t-6)(-m+2l))",
                           "1/2+s(-m+2l)(1+n)/(4m+3)-((-m+2l)^2-(m+1)(n^2+5n+2)+mn+3m+2)/(4m+3)", true, t_le(-6), k_is(0),
                           "t < -5, k = 0", "K(+1), K_1(-1/(-t-5)), K_{1,m}(-1)", "", "B2"}));
    rs.push_back(lens_row({"29",
                           {listed("r", even4()), l_axis("l", 1)},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r = g(P, "r"), l = g(P, "l"), p = 4 * m + 3;
                               BigInt L = m + 1 - 2 * l;
                               return value((m + 1) * (r - 4 * L), kHalf + 1 - fr(r * r * (1 + m) - 2 * r * L, 4 * p) - fr(L * L, p));
                           },
                           "(m+1)(r-4(m+1-2l))", "1/2+1-(r^2(1+m)-2r(m+1-2l))/(4(4m+3))-(m+1-2l)^2/(4m+3)", true, t_is(-5),
                           k_is(0), "t = -5, k = 0", "K(+1), K_{m+1}(-1)", "", "B1"}));
    rs.push_back(lens_row({"30",
                           {listed("r", {1, 3})},
                           [](const Params& P) {
                               BigInt m = g(P, "m"), r = g(P, "r"), p = 4 * m + 3;
                               return value((m + 1) * r, kHalf + fr((m + 1) * (9 - r * r), 4 * p) - fr(m * m, p));
                           },
                           "(m+1)r", "1/2+(m+1)(9-r^2)/(4(4m+3))-m^2/(4m+3)", true, t_is(-4), k_is(0), "t = -4, k = 0",
                           "K(1/(m+1))", "", "B2"}));
    return rs;
}

}  // namespace

const std::vector<FamilyRecord>& family_records() {
    static const std::vector<FamilyRecord> records = build_records();
    return records;
}

const FamilyRecord& family(const std::string& id) {
    for (const auto& r : family_records())
        if (r.id == id) return r;
    throw DomainError("unknown family '" + id + "'");
}

namespace {

void check_domain(const FamilyRecord& rec, const Params& params) {
    for (const auto& [name, v] : params)
        if (!rec.has_param(name)) throw DomainError(rec.id + ": unknown parameter '" + name + "'");
    Params seen;
    for (const auto& a : rec.axes) {
        auto it = params.find(a.name);
        if (it == params.end()) throw DomainError(rec.id + ": missing parameter '" + a.name + "' (" + a.domain + ")");
        if (!a.admits(it->second, seen))
            throw DomainError(rec.id + ": " + a.name + " = " + std::to_string(it->second) + " outside " + a.domain);
        seen[a.name] = it->second;
    }
}

void grid_rec(const FamilyRecord& rec, std::size_t i, Params& cur, const Params& fixed, const Bounds& b,
              std::vector<Params>& out) {
    if (i == rec.axes.size()) {
        out.push_back(cur);
        return;
    }
    const ParamAxis& a = rec.axes[i];
    auto it = fixed.find(a.name);
    if (it != fixed.end()) {
        if (!a.admits(it->second, cur)) return;
        cur[a.name] = it->second;
        grid_rec(rec, i + 1, cur, fixed, b, out);
        cur.erase(a.name);
        return;
    }
    for (long long v : a.grid(cur, b)) {
        if (!a.admits(v, cur)) continue;
        cur[a.name] = v;
        grid_rec(rec, i + 1, cur, fixed, b, out);
    }
    cur.erase(a.name);
}

}  // namespace

std::vector<Params> family_grid(const FamilyRecord& rec, const Params& fixed, const Bounds& b) {
    std::vector<Params> out;
    Params cur;
    grid_rec(rec, 0, cur, fixed, b, out);
    return out;
}

FamilyValue family_eval_raw(const std::string& id, const Params& params) {
    const FamilyRecord& rec = family(id);
    check_domain(rec, params);
    return rec.eval(params);
}

FamilyValue family_eval(const std::string& id, const Params& params) {
    FamilyValue v = family_eval_raw(id, params);
    if (family(id).manifold == Manifold::Lens && v.e) v.e = mod_floor(*v.e, lens_order(params.at("m")));
    return v;
}

TemplateInstance family_surgery_description(const std::string& id, const Params& params, const Atlas& atlas) {
    const FamilyRecord& rec = family(id);
    if (!rec.points) throw DomainError(id + " has no surgery template");
    long long m = params.count("m") ? params.at("m") : 1;
    if (rec.manifold == Manifold::Lens && m < 1) throw DomainError("m must be positive");
    for (const auto& [name, v] : params)
        if (name != "m" && name != "t" && name != "k") throw DomainError(id + ": templates take m, t and k only");
    Bounds wide;
    wide.t_min = std::min<long long>(-64, params.count("t") ? params.at("t") : 0);
    wide.k_abs = std::max<long long>(64, params.count("k") ? std::llabs(params.at("k")) : 0);
    wide.sigma_tb_min = wide.trefoil_tb_min = wide.lens_tb_min = wide.t_min - 8 * m;
    auto pts = rec.points(m, wide);
    std::optional<TemplatePoint> chosen;
    for (const auto& pt : pts) {
        if (params.count("t") && pt.t != params.at("t")) continue;
        if (params.count("k") && pt.k != params.at("k")) continue;
        if (!chosen || pt.t > chosen->t || (pt.t == chosen->t && std::llabs(pt.k) < std::llabs(chosen->k))) chosen = pt;
    }
    if (!chosen) throw DomainError(id + ": no template diagram at the given parameters");
    TemplateInstance ti;
    ti.knot.name = "K";
    ti.knot.knot_label = chosen->knot;
    ti.knot.tb = chosen->t;
    ti.knot.coeff = chosen->coeff;
    auto rots = atlas.realizations(chosen->knot, chosen->t);
    if (rots.empty()) throw DomainError(chosen->knot + " has no realization at tb " + std::to_string(chosen->t));
    ti.knot.rot = *rots.begin();
    ti.chain = transform(ti.knot);
    ti.meridian_factor = chosen->factor;
    std::ostringstream os;
    os << chosen->knot << " tb=" << chosen->t << " coeff=" << chosen->coeff.pretty();
    if (rec.kind == TemplateKind::UnknotStandard || rec.kind == TemplateKind::UnknotDual) os << " twist k=" << chosen->k;
    os << "; " << rec.template_text;
    ti.description = os.str();
    return ti;
}

namespace {

// Tight, overtwisted, or undecided for a single-knot diagram with assigned signs.
std::optional<bool> chain_tightness(const ExpansionChain& ch, const Atlas& atlas) {
    const LegendrianComponent& k = ch.base;
    if (k.knot_label == "unknot") {
        long long s = -1 - k.tb;
        long long plus = (s + k.rot) / 2, minus = s - plus;
        return unknot_tightness(k.tb, plus, minus, k.coeff, first_chain_stabilization(ch)).tight;
    }
    if (k.coeff.sign() < 0) return true;
    auto above = atlas.realizations(k.knot_label, k.tb + 1);
    if (above.count(k.rot - 1) || above.count(k.rot + 1)) return false;
    return std::nullopt;
}

struct EngineValue {
    Invariant inv;
    std::optional<bool> tight;
    long long rot;
};

std::vector<EngineValue> engine_values(const TemplatePoint& pt, long long m, Manifold mf, const Atlas& atlas) {
    std::vector<EngineValue> out;
    for (long long rot : atlas.realizations(pt.knot, pt.t)) {
        LegendrianComponent k{"K", pt.knot, pt.t, rot, pt.coeff};
        ExpansionChain base = is_reciprocal(pt.coeff) ? replace_reciprocal(k) : transform(k);
        std::vector<ExpansionChain> chains =
            is_reciprocal(pt.coeff) ? std::vector<ExpansionChain>{base} : enumerate_sign_assignments(base);
        for (const auto& ch : chains) {
            std::optional<bool> tight = chain_tightness(ch, atlas);
            ContactSurgeryDiagram d;
            if (is_reciprocal(pt.coeff)) d.add_component(k);
            else d = chain_diagram(ch);
            InvariantReport rep = evaluate_reciprocal(d, true);
            if (!rep.d3) continue;
            BigInt e = 0;
            if (mf == Manifold::Lens) {
                if (!rep.euler_coefficient) throw DomainError("Euler class is not a multiple of the knot meridian");
                e = canonical_lens_class(rep.euler_coefficient->value * pt.factor, m);
            }
            out.push_back({{e, *rep.d3}, tight, rot});
        }
    }
    return out;
}

bool keep(const EngineValue& v, bool tight_family) {
    if (tight_family) return v.tight == std::optional<bool>(true);
    return v.tight != std::optional<bool>(true);
}

Invariant formula_invariant(const FamilyRecord& rec, const Params& p, long long m) {
    FamilyValue v = rec.eval(p);
    BigInt e = 0;
    if (rec.manifold == Manifold::Lens && v.e) e = canonical_lens_class(*v.e, m);
    return {e, v.d3 ? *v.d3 : Rational(0)};
}

}  // namespace

VerifyResult family_verify(const std::string& id, const std::vector<long long>& ms, const Bounds& b, const Atlas& atlas) {
    const FamilyRecord& rec = family(id);
    if (!rec.points) throw DomainError(id + " has no surgery template");
    VerifyResult res;
    res.id = id;
    std::vector<const FamilyRecord*> members;
    for (const auto& r : family_records())
        if (r.group == rec.group) {
            members.push_back(&r);
            res.group.push_back(r.id);
        }
    auto sample = family_grid(rec, {}, b);
    bool ignore_d3 = !sample.empty() && !rec.eval(sample.front()).d3.has_value();
    if (rec.manifold != Manifold::Lens) {
        // homology spheres: each member knot realizes its own formula values
        std::set<Invariant> engine_all, formula_all;
        std::vector<std::pair<Rational, Rational>> spans;
        std::vector<std::set<Invariant>> formulas;
        for (const FamilyRecord* f : members) {
            std::set<Invariant> E;
            for (const auto& pt : f->points(0, b)) {
                ++res.points;
                for (const auto& v : engine_values(pt, 0, f->manifold, atlas))
                    if (keep(v, pt.tight)) E.insert(v.inv);
            }
            std::set<Invariant> C;
            for (const auto& p : family_grid(*f, {}, b)) C.insert(formula_invariant(*f, p, 0));
            if (!E.empty()) {
                auto [lo, hi] = std::minmax_element(E.begin(), E.end(),
                                                    [](const Invariant& x, const Invariant& y) { return x.second < y.second; });
                spans.push_back({lo->second, hi->second});
            } else {
                spans.push_back({Rational(1), Rational(0)});
            }
            engine_all.insert(E.begin(), E.end());
            formula_all.insert(C.begin(), C.end());
            formulas.push_back(std::move(C));
        }
        VerifyMismatch mm;
        for (const auto& v : engine_all)
            if (!formula_all.count(v)) mm.engine_only.push_back(v);
        std::set<Invariant> missing;
        for (std::size_t i = 0; i < formulas.size(); ++i)
            for (const auto& v : formulas[i])
                if (!engine_all.count(v) && v.second >= spans[i].first && v.second <= spans[i].second) missing.insert(v);
        mm.formula_only.assign(missing.begin(), missing.end());
        if (!mm.engine_only.empty() || !mm.formula_only.empty()) res.mismatches.push_back(std::move(mm));
        return res;
    }
    for (long long m : ms) {
        for (const auto& pt : rec.points(m, b)) {
            std::set<Invariant> E, C;
            for (const auto& v : engine_values(pt, m, rec.manifold, atlas))
                if (keep(v, pt.tight)) E.insert(ignore_d3 ? Invariant{v.inv.first, Rational(0)} : v.inv);
            for (const FamilyRecord* f : members) {
                Params fixed{{"m", m}};
                if (f->kind == TemplateKind::UnknotStandard || f->kind == TemplateKind::UnknotDual) {
                    if (f->has_param("t")) fixed["t"] = pt.t;
                    if (f->has_param("k")) fixed["k"] = pt.k;
                }
                for (const auto& p : family_grid(*f, fixed, b)) {
                    if (f->point_filter && !f->point_filter(p, pt)) continue;
                    C.insert(formula_invariant(*f, p, m));
                }
            }
            ++res.points;
            if (E == C) continue;
            VerifyMismatch mm;
            mm.point = {{"m", m}, {"t", pt.t}};
            if (rec.kind != TemplateKind::TorusLens) mm.point["k"] = pt.k;
            std::set_difference(E.begin(), E.end(), C.begin(), C.end(), std::back_inserter(mm.engine_only));
            std::set_difference(C.begin(), C.end(), E.begin(), E.end(), std::back_inserter(mm.formula_only));
            res.mismatches.push_back(std::move(mm));
        }
    }
    return res;
}

std::string flavor_names(unsigned mask) {
    std::vector<std::string> n;
    if (mask & FlavorRational) n.push_back("cs");
    if (mask & FlavorInteger) n.push_back("cs_Z");
    if (mask & FlavorReciprocal) n.push_back("cs_1/Z");
    if (mask & FlavorUnit) n.push_back("cs_pm1");
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + n[i];
    return s;
}

unsigned coefficient_flavors(const Rational& c) {
    unsigned f = FlavorRational;
    if (c.is_integer()) f |= FlavorInteger;
    if (is_reciprocal(c)) f |= FlavorReciprocal;
    if (c == Rational(1) || c == Rational(-1)) f |= FlavorUnit;
    return f;
}

std::vector<Cs1Entry> enumerate_manifold(Manifold mf, long long m, const Bounds& b, const Atlas& atlas) {
    std::vector<TemplatePoint> pts;
    auto add_knot = [&](const std::string& knot, long long lo, long long hi, std::function<Rational(long long)> coeff,
                        long long factor) {
        if (!atlas.contains(knot)) return;
        hi = std::min(hi, atlas.max_tb(knot));
        for (long long t = lo; t <= hi; ++t) {
            Rational c = coeff(t);
            if (!c.is_zero()) pts.push_back({knot, t, 0, c, factor, false});
        }
    };
    if (mf == Manifold::Sigma2311) {
        add_knot("K5a1", b.sigma_tb_min, -8, [](long long t) { return Rational(-1 - t); }, 1);
        add_knot("left-trefoil", b.trefoil_tb_min, -6, [](long long t) { return Rational(-1 - 2 * t, 2); }, 1);
    } else if (mf == Manifold::NegSigma2311) {
        add_knot("-K5a1", b.sigma_tb_min, 1, [](long long t) { return Rational(1 - t); }, 1);
        add_knot("right-trefoil", b.trefoil_tb_min, 1, [](long long t) { return Rational(1 - 2 * t, 2); }, 1);
    } else {
        if (m < 1) throw DomainError("lens enumeration needs m >= 1");
        add_knot(torus_label(static_cast<int>(m)), b.lens_tb_min, -4 * m - 2,
                 [m](long long t) { return Rational(-4 * m - 3 - t); }, 2 * (m + 1));
        for (bool dual : {false, true})
            for (long long t = b.t_min; t <= -1; ++t)
                for (long long k = -b.k_abs; k <= b.k_abs; ++k) {
                    Rational c = unknot_lens_coefficient(m, k, t, dual);
                    if (!c.is_zero()) pts.push_back({"unknot", t, k, c, dual ? m + 1 : 1, false});
                }
    }
    std::vector<Cs1Entry> out;
    std::set<std::tuple<std::string, long long, long long, Rational, BigInt, Rational>> seen;
    for (const auto& pt : pts) {
        for (const auto& v : engine_values(pt, m, mf, atlas)) {
            auto key = std::make_tuple(pt.knot, pt.t, std::llabs(v.rot), pt.coeff, v.inv.first, v.inv.second);
            if (!seen.insert(key).second) continue;
            Cs1Entry e;
            e.manifold = mf;
            e.m = mf == Manifold::Lens ? m : 0;
            e.euler = v.inv.first;
            e.d3 = v.inv.second;
            e.flavors = coefficient_flavors(pt.coeff);
            e.tight = v.tight;
            e.knot = pt.knot;
            e.tb = pt.t;
            e.rot = v.rot;
            e.coeff = pt.coeff;
            out.push_back(std::move(e));
        }
    }
    return out;
}

ClassAndD3 lens_base_structure(long long m, BigInt* standard_euler) {
    if (m < 1) throw DomainError("m must be positive");
    // plumbing of a tb -3 unknot and a tb -m unknot, both with -1
    ContactSurgeryDiagram d;
    long long r1 = 0, r2 = m % 2 == 0 ? 1 : 0;
    d.add_component({"K1", "unknot", -3, r1, Rational(-1)});
    d.add_component({"K2", "unknot", -m, r2, Rational(-1)});
    d.set_link(0, 1, 1);
    InvariantReport rep = evaluate_reciprocal(d);
    if (!rep.d3) throw DomainError("base structure has non-torsion Euler class");
    if (standard_euler) *standard_euler = mod_floor(BigInt((m + 1) * r1 + r2), lens_order(m));
    return {rep.euler, *rep.d3};
}

namespace {

bool obstruction_excludes(const std::string& code, long long m, const BigInt& e, const Rational& d3, const Rational& dm) {
    if (code == "B1") return d3 >= Rational(0);
    if (code == "B2") return d3 > Rational(7);
    if (code == "B3") return (e == 0 || e == 1) && d3 >= Rational(0);
    if (code == "C") return d3 >= Rational(m + 3);
    if (code == "D") {
        Rational diff = d3 - dm;
        return diff.is_integer() && mod_floor(diff.num(), BigInt(2)) == 1;
    }
    return false;
}

// Grid points that contradict the claim behind an obstruction.
std::optional<std::string> obstruction_counterexample(const FamilyRecord& rec, long long m, const Bounds& b, const BigInt& em,
                                                      const Rational& dm) {
    for (const auto& p : family_grid(rec, {{"m", m}}, b)) {
        Invariant v = formula_invariant(rec, p, m);
        bool bad = false;
        const std::string& c = rec.obstruction;
        if (c == "B1") bad = v.second >= Rational(0);
        else if (c == "B2") bad = v.second > Rational(7);
        else if (c == "B3") bad = (v.first == 0 || v.first == 1) && v.second >= Rational(0);
        else if (c == "C") bad = v.second >= Rational(m + 3);
        else if (c == "D") {
            Rational diff = v.second - dm;
            bad = v.first == em && diff.is_integer() && mod_floor(diff.num(), BigInt(2)) == 1;
        }
        if (!bad) continue;
        std::string s;
        for (const auto& [k, x] : p) s += k + "=" + std::to_string(x) + " ";
        return rec.id + " [" + c + "] contradicted at " + s + "(e=" + to_string(v.first) + ", d3=" + v.second.pretty() + ")";
    }
    return std::nullopt;
}

}  // namespace

XiResult xi_Nm(long long m, long long N, const Bounds& b) {
    if (m < 1) throw DomainError("m must be positive");
    XiResult r;
    r.m = m;
    r.N = N;
    BigInt em;
    ClassAndD3 base = lens_base_structure(m, &em);
    ClassAndD3 sum = connected_sum(base, {HomologyClass{}, Rational(N)});
    r.euler = em;
    r.d3 = sum.d3;
    BigInt target_e = canonical_lens_class(em, m);
    bool all_excluded = true;
    for (const auto& rec : family_records()) {
        if (rec.manifold != Manifold::Lens || rec.id.rfind("Table1-", 0) != 0) continue;
        FamilyStatus st;
        st.id = rec.id;
        bool member = false;
        bool finite = std::none_of(rec.axes.begin(), rec.axes.end(), [](const ParamAxis& a) { return a.clipped; });
        for (const auto& p : family_grid(rec, {{"m", m}}, b)) {
            Invariant v = formula_invariant(rec, p, m);
            if (v.first == target_e && v.second == r.d3) {
                member = true;
                for (const auto& [k, x] : p) st.detail += k + "=" + std::to_string(x) + " ";
                break;
            }
        }
        if (member) {
            st.status = "member";
            all_excluded = false;
        } else if (finite) {
            st.status = "exhausted";
        } else if (obstruction_excludes(rec.obstruction, m, target_e, r.d3, base.d3)) {
            st.status = "obstructed";
            st.detail = rec.obstruction;
            if (auto ce = obstruction_counterexample(rec, m, b, target_e, base.d3)) r.findings.push_back(*ce);
        } else {
            st.status = "unresolved";
            all_excluded = false;
        }
        r.families.push_back(std::move(st));
    }
    r.cs_gt_1 = all_excluded;
    return r;
}

namespace {

bool in_family_values(const std::string& id, const Rational& d3, const Bounds& b) {
    const FamilyRecord& rec = family(id);
    for (const auto& p : family_grid(rec, {}, b))
        if (rec.eval(p).d3 == d3) return true;
    return false;
}

bool lens_member(const std::string& id, long long m, const BigInt& e, const Rational& d3, const Bounds& b) {
    const FamilyRecord& rec = family(id);
    BigInt ce = canonical_lens_class(e, m);
    for (const auto& p : family_grid(rec, {{"m", m}}, b)) {
        Invariant v = formula_invariant(rec, p, m);
        if (v.first == ce && (!rec.eval(p).d3 || v.second == d3)) return true;
    }
    return false;
}

}  // namespace

std::vector<FlavorBound> cs_bounds(Manifold mf, long long m, bool tight, std::optional<BigInt> euler, std::optional<Rational> d3,
                                   const Bounds& b) {
    std::vector<FlavorBound> out;
    auto put = [&](const char* f, long long lo, long long hi, std::string src) { out.push_back({f, lo, hi, std::move(src)}); };
    if (mf == Manifold::Sigma2311) {
        if (tight) {
            put("cs", 2, 2, "standard tight structure: no single-knot diagram; two-component rational diagram");
            put("cs_1/Z", 2, 3, "standard tight structure, reciprocal coefficients");
            put("cs_Z", 2, 4, "standard tight structure, integer coefficients");
            put("cs_pm1", 2, 4, "standard tight structure, coefficients +-1");
            return out;
        }
        if (!d3) throw DomainError("overtwisted structures need a d3 value");
        bool z = in_family_values("T1.1-1", *d3, b);
        bool q = z || in_family_values("T1.1-2", *d3, b);
        put("cs", q ? 1 : 2, q ? 1 : 3, q ? "rational single-knot family" : "not in the single-knot families (within bounds)");
        put("cs_Z", z ? 1 : 2, z ? 1 : 3, z ? "integer single-knot family" : "not in the integer family (within bounds)");
        put("cs_1/Z", 2, 3, "overtwisted structures on Sigma(2,3,11): reciprocal coefficients need two knots");
        put("cs_pm1", 2, 3, "overtwisted structures on Sigma(2,3,11): coefficients +-1 need two knots");
        return out;
    }
    if (mf == Manifold::NegSigma2311) {
        if (tight) {
            put("cs", 1, 1, "right trefoil tb 1 with -1/2");
            put("cs_1/Z", 1, 1, "right trefoil tb 1 with -1/2");
            put("cs_Z", 2, 2, "no integer single-knot diagram for the tight structure");
            put("cs_pm1", 2, 2, "no +-1 single-knot diagram for the tight structure");
            return out;
        }
        if (!d3) throw DomainError("overtwisted structures need a d3 value");
        bool z = in_family_values("T1.3-1", *d3, b);
        bool q = z || in_family_values("T1.3-2", *d3, b);
        bool unit = *d3 == Rational(0);
        put("cs", q ? 1 : 2, q ? 1 : 3, q ? "rational single-knot family" : "not in the single-knot families (within bounds)");
        put("cs_Z", z ? 1 : 2, z ? 1 : 3, z ? "integer single-knot family" : "not in the integer family (within bounds)");
        put("cs_1/Z", unit ? 1 : 2, unit ? 1 : 3, unit ? "-K5a1 tb 0 with +1, right trefoil tb 0 with 1/2" : "only d3 = 0 has a reciprocal single-knot diagram");
        put("cs_pm1", unit ? 1 : 2, unit ? 1 : 3, unit ? "-K5a1 tb 0 with +1" : "only d3 = 0 has a +-1 single-knot diagram");
        return out;
    }
    if (m < 1) throw DomainError("m must be positive");
    if (tight) {
        if (!euler) throw DomainError("tight lens structures are identified by their Euler class");
        bool one = lens_member("T1.5", m, *euler, Rational(0), b);
        put("cs", 1, 1, "every tight structure is rational surgery on a Legendrian unknot");
        put("cs_1/Z", 1, 1, "rational unknot surgery, reciprocal after the transformation");
        put("cs_Z", one ? 1 : 2, one ? 1 : 2, one ? "torus knot tb -4m-2 with -1" : "Euler class outside the integer list");
        put("cs_pm1", one ? 1 : 2, one ? 1 : 2, one ? "torus knot tb -4m-2 with -1" : "Euler class outside the integer list");
        return out;
    }
    if (!euler || !d3) throw DomainError("overtwisted lens structures need (e, d3)");
    bool unit = lens_member("T1.7-1", m, *euler, *d3, b);
    bool z = unit || lens_member("T1.7-2", m, *euler, *d3, b);
    bool q = z;
    for (int i = 3; i <= 30 && !q; ++i) q = lens_member("Table1-" + std::to_string(i), m, *euler, *d3, b);
    put("cs", q ? 1 : 2, q ? 1 : 3, q ? "rational single-knot family" : "not found in the rational families (within bounds)");
    put("cs_Z", z ? 1 : 2, z ? 1 : 3, z ? "integer single-knot family" : "not in the integer families");
    put("cs_1/Z", unit ? 1 : 2, 3, unit ? "torus knot tb -4m-4 with +1" : "not in the +-1 family");
    put("cs_pm1", unit ? 1 : 2, 3, unit ? "torus knot tb -4m-4 with +1" : "not in the +-1 family; at most three");
    return out;
}

}  // namespace csurg
