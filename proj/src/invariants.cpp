#include "invariants.hpp"

#include <sstream>

namespace csurg {

GeneralizedLinkingMatrix build_q(const ContactSurgeryDiagram& d) {
    std::size_t k = d.size();
    GeneralizedLinkingMatrix g;
    g.Q.assign(k, IntVector(k, 0));
    for (const auto& c : d.components) {
        if (!is_reciprocal(c.coeff))
            throw DomainError("build_q: " + c.name + " has coefficient " + c.coeff.pretty() + ", expand it first");
        BigInt n = c.coeff.den();
        int s = c.coeff.sign();
        g.q.push_back(n);
        g.n.push_back(n);
        g.signs.push_back(s);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = d.components[i];
        g.Q[i][i] = BigInt(c.tb) * g.n[i] + g.signs[i];
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) g.Q[i][j] = g.q[j] * d.linking[i][j];
    }
    return g;
}

bool HomologyClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

HomologyClass HomologyClass::nontrivial() const {
    HomologyClass out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] != 1) {
            out.factors.push_back(factors[i]);
            out.coords.push_back(coords[i]);
        }
    return out;
}

IntVector nontrivial_factors(const IntVector& factors) {
    IntVector out;
    for (const auto& f : factors)
        if (f != 1) out.push_back(f);
    return out;
}

H1Presentation h1(const IntMatrix& q_matrix) {
    SnfResult s = snf(q_matrix);
    H1Presentation p;
    p.U = s.U;
    p.factors = s.factors();
    // rows beyond the diagonal (never for square input) are free
    while (p.factors.size() < q_matrix.size()) p.factors.push_back(0);
    return p;
}

H1Presentation h1(const ContactSurgeryDiagram& d) {
    if (d.size() == 0) return {};
    return h1(build_q(unit_expansion(d)).Q);
}

HomologyClass reduce_class(const H1Presentation& p, const IntVector& v) {
    HomologyClass c;
    c.factors = p.factors;
    IntVector u = multiply(p.U, v);
    for (std::size_t i = 0; i < p.factors.size(); ++i) c.coords.push_back(mod_floor(u[i], p.factors[i]));
    return c;
}

HomologyClass euler_via_expansion(const ContactSurgeryDiagram& d) {
    if (d.size() == 0) return {};
    ContactSurgeryDiagram unit = unit_expansion(d);
    H1Presentation p = h1(build_q(unit).Q);
    IntVector r;
    for (const auto& c : unit.components) r.emplace_back(c.rot);
    return reduce_class(p, r);
}

namespace {

// a must be a unit modulo n
BigInt inverse_mod(const BigInt& a, const BigInt& n) {
    BigInt x = mod_floor(a, n), y = n, s0 = 1, s1 = 0;
    while (y != 0) {
        BigInt q = floor_div(x, y);
        BigInt t = x - q * y;
        x = y;
        y = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return s0;
}

// x = a mod m combined with x = b mod n; nullopt if inconsistent
std::optional<Congruence> crt(const Congruence& x, const Congruence& y) {
    BigInt g = big_gcd(x.modulus, y.modulus);
    if (mod_floor(y.value - x.value, g) != 0) return std::nullopt;
    BigInt m = x.modulus / g;
    // x.value + m*g*k = y.value mod y.modulus  ->  m*k = (y-x)/g mod (n/g)
    BigInt n = y.modulus / g;
    BigInt rhs = mod_floor((y.value - x.value) / g, n);
    BigInt k = n == 1 ? BigInt(0) : mod_floor(rhs * inverse_mod(m, n), n);
    BigInt lcm = x.modulus * n;
    return Congruence{mod_floor(x.value + x.modulus * k, lcm), lcm};
}

}  // namespace

std::optional<Congruence> solve_multiple(const H1Presentation& p, const IntVector& a, const IntVector& b) {
    IntVector ua = multiply(p.U, a), ub = multiply(p.U, b);
    Congruence acc{0, 1};
    std::optional<BigInt> fixed;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const BigInt& d = p.factors[i];
        if (d == 1) continue;
        if (d == 0) {
            if (ua[i] == 0) {
                if (ub[i] != 0) return std::nullopt;
                continue;
            }
            if (ub[i] % ua[i] != 0) return std::nullopt;
            BigInt v = ub[i] / ua[i];
            if (fixed && *fixed != v) return std::nullopt;
            fixed = v;
            continue;
        }
        BigInt ai = mod_floor(ua[i], d), bi = mod_floor(ub[i], d);
        BigInt g = big_gcd(ai, d);
        if (g == 0) g = d;
        if (bi % g != 0) return std::nullopt;
        BigInt dm = d / g;
        Congruence c{0, dm};
        if (dm != 1) c.value = mod_floor((bi / g) * inverse_mod(ai / g, dm), dm);
        auto next = crt(acc, c);
        if (!next) return std::nullopt;
        acc = *next;
    }
    if (fixed) {
        if (mod_floor(*fixed - acc.value, acc.modulus) != 0) return std::nullopt;
        return Congruence{*fixed, 0};
    }
    return acc;
}

std::optional<Congruence> euler_coefficient(const ContactSurgeryDiagram& unit_diagram) {
    if (unit_diagram.size() == 0) return std::nullopt;
    H1Presentation p = h1(build_q(unit_diagram).Q);
    IntVector ones(unit_diagram.size(), 1), r;
    for (const auto& c : unit_diagram.components) r.emplace_back(c.rot);
    return solve_multiple(p, ones, r);
}

std::vector<BigInt> meridian_images(long long l, long long m, long long t, const std::vector<long long>& s) {
    if (m < 1 || l < 0 || l > m) throw DomainError("meridian_images: need m >= 1 and 0 <= l <= m");
    if (static_cast<long long>(s.size()) < m) throw DomainError("meridian_images: need one increment per entry");
    if (m == 1) return {BigInt(1)};
    std::vector<int> eps(m);
    for (long long k = 0; k < m; ++k) eps[k] = k < l ? 1 : -1;
    std::vector<BigInt> mu(m);
    BigInt tail = 1;
    mu[0] = -eps[0] * BigInt(t);
    for (long long j = 0; j + 1 < m; ++j) {
        tail -= mu[j];
        if (j + 1 == m - 1) mu[j + 1] = tail;
        else mu[j + 1] = eps[j + 1] * (eps[j] * mu[j] + BigInt(s[j + 1]) * tail);
    }
    return mu;
}

namespace {
BigInt ipow(BigInt b, long long e) {
    if (e < 0) throw DomainError("negative exponent");
    BigInt r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

std::vector<BigInt> meridian_images_displayed(long long l, long long m, long long t, const std::vector<long long>& s) {
    if (m < 1 || l < 0 || l > m) throw DomainError("meridian_images_displayed: need m >= 1 and 0 <= l <= m");
    if (static_cast<long long>(s.size()) < m) throw DomainError("meridian_images_displayed: need one increment per entry");
    BigInt T(t);
    if (m == 1) return {BigInt(1)};
    std::vector<BigInt> out;
    auto S = [&](long long i) { return BigInt(s[i - 1]); };  // 1-based
    if (l == m) {
        for (long long k = 1; k < m; ++k) out.push_back(-T * ipow(1 + T, k - 1));
        out.push_back(ipow(1 + T, m - 1));
        return out;
    }
    if (m == 2) {
        if (l == 1) return {-T, 1 + T};
        return {T, 1 - T};
    }
    BigInt pre = l == 0 ? (1 - T) : ipow(1 + T, l);
    long long first = l + 1;
    if (l == 0) {
        out.push_back(T);
        first = 2;
    } else {
        for (long long k = 1; k <= l; ++k) out.push_back(-T * ipow(1 + T, k - 1));
    }
    BigInt prod = 1;
    for (long long i = first; i < m; ++i) {
        out.push_back((T - S(i)) * prod * pre);
        prod *= 1 - T + S(i);
    }
    out.push_back(prod * pre);
    return out;
}

EulerCoefficient euler_closed_form(long long t, long long r, const std::vector<long long>& rots, long long l,
                                   const std::vector<long long>& s) {
    long long m = static_cast<long long>(rots.size());
    if (m < 1 || l < 0 || l > m || static_cast<long long>(s.size()) < m)
        throw DomainError("euler_closed_form: inconsistent parameters");
    BigInt T(t), Rr(r);
    auto R = [&](long long i) { return BigInt(rots[i - 1]); };
    auto S = [&](long long i) { return BigInt(s[i - 1]); };
    EulerCoefficient out;
    if (m == 1) {
        out.e_k = Rr;
        return out;
    }
    if (m == 2) {
        int sg = l >= 1 ? 1 : -1;
        out.e_k = -sg * T * (R(1) - R(2)) + R(2);
        out.formula_case = 1;
        return out;
    }
    bool tail_unstabilized = true;
    for (long long i = 2; i <= m; ++i)
        if (s[i - 1] != 0) tail_unstabilized = false;
    if (l == m || (l == 0 && tail_unstabilized)) {
        out.e_k = Rr;
        out.formula_case = 2;
        return out;
    }
    long long lo = l == 0 ? 2 : l + 1;
    BigInt bracket = R(m);
    for (long long k = lo; k < m; ++k) bracket *= 1 - T + S(k);
    bracket += R(lo) * (T - S(2));
    for (long long i = lo + 1; i < m; ++i) {
        BigInt term = R(i) * (T - S(i));
        for (long long k = lo; k < i; ++k) term *= 1 - T + S(k);
        bracket += term;
    }
    if (l == 0) {
        out.e_k = Rr * T + (1 - T) * bracket;
        out.formula_case = 3;
    } else {
        out.e_k = Rr + ipow(1 + T, l) * (-Rr + bracket);
        out.formula_case = 4;
    }
    return out;
}

std::string format_vector(const std::vector<BigInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

std::string format_vector(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

InvariantReport evaluate_reciprocal(const ContactSurgeryDiagram& d, bool single_knot) {
    InvariantReport rep;
    for (const auto& c : d.components) rep.rots.push_back(c.rot);
    if (d.size() == 0) {
        rep.euler_torsion = true;
        rep.d3 = Rational(0);
        return rep;
    }
    ContactSurgeryDiagram unit = unit_expansion(d);
    H1Presentation p = h1(build_q(unit).Q);
    IntVector r;
    for (const auto& c : unit.components) r.emplace_back(c.rot);
    rep.h1_factors = nontrivial_factors(p.factors);
    rep.euler = reduce_class(p, r).nontrivial();
    if (single_knot) rep.euler_coefficient = solve_multiple(p, IntVector(unit.size(), 1), r);

    GeneralizedLinkingMatrix g = build_q(d);
    IntVector rv;
    for (const auto& c : d.components) rv.emplace_back(c.rot);
    auto b = solve_rational(g.Q, rv);
    rep.euler_torsion = b.has_value();
    rep.inertia = signature_generalized(g.Q, g.q);
    if (b) {
        Rational sum(0);
        for (std::size_t i = 0; i < d.size(); ++i)
            sum += Rational(g.n[i]) * (*b)[i] * Rational(rv[i]) + Rational((3 - g.n[i]) * g.signs[i]);
        rep.d3 = sum / Rational(4) - Rational(3, 4) * Rational(rep.inertia.signature());
    }
    return rep;
}

namespace {
std::string describe_chain(const ExpansionChain& ch) {
    std::ostringstream os;
    os << ch.base.name << "(" << ch.base.coeff.pretty() << ") =";
    for (std::size_t i = 0; i < ch.entries.size(); ++i) {
        const auto& e = ch.entries[i];
        os << (i ? " + " : " ") << "[" << e.coeff.pretty() << " stab=" << e.stab_count << " tb=" << ch.tb(i);
        if (ch.signs_assigned()) os << " rot=" << ch.rot(i);
        os << "]";
    }
    if (ch.base.coeff.sign() < 0 || !is_reciprocal(ch.base.coeff)) {
        Rational res = ch.base.coeff;
        if (res.sign() > 0) {
            Rational rest = res.reciprocal() - Rational(ch.positive_count);
            if (!rest.is_zero()) res = rest.reciprocal();
        }
        if (res.sign() < 0) os << " negcf" << format_vector(negcf_display(res));
    }
    return os.str();
}
}  // namespace

std::vector<InvariantReport> compute_invariants(const ContactSurgeryDiagram& d,
                                                const std::optional<std::vector<int>>& signs) {
    std::string trace;
    for (const auto& c : d.components)
        if (!is_reciprocal(c.coeff)) trace += describe_chain(transform(c)) + "\n";
    std::vector<InvariantReport> out;
    for (const auto& nf : normal_forms(d, signs)) {
        InvariantReport rep = evaluate_reciprocal(nf.diagram, d.size() == 1);
        rep.signs = nf.signs;
        rep.expansion_trace = trace;
        out.push_back(std::move(rep));
    }
    return out;
}

ClassAndD3 connected_sum(const ClassAndD3& a, const ClassAndD3& b) {
    ClassAndD3 out;
    out.euler = a.euler;
    for (std::size_t i = 0; i < b.euler.factors.size(); ++i) {
        if (b.euler.factors[i] == 1) continue;
        out.euler.factors.push_back(b.euler.factors[i]);
        out.euler.coords.push_back(b.euler.coords[i]);
    }
    out.d3 = a.d3 + b.d3;
    return out;
}

Rational meridian_rational_tb(const BigInt& p, const BigInt& q, long long t) {
    if (q <= 0) throw DomainError("meridian_rational_tb: q must be positive");
    BigInt denom = p + q * t;
    if (denom == 0) throw DomainError("meridian_rational_tb: p + q t = 0 (degenerate framing)");
    return Rational(-1) - Rational(q, denom);
}

}  // namespace csurg
