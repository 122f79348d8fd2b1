#include "calculus.hpp"

#include <map>
#include <numeric>

namespace csurg {

long long ExpansionChain::rot(std::size_t i) const {
    long long r = base.rot;
    for (std::size_t k = 0; k <= i; ++k) {
        const auto& e = entries.at(k);
        if (e.increment == 0) continue;
        if (!e.signs) throw DomainError("rot requested before stabilization signs were assigned");
        for (int s : *e.signs) r += s;
    }
    return r;
}

bool ExpansionChain::signs_assigned() const {
    for (const auto& e : entries)
        if (e.increment > 0 && !e.signs) return false;
    return true;
}

long long ExpansionChain::total_stabilizations() const {
    return entries.empty() ? 0 : entries.back().stab_count;
}

std::vector<long long> ExpansionChain::increments() const {
    std::vector<long long> out;
    for (const auto& e : entries) out.push_back(e.increment);
    return out;
}

std::vector<long long> ExpansionChain::rot_vector() const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < entries.size(); ++i) out.push_back(rot(i));
    return out;
}

bool is_reciprocal(const Rational& r) { return !r.is_zero() && (r.num() == 1 || r.num() == -1); }

namespace {
ChainEntry make_entry(const Rational& c, long long inc, long long cum) {
    ChainEntry e;
    e.coeff = c;
    e.increment = inc;
    e.stab_count = cum;
    if (inc == 0) e.signs = std::vector<int>{};
    return e;
}
}  // namespace

ExpansionChain replace_reciprocal(const LegendrianComponent& k) {
    if (!is_reciprocal(k.coeff)) throw DomainError("replace_reciprocal: coefficient " + k.coeff.pretty() + " is not +-1/n");
    long long n = to_ll(k.coeff.den());
    Rational unit(k.coeff.sign());
    ExpansionChain ch;
    ch.base = k;
    for (long long i = 0; i < n; ++i) ch.entries.push_back(make_entry(unit, 0, 0));
    ch.positive_count = k.coeff.sign() > 0 ? n : 0;
    return ch;
}

ExpansionChain transform(const LegendrianComponent& k, std::optional<long long> canonical_k, bool compress) {
    const Rational& r = k.coeff;
    if (r.is_zero()) throw DomainError("vanishing contact surgery coefficient");
    ExpansionChain ch;
    ch.base = k;
    Rational residual = r;
    long long l = 0;
    if (r.sign() > 0) {
        Rational inv = r.reciprocal();
        BigInt minimal = inv.floor();
        if (inv.is_integer()) minimal = inv.num();
        else minimal += 1;
        // smallest l with 1/r - l <= 0
        BigInt chosen = minimal;
        if (canonical_k) {
            if (BigInt(*canonical_k) < minimal)
                throw DomainError("canonical_k " + std::to_string(*canonical_k) +
                                  " leaves a positive residual; at least " + to_string(minimal) + " is needed");
            chosen = *canonical_k;
        }
        l = to_ll(chosen);
        Rational rest = inv - Rational(chosen);
        if (compress) ch.entries.push_back(make_entry(Rational(BigInt(1), chosen), 0, 0));
        else
            for (long long i = 0; i < l; ++i) ch.entries.push_back(make_entry(Rational(1), 0, 0));
        ch.positive_count = l;
        if (rest.is_zero()) return ch;
        residual = rest.reciprocal();
    }
    long long cum = 0;
    bool prev_negative = false;
    for (const BigInt& x : negcf(residual)) {
        long long inc = to_ll(abs(BigInt(2) + x));
        cum += inc;
        if (compress && inc == 0 && prev_negative) {
            ChainEntry& last = ch.entries.back();
            BigInt n = -last.coeff.reciprocal().num();
            last.coeff = Rational(BigInt(-1), n + 1);
            continue;
        }
        ch.entries.push_back(make_entry(Rational(-1), inc, cum));
        prev_negative = true;
    }
    return ch;
}

Rational chain_coefficient(const ExpansionChain& chain) {
    long long l = 0;
    std::vector<BigInt> cf;
    for (const auto& e : chain.entries) {
        if (e.coeff.sign() > 0) {
            if (!cf.empty()) throw DomainError("chain_coefficient: positive entry after a negative one");
            l += to_ll(e.coeff.den());
            continue;
        }
        BigInt n = e.coeff.den();
        cf.push_back(BigInt(-2) - e.increment);
        for (BigInt i = 1; i < n; ++i) cf.push_back(BigInt(-2));
    }
    if (cf.empty()) {
        if (l == 0) throw DomainError("chain_coefficient: empty chain");
        return Rational(BigInt(1), BigInt(l));
    }
    Rational neg = negcf_value(cf);
    if (l == 0) return neg;
    return (Rational(l) + neg.reciprocal()).reciprocal();
}

ContactSurgeryDiagram cancellation_pair(const LegendrianComponent& k, long long n) {
    if (n < 1) throw DomainError("cancellation_pair: n must be positive");
    ContactSurgeryDiagram d;
    LegendrianComponent a = k, b = k;
    a.coeff = Rational(1, n);
    b.coeff = Rational(-1, n);
    b.name = k.name + "'";
    d.add_component(a);
    d.add_component(b);
    d.set_link(0, 1, k.tb);
    return d;
}

std::vector<ExpansionChain> enumerate_sign_assignments(const ExpansionChain& chain) {
    // only the per-entry sign sums matter for the rot vector
    std::vector<ExpansionChain> out{chain};
    for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        long long inc = chain.entries[i].increment;
        if (inc == 0) continue;
        std::vector<ExpansionChain> next;
        for (const auto& partial : out) {
            for (long long minus = 0; minus <= inc; ++minus) {
                ExpansionChain c = partial;
                std::vector<int> s;
                for (long long j = 0; j < inc - minus; ++j) s.push_back(1);
                for (long long j = 0; j < minus; ++j) s.push_back(-1);
                c.entries[i].signs = s;
                next.push_back(std::move(c));
            }
        }
        out = std::move(next);
    }
    return out;
}

ExpansionChain assign_signs(const ExpansionChain& chain, const std::vector<int>& signs) {
    ExpansionChain c = chain;
    std::size_t pos = 0;
    for (auto& e : c.entries) {
        std::vector<int> s;
        for (long long j = 0; j < e.increment; ++j) {
            if (pos >= signs.size()) throw DomainError("too few stabilization signs");
            int v = signs[pos++];
            if (v != 1 && v != -1) throw DomainError("stabilization signs must be +1 or -1");
            s.push_back(v);
        }
        e.signs = s;
    }
    if (pos != signs.size()) throw DomainError("too many stabilization signs");
    return c;
}

ContactSurgeryDiagram chain_to_diagram(const ExpansionChain& chain, const ContactSurgeryDiagram& ambient,
                                       const std::string& replaced) {
    auto idx = ambient.index_of(replaced);
    if (!idx) throw DomainError("chain_to_diagram: no component named '" + replaced + "'");
    if (!chain.signs_assigned()) throw DomainError("chain_to_diagram: stabilization signs are incomplete");
    std::size_t n = ambient.size(), len = chain.entries.size();
    // new index order: ambient[0..idx), chain entries, ambient(idx..n)
    std::vector<long long> origin;  // ambient index, or -1 - chain position
    for (std::size_t i = 0; i < n; ++i) {
        if (i == *idx) {
            for (std::size_t c = 0; c < len; ++c) origin.push_back(-1 - static_cast<long long>(c));
        } else {
            origin.push_back(static_cast<long long>(i));
        }
    }
    ContactSurgeryDiagram d;
    for (long long o : origin) {
        if (o >= 0) {
            d.add_component(ambient.components[o]);
            continue;
        }
        std::size_t c = static_cast<std::size_t>(-1 - o);
        LegendrianComponent comp = chain.base;
        comp.name = len == 1 ? chain.base.name : chain.base.name + "." + std::to_string(c + 1);
        comp.tb = chain.tb(c);
        comp.rot = chain.rot(c);
        comp.coeff = chain.entries[c].coeff;
        if (chain.entries[c].stab_count > 0) comp.knot_label = chain.base.knot_label;
        d.add_component(comp);
    }
    for (std::size_t a = 0; a < origin.size(); ++a)
        for (std::size_t b = a + 1; b < origin.size(); ++b) {
            long long oa = origin[a], ob = origin[b], v;
            if (oa >= 0 && ob >= 0) v = ambient.linking[oa][ob];
            else if (oa < 0 && ob < 0) v = chain.tb(static_cast<std::size_t>(-1 - oa));  // a precedes b in the chain
            else v = ambient.linking[*idx][oa >= 0 ? oa : ob];
            d.set_link(a, b, v);
        }
    return d;
}

ContactSurgeryDiagram chain_diagram(const ExpansionChain& chain) {
    ContactSurgeryDiagram amb;
    amb.add_component(chain.base);
    return chain_to_diagram(chain, amb, chain.base.name);
}

std::size_t required_sign_count(const ContactSurgeryDiagram& d) {
    std::size_t total = 0;
    for (const auto& c : d.components)
        if (!is_reciprocal(c.coeff)) total += static_cast<std::size_t>(transform(c).total_stabilizations());
    return total;
}

std::vector<NormalForm> normal_forms(const ContactSurgeryDiagram& d, const std::optional<std::vector<int>>& signs) {
    std::vector<NormalForm> out{{d, {}}};
    std::size_t pos = 0;
    for (const auto& c : d.components) {
        if (is_reciprocal(c.coeff)) continue;
        ExpansionChain chain = transform(c);
        std::vector<ExpansionChain> options;
        std::vector<std::vector<int>> used;
        if (signs) {
            auto n = static_cast<std::size_t>(chain.total_stabilizations());
            if (pos + n > signs->size()) throw DomainError("too few stabilization signs");
            std::vector<int> part(signs->begin() + pos, signs->begin() + pos + n);
            pos += n;
            options.push_back(assign_signs(chain, part));
            used.push_back(part);
        } else {
            options = enumerate_sign_assignments(chain);
            for (const auto& o : options) {
                std::vector<int> flat;
                for (const auto& e : o.entries)
                    if (e.signs) flat.insert(flat.end(), e.signs->begin(), e.signs->end());
                used.push_back(flat);
            }
        }
        std::vector<NormalForm> next;
        for (const auto& nf : out)
            for (std::size_t i = 0; i < options.size(); ++i) {
                NormalForm x{chain_to_diagram(options[i], nf.diagram, c.name), nf.signs};
                x.signs.insert(x.signs.end(), used[i].begin(), used[i].end());
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    if (signs && pos != signs->size()) throw DomainError("too many stabilization signs");
    return out;
}

ContactSurgeryDiagram unit_expansion(const ContactSurgeryDiagram& d) {
    ContactSurgeryDiagram cur = d;
    for (const auto& c : d.components) {
        if (!is_reciprocal(c.coeff)) throw DomainError("unit_expansion: " + c.name + " has a non-reciprocal coefficient");
        if (c.coeff.den() == 1) continue;
        cur = chain_to_diagram(replace_reciprocal(c), cur, c.name);
    }
    return cur;
}

}  // namespace csurg
