#include "knotdata.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace csurg {

std::optional<std::size_t> ContactSurgeryDiagram::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].name == name) return i;
    return std::nullopt;
}

void ContactSurgeryDiagram::add_component(const LegendrianComponent& c) {
    components.push_back(c);
    for (auto& row : linking) row.push_back(0);
    linking.emplace_back(components.size(), 0);
}

void ContactSurgeryDiagram::set_link(std::size_t i, std::size_t j, long long value) {
    linking.at(i).at(j) = value;
    linking.at(j).at(i) = value;
}

std::string torus_label(int m) { return "T(2,-" + std::to_string(2 * m + 1) + ")"; }

Atlas Atlas::builtin() {
    Atlas a;
    a.put({"unknot", {{-1, 0}}, true, {}, "Eliashberg-Fraser: Legendrian unknots are determined by (tb, rot); max tb -1"});
    a.put({"right-trefoil", {{1, 0}}, true, {}, "Etnyre-Honda, Knots and contact geometry I: torus knots; max tb 1, rot 0"});
    a.put({"left-trefoil", {{-6, 1}, {-6, -1}}, true, {}, "Etnyre-Honda, Knots and contact geometry I: torus knots; max tb -6, rot +-1"});
    a.put({"K5a1", {{-8, 1}, {-8, -1}}, true, {},
           "Etnyre-Ng-Vertesi, Legendrian and transverse twist knots; unique maximal representative tb -8, rot 1"});
    a.put({"-K5a1", {{1, 0}}, false, {},
           "Etnyre-Ng-Vertesi, Legendrian and transverse twist knots; peak at (1,0), lower levels by the stabilization fan"});
    for (int m = 1; m <= 12; ++m) {
        AtlasEntry e;
        e.label = torus_label(m);
        for (long long r = -(2 * m - 1); r <= 2 * m - 1; r += 2) e.peaks.push_back({-4LL * m - 2, r});
        e.legendrian_simple = true;
        e.citation = "Etnyre-Honda, Knots and contact geometry I: negative torus knots; max tb -4m-2, rot in {+-1, ..., +-(2m-1)}";
        a.put(std::move(e));
    }
    return a;
}

void Atlas::put(AtlasEntry e) {
    std::string key = e.label;
    entries_[key] = std::move(e);
}

const AtlasEntry& Atlas::at(const std::string& label) const {
    auto it = entries_.find(label);
    if (it == entries_.end()) throw DomainError("unknown atlas label '" + label + "'");
    return it->second;
}

std::vector<std::string> Atlas::labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

std::set<long long> Atlas::realizations(const std::string& label, long long tb) const {
    const AtlasEntry& e = at(label);
    for (const auto& x : e.extra_ranges)
        if (x.tb == tb) return x.rots;
    std::set<long long> out;
    for (const auto& [ptb, prot] : e.peaks) {
        long long s = ptb - tb;
        if (s < 0) continue;
        for (long long r = prot - s; r <= prot + s; r += 2) out.insert(r);
    }
    return out;
}

long long Atlas::max_tb(const std::string& label) const {
    const AtlasEntry& e = at(label);
    long long best = e.peaks.front().first;
    for (const auto& p : e.peaks) best = std::max(best, p.first);
    return best;
}

Atlas Atlas::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("atlas: ") + ex.what());
    }
    if (!j.contains("entries") || !j["entries"].is_array()) throw DomainError("atlas: missing 'entries' array");
    Atlas a;
    for (const auto& je : j["entries"]) {
        AtlasEntry e;
        e.label = je.at("label").get<std::string>();
        for (const auto& p : je.at("peaks")) e.peaks.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
        if (e.peaks.empty()) throw DomainError("atlas: entry '" + e.label + "' has no peaks");
        e.legendrian_simple = je.value("legendrian_simple", true);
        e.citation = je.value("citation", "");
        if (je.contains("extra_ranges"))
            for (const auto& x : je["extra_ranges"]) {
                ExtraRange r;
                r.tb = x.at("tb").get<long long>();
                for (const auto& v : x.at("rots")) r.rots.insert(v.get<long long>());
                e.extra_ranges.push_back(std::move(r));
            }
        a.put(std::move(e));
    }
    return a;
}

Atlas Atlas::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open atlas file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Atlas::to_json_text() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& [label, e] : entries_) {
        nlohmann::json je;
        je["label"] = e.label;
        je["peaks"] = nlohmann::json::array();
        for (const auto& p : e.peaks) je["peaks"].push_back({p.first, p.second});
        je["legendrian_simple"] = e.legendrian_simple;
        je["citation"] = e.citation;
        if (!e.extra_ranges.empty()) {
            je["extra_ranges"] = nlohmann::json::array();
            for (const auto& x : e.extra_ranges) je["extra_ranges"].push_back({{"tb", x.tb}, {"rots", x.rots}});
        }
        j["entries"].push_back(je);
    }
    return j.dump(2);
}

const Atlas& default_atlas() {
    static const Atlas a = Atlas::builtin();
    return a;
}

std::vector<std::string> validate(const ContactSurgeryDiagram& d, const Atlas& atlas) {
    std::vector<std::string> out;
    std::size_t n = d.components.size();
    if (d.linking.size() != n) out.push_back("linking matrix dimension does not match component count");
    for (std::size_t i = 0; i < d.linking.size(); ++i) {
        if (d.linking[i].size() != n) {
            out.push_back("linking matrix row " + std::to_string(i) + " has wrong length");
            continue;
        }
        for (std::size_t j = 0; j < i && j < d.linking.size(); ++j)
            if (d.linking[j].size() == n && d.linking[i][j] != d.linking[j][i])
                out.push_back("asymmetric linking between " + d.components[i].name + " and " + d.components[j].name);
    }
    std::set<std::string> names;
    for (const auto& c : d.components) {
        if (!names.insert(c.name).second) out.push_back("duplicate component name " + c.name);
        if (c.coeff.is_zero()) out.push_back(c.name + ": vanishing contact surgery coefficient");
        if (c.knot_label != "custom" && atlas.contains(c.knot_label)) {
            auto rots = atlas.realizations(c.knot_label, c.tb);
            if (rots.empty())
                out.push_back(c.name + ": tb above the maximal tb of " + c.knot_label);
            else if (!rots.count(c.rot))
                out.push_back(c.name + ": rot outside mountain range");
        }
    }
    return out;
}

Rational topological_coefficient(const LegendrianComponent& c) { return c.coeff + Rational(c.tb); }

}  // namespace csurg
