#pragma once

#include "exactmath.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace csurg {

struct LegendrianComponent {
    std::string name;
    std::string knot_label = "custom";
    long long tb = 0;
    long long rot = 0;
    Rational coeff;
};

struct ContactSurgeryDiagram {
    std::vector<LegendrianComponent> components;
    // symmetric; the diagonal is ignored
    std::vector<std::vector<long long>> linking;

    std::size_t size() const { return components.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    void add_component(const LegendrianComponent& c);
    void set_link(std::size_t i, std::size_t j, long long value);
};

struct ExtraRange {
    long long tb;
    std::set<long long> rots;
};

struct AtlasEntry {
    std::string label;
    std::vector<std::pair<long long, long long>> peaks;  // (tb, rot)
    bool legendrian_simple = true;
    std::vector<ExtraRange> extra_ranges;
    std::string citation;
};

class Atlas {
public:
    // unknot, both trefoils, K5a1, -K5a1 and T(2,-(2m+1)) for m = 1..12
    static Atlas builtin();
    static Atlas from_json_text(const std::string& text);
    static Atlas from_file(const std::string& path);
    std::string to_json_text() const;

    bool contains(const std::string& label) const { return entries_.count(label) != 0; }
    const AtlasEntry& at(const std::string& label) const;
    std::vector<std::string> labels() const;
    void put(AtlasEntry e);

    // admissible rot values at this tb; empty above every peak
    std::set<long long> realizations(const std::string& label, long long tb) const;
    long long max_tb(const std::string& label) const;

private:
    std::map<std::string, AtlasEntry> entries_;
};

std::string torus_label(int m);  // T(2,-(2m+1))

const Atlas& default_atlas();

std::vector<std::string> validate(const ContactSurgeryDiagram& d, const Atlas& atlas = default_atlas());

Rational topological_coefficient(const LegendrianComponent& c);

}  // namespace csurg
