#pragma once

#include "knotdata.hpp"

#include <optional>
#include <vector>

namespace csurg {

struct ChainEntry {
    Rational coeff;           // +-1 or +-1/n
    long long increment = 0;  // new stabilizations on this entry
    long long stab_count = 0; // cumulative
    std::optional<std::vector<int>> signs;  // one per new stabilization
};

struct ExpansionChain {
    LegendrianComponent base;
    std::vector<ChainEntry> entries;
    // number of leading positive unit entries before compression
    long long positive_count = 0;

    long long tb(std::size_t i) const { return base.tb - entries.at(i).stab_count; }
    long long rot(std::size_t i) const;
    bool signs_assigned() const;
    long long total_stabilizations() const;
    std::vector<long long> increments() const;
    std::vector<long long> rot_vector() const;
};

ExpansionChain replace_reciprocal(const LegendrianComponent& k);

// Rewrites K(coeff) as a chain of +-1 and +-1/n entries. With compress = false
// every entry is a unit (+-1).
ExpansionChain transform(const LegendrianComponent& k, std::optional<long long> canonical_k = std::nullopt,
                         bool compress = true);

// Reassembles the coefficient the chain represents.
Rational chain_coefficient(const ExpansionChain& chain);

ContactSurgeryDiagram cancellation_pair(const LegendrianComponent& k, long long n);

std::vector<ExpansionChain> enumerate_sign_assignments(const ExpansionChain& chain);

// Assigns signs from a flat list, entry by entry.
ExpansionChain assign_signs(const ExpansionChain& chain, const std::vector<int>& signs);

ContactSurgeryDiagram chain_to_diagram(const ExpansionChain& chain, const ContactSurgeryDiagram& ambient,
                                       const std::string& replaced);
ContactSurgeryDiagram chain_diagram(const ExpansionChain& chain);

bool is_reciprocal(const Rational& r);

// Every non-reciprocal component is transformed; one diagram per sign
// assignment (deduplicated by rot vectors) unless a flat sign list is given.
struct NormalForm {
    ContactSurgeryDiagram diagram;
    std::vector<int> signs;
};
std::vector<NormalForm> normal_forms(const ContactSurgeryDiagram& d,
                                     const std::optional<std::vector<int>>& signs = std::nullopt);
std::size_t required_sign_count(const ContactSurgeryDiagram& d);

// Replaces every +-1/n component by n unit push-offs.
ContactSurgeryDiagram unit_expansion(const ContactSurgeryDiagram& d);

}  // namespace csurg
