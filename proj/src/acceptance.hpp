#pragma once

#include "classify.hpp"

#include <set>
#include <string>
#include <vector>

namespace csurg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

constexpr int kCriterionCount = 12;

// Runs the selected criteria (all when empty) in id order.
std::vector<CriterionResult> run_acceptance(const Bounds& b, const Atlas& atlas = default_atlas(),
                                            const std::set<int>& only = {});

// "1,3,5-7" -> {1,3,5,6,7}
std::set<int> parse_criteria(const std::string& text);

}  // namespace csurg
