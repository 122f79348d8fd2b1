// One PASS/FAIL line per acceptance criterion, details indented below it.
#include "acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    csurg::Bounds bounds;
    std::set<int> only;
    std::optional<csurg::Atlas> atlas;
    try {
        for (int i = 1; i < argc; ++i) {
            std::string a = argv[i];
            if (i + 1 >= argc) throw csurg::DomainError("missing value for " + a);
            if (a == "--criteria") only = csurg::parse_criteria(argv[++i]);
            else if (a == "--bounds") bounds.apply(argv[++i]);
            else if (a == "--atlas") atlas = csurg::Atlas::from_file(argv[++i]);
            else throw csurg::DomainError("unknown argument " + a);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage: acceptance_suite [--criteria 1,3-5] [--bounds m=2] [--atlas file]\n" << e.what() << "\n";
        return 2;
    }
    auto results = csurg::run_acceptance(bounds, atlas ? *atlas : csurg::default_atlas(), only);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << "\n";
        for (const auto& d : r.details) std::cout << "      " << d << "\n";
        failed += !r.pass;
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
