#pragma once

#include "knotdata.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace csurg {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line;
    std::size_t column;
};

struct InvalidDiagram : std::runtime_error {
    explicit InvalidDiagram(std::vector<std::string> problems);
    std::vector<std::string> problems;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedDiagram {
    ContactSurgeryDiagram diagram;
    std::vector<std::string> warnings;
};

// Line grammar, '#' starts a comment:
//   component <name> [knot=<label>] tb=<int> rot=<int> (coeff=<p>/<q> | topo=<p>/<q>)
//   link <name> <name> <int>
ParsedDiagram parse_diagram(const std::string& text, const Atlas& atlas = default_atlas());
std::string serialize_diagram(const ContactSurgeryDiagram& d);

std::string read_file(const std::string& path);

}  // namespace csurg
