#include "diagram_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace csurg {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {
std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
    return s;
}

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long parse_ll(const Token& t, const std::string& value, std::size_t line, std::size_t col) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used == value.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(line, col, "expected an integer in '" + t.text + "'");
}
}  // namespace

InvalidDiagram::InvalidDiagram(std::vector<std::string> p) : std::runtime_error(join(p)), problems(std::move(p)) {}

ParsedDiagram parse_diagram(const std::string& text, const Atlas& atlas) {
    ParsedDiagram out;
    ContactSurgeryDiagram& d = out.diagram;
    struct PendingLink {
        Token a, b;
        long long value;
        std::size_t line;
    };
    std::vector<PendingLink> links;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (kw == "component") {
            if (toks.size() < 2) throw ParseError(lineno, toks[0].column + kw.size(), "component needs a name");
            LegendrianComponent c;
            c.name = toks[1].text;
            if (c.name.find('=') != std::string::npos) throw ParseError(lineno, toks[1].column, "component needs a name");
            if (d.index_of(c.name)) throw ParseError(lineno, toks[1].column, "duplicate component name " + c.name);
            std::map<std::string, Token> kv;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto eq = toks[i].text.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError(lineno, toks[i].column, "expected key=value, got '" + toks[i].text + "'");
                std::string key = toks[i].text.substr(0, eq);
                if (key != "knot" && key != "tb" && key != "rot" && key != "coeff" && key != "topo")
                    throw ParseError(lineno, toks[i].column, "unknown key '" + key + "'");
                if (kv.count(key)) throw ParseError(lineno, toks[i].column, "repeated key '" + key + "'");
                kv.emplace(key, toks[i]);
            }
            auto value_of = [](const Token& t) { return t.text.substr(t.text.find('=') + 1); };
            std::size_t endcol = toks.back().column + toks.back().text.size();
            for (const char* key : {"tb", "rot"})
                if (!kv.count(key)) throw ParseError(lineno, endcol, std::string("missing ") + key + "=<int>");
            if (kv.count("coeff") == kv.count("topo"))
                throw ParseError(lineno, endcol, "exactly one of coeff=<p>/<q> or topo=<p>/<q> is required");
            const Token& tbt = kv.at("tb");
            const Token& rott = kv.at("rot");
            c.tb = parse_ll(tbt, value_of(tbt), lineno, tbt.column + 3);
            c.rot = parse_ll(rott, value_of(rott), lineno, rott.column + 4);
            const Token& ct = kv.count("coeff") ? kv.at("coeff") : kv.at("topo");
            try {
                c.coeff = Rational::parse(value_of(ct));
            } catch (const DomainError& e) {
                throw ParseError(lineno, ct.column + ct.text.find('=') + 1, e.what());
            }
            if (kv.count("topo")) c.coeff = c.coeff - Rational(c.tb);
            if (kv.count("knot")) {
                std::string label = value_of(kv.at("knot"));
                if (label == "custom" || atlas.contains(label)) {
                    c.knot_label = label;
                } else {
                    out.warnings.push_back("line " + std::to_string(lineno) + ": unknown knot '" + label +
                                           "' treated as custom");
                    c.knot_label = "custom";
                }
            }
            d.add_component(c);
        } else if (kw == "link") {
            if (toks.size() != 4) throw ParseError(lineno, toks[0].column, "expected: link <name> <name> <int>");
            links.push_back({toks[1], toks[2], parse_ll(toks[3], toks[3].text, lineno, toks[3].column), lineno});
        } else {
            throw ParseError(lineno, toks[0].column, "expected 'component' or 'link', got '" + kw + "'");
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, long long> given;
    std::vector<std::string> problems;
    for (const auto& l : links) {
        auto a = d.index_of(l.a.text), b = d.index_of(l.b.text);
        if (!a) throw ParseError(l.line, l.a.column, "unknown component '" + l.a.text + "'");
        if (!b) throw ParseError(l.line, l.b.column, "unknown component '" + l.b.text + "'");
        if (*a == *b) throw ParseError(l.line, l.b.column, "a component cannot link itself");
        auto key = std::minmax(*a, *b);
        auto it = given.find(key);
        if (it != given.end() && it->second != l.value)
            problems.push_back("asymmetric linking between " + l.a.text + " and " + l.b.text);
        given[key] = l.value;
        d.set_link(*a, *b, l.value);
    }
    auto v = validate(d, atlas);
    problems.insert(problems.end(), v.begin(), v.end());
    if (!problems.empty()) throw InvalidDiagram(problems);
    return out;
}

std::string serialize_diagram(const ContactSurgeryDiagram& d) {
    std::ostringstream os;
    for (const auto& c : d.components) {
        os << "component " << c.name;
        if (c.knot_label != "custom") os << " knot=" << c.knot_label;
        os << " tb=" << c.tb << " rot=" << c.rot << " coeff=" << c.coeff.str() << "\n";
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.linking[i][j] != 0)
                os << "link " << d.components[i].name << " " << d.components[j].name << " " << d.linking[i][j] << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace csurg
