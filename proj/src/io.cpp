#include "graphlap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace graphlap {

namespace {

// Strips comments/whitespace; returns false for blank lines.
bool clean_line(std::string line, std::string* out) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return false;
    auto end = line.find_last_not_of(" \t\r");
    *out = line.substr(begin, end - begin + 1);
    return true;
}

double parse_number(const std::string& token, int line_no) {
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected a number, got '" + token + "'");
    }
    if (pos != token.size()) throw ParseError(line_no, "trailing characters in number '" + token + "'");
    return value;
}

VertexId parse_vertex(const std::string& token, int line_no) {
    if (token.empty() || token[0] == '-')
        throw ParseError(line_no, "vertex id must be a non-negative integer, got '" + token + "'");
    try {
        std::size_t pos = 0;
        VertexId v = std::stoull(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "vertex id must be a non-negative integer, got '" + token + "'");
    }
}

}  // namespace

FamilySpec parse_family_config(const std::string& text) {
    FamilySpec spec;
    bool family_seen = false;
    std::istringstream in(text);
    std::string raw, line;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!clean_line(raw, &line)) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected `key = value`");
        std::string key, value;
        if (!clean_line(line.substr(0, eq), &key) || !clean_line(line.substr(eq + 1), &value))
            throw ParseError(line_no, "expected `key = value`");
        if (key == "family") {
            family_seen = true;
            if (value == "half-line-power")
                spec.kind = FamilySpec::Kind::HalfLinePower;
            else if (value == "half-line-log")
                spec.kind = FamilySpec::Kind::HalfLineLog;
            else if (value == "half-line-table")
                spec.kind = FamilySpec::Kind::HalfLineTable;
            else if (value == "finite-file")
                spec.kind = FamilySpec::Kind::FiniteFile;
            else
                throw ParseError(line_no, "unknown family '" + value + "'");
        } else if (key == "path") {
            spec.path = value;
        } else if (key == "alpha" || key == "beta" || key == "epsilon" || key == "start" ||
                   key == "conductance-offset") {
            spec.params[key] = parse_number(value, line_no);
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }
    if (!family_seen) throw ParseError(line_no == 0 ? 1 : line_no, "missing `family` key");
    return spec;
}

std::shared_ptr<const FiniteGraph> parse_edge_list(const std::string& text) {
    auto graph = std::make_shared<FiniteGraph>();
    std::vector<std::tuple<int, VertexId, double>> weight_lines;
    std::istringstream in(text);
    std::string raw, line;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!clean_line(raw, &line)) continue;
        std::istringstream fields(line);
        std::string a, b, c, extra;
        fields >> a >> b >> c;
        if (fields >> extra) throw ParseError(line_no, "too many fields");
        if (c.empty()) throw ParseError(line_no, "expected three fields");
        if (a == "w") {
            // Deferred so weight lines may precede their edge lines.
            weight_lines.emplace_back(line_no, parse_vertex(b, line_no), parse_number(c, line_no));
        } else {
            VertexId u = parse_vertex(a, line_no);
            VertexId v = parse_vertex(b, line_no);
            double cond = parse_number(c, line_no);
            if (!(cond > 0.0)) throw ParseError(line_no, "conductance must be strictly positive");
            if (u == v) throw ParseError(line_no, "self-loop");
            graph->add_edge(u, v, cond);
        }
    }
    for (const auto& [ln, v, w] : weight_lines) {
        if (!graph->contains(v)) throw ParseError(ln, "weight for unknown vertex " + std::to_string(v));
        if (!(w > 0.0)) throw ParseError(ln, "vertex weight must be strictly positive");
        graph->set_omega(v, w);
    }
    graph->freeze();
    return graph;
}

std::shared_ptr<const FiniteGraph> parse_half_line_table(const std::string& text) {
    auto graph = std::make_shared<FiniteGraph>();
    std::istringstream in(text);
    std::string raw, line;
    int line_no = 0;
    bool have_prev = false;
    VertexId prev = 0;
    double prev_c = 0.0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!clean_line(raw, &line)) continue;
        std::istringstream fields(line);
        std::string a, b, c, extra;
        fields >> a >> b >> c;
        if (fields >> extra) throw ParseError(line_no, "too many fields");
        if (c.empty()) throw ParseError(line_no, "expected `n omega c`");
        VertexId n = parse_vertex(a, line_no);
        double omega = parse_number(b, line_no);
        double cond = parse_number(c, line_no);
        if (!(omega > 0.0) || !(cond > 0.0))
            throw ParseError(line_no, "omega and c must be strictly positive");
        if (have_prev) {
            if (n != prev + 1) throw ParseError(line_no, "table indices must be consecutive");
            graph->add_edge(prev, n, prev_c);
        }
        graph->set_omega(n, omega);
        prev = n;
        prev_c = cond;
        have_prev = true;
    }
    if (!have_prev) throw ParseError(1, "empty table");
    graph->freeze();
    return graph;
}

FiniteSupportFn parse_fn(const std::string& text) {
    FiniteSupportFn f;
    std::istringstream in(text);
    std::string raw, line;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!clean_line(raw, &line)) continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (fields >> extra) throw ParseError(line_no, "too many fields");
        if (b.empty()) throw ParseError(line_no, "expected `vertex value`");
        f.set(parse_vertex(a, line_no), parse_number(b, line_no));
    }
    return f;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fn_to_csv(const FiniteSupportFn& f, const std::string& header) {
    std::string out = header + "\n";
    for (const auto& [v, val] : f.values()) out += std::to_string(v) + "," + format_double(val) + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace graphlap
