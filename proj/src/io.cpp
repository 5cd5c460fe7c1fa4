#include "ifl/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ifl {

namespace {

struct Line {
    int number;
    std::string text;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (const auto hash = text.find('#'); hash != std::string::npos) {
            text.erase(hash);
        }
        if (text.find_first_not_of(" \t\r") != std::string::npos) {
            out.push_back({number, text});
        }
    }
    return out;
}

int parse_int(const Line& line, const std::string& token) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument(token);
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + token + "'");
    }
}

std::vector<std::string> tokens(const Line& line) {
    std::istringstream ss(line.text);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) {
        out.push_back(t);
    }
    return out;
}

// Parses the MGRAPH block and returns the index of the first line after it.
std::size_t parse_graph_block(const std::vector<Line>& lines, Multigraph& g) {
    if (lines.empty()) {
        throw ParseError(0, "empty graph file");
    }
    const auto head = tokens(lines[0]);
    if (head.size() != 2) {
        throw ParseError(lines[0].number, "expected 'n m'");
    }
    const int n = parse_int(lines[0], head[0]);
    const int m = parse_int(lines[0], head[1]);
    if (n < 0 || m < 0) {
        throw ParseError(lines[0].number, "negative size");
    }
    if (lines.size() < 1 + static_cast<std::size_t>(m)) {
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        const auto t = tokens(lines[i]);
        if (t.size() != 2) {
            throw ParseError(lines[i].number, "expected 'u v'");
        }
        edges.push_back({parse_int(lines[i], t[0]), parse_int(lines[i], t[1])});
    }
    try {
        g = Multigraph(n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(lines[0].number, e.what());
    }
    return 1 + static_cast<std::size_t>(m);
}

// "h.f" or "unbounded" after the given token position.
Placement parse_spot(const Line& line, const std::vector<std::string>& t, std::size_t at) {
    if (t.size() == at + 1 && t[at] == "unbounded") {
        return Placement::unbounded();
    }
    if (t.size() == at + 2 && t[at] == "in") {
        const auto dot = t[at + 1].find('.');
        if (dot == std::string::npos) {
            throw ParseError(line.number, "expected <component>.<face>");
        }
        return Placement::in(parse_int(line, t[at + 1].substr(0, dot)), parse_int(line, t[at + 1].substr(dot + 1)));
    }
    throw ParseError(line.number, "expected 'unbounded' or 'in <component>.<face>'");
}

std::string spot(const Placement& p) {
    if (p.is_unbounded()) {
        return "unbounded";
    }
    return "in " + std::to_string(p.component) + "." + std::to_string(p.face);
}

} // namespace

Multigraph read_mgraph(std::istream& in) {
    const auto lines = content_lines(in);
    Multigraph g;
    const std::size_t used = parse_graph_block(lines, g);
    if (used != lines.size()) {
        throw ParseError(lines[used].number, "trailing content after the edge list");
    }
    return g;
}

void write_mgraph(std::ostream& out, const Multigraph& g) {
    out << "# MGRAPH v1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

PlaneMultigraph read_pmgraph(std::istream& in) {
    const auto lines = content_lines(in);
    Multigraph g;
    std::size_t i = parse_graph_block(lines, g);
    RotationSystem rs;
    rs.order.assign(g.vertex_count(), {});
    std::vector<std::pair<int, int>> outer_lines;
    std::vector<std::pair<int, Placement>> place_lines;
    std::vector<Placement> isolated;
    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto t = tokens(line);
        if (t[0] == "rot") {
            if (t.size() < 2 || t[1].empty() || t[1].back() != ':') {
                throw ParseError(line.number, "expected 'rot v: darts'");
            }
            const int v = parse_int(line, t[1].substr(0, t[1].size() - 1));
            if (v < 0 || v >= g.vertex_count()) {
                throw ParseError(line.number, "vertex out of range");
            }
            for (std::size_t j = 2; j < t.size(); ++j) {
                rs.order[v].push_back(parse_int(line, t[j]));
            }
        } else if (t[0] == "outer" && t.size() == 3) {
            outer_lines.emplace_back(parse_int(line, t[1]), parse_int(line, t[2]));
        } else if (t[0] == "place" && t.size() >= 3) {
            place_lines.emplace_back(parse_int(line, t[1]), parse_spot(line, t, 2));
        } else if (t[0] == "isolated" && t.size() >= 3) {
            const int v = parse_int(line, t[1]);
            if (v < 0 || v >= g.vertex_count()) {
                throw ParseError(line.number, "vertex out of range");
            }
            isolated.resize(g.vertex_count(), Placement::unbounded());
            isolated[v] = parse_spot(line, t, 2);
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    // Components are only known once the rotation is in; count them from the
    // graph the same way the embedding does.
    int P = 0;
    for (const auto& comp : connected_components(g)) {
        P += g.degree(comp.front()) > 0 ? 1 : 0;
    }
    std::vector<int> outer(P, -1);
    for (const auto& [c, f] : outer_lines) {
        if (c < 0 || c >= P) {
            throw ParseError(0, "outer line for unknown component " + std::to_string(c));
        }
        outer[c] = f;
    }
    for (int c = 0; c < P; ++c) {
        if (outer[c] < 0) {
            throw ParseError(0, "component " + std::to_string(c) + " has no outer line");
        }
    }
    std::vector<Placement> placements(P, Placement::unbounded());
    for (const auto& [c, p] : place_lines) {
        if (c < 0 || c >= P) {
            throw ParseError(0, "place line for unknown component " + std::to_string(c));
        }
        placements[c] = p;
    }
    return PlaneMultigraph(std::move(g), std::move(rs), std::move(outer), std::move(placements), std::move(isolated));
}

void write_pmgraph(std::ostream& out, const PlaneMultigraph& pm) {
    const Multigraph& g = pm.graph();
    out << "# PMGRAPH v1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (pm.rotation().order[v].empty()) {
            continue;
        }
        out << "rot " << v << ':';
        for (int d : pm.rotation().order[v]) {
            out << ' ' << d;
        }
        out << '\n';
    }
    for (int c = 0; c < pm.component_count(); ++c) {
        out << "outer " << c << ' ' << pm.outer_face(c) << '\n';
    }
    for (int c = 0; c < pm.component_count(); ++c) {
        out << "place " << c << ' ' << spot(pm.placement(c)) << '\n';
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (pm.component_of(v) < 0) {
            out << "isolated " << v << ' ' << spot(pm.isolated_placement(v)) << '\n';
        }
    }
}

Multigraph read_any_graph(std::istream& in) {
    const auto lines = content_lines(in);
    Multigraph g;
    parse_graph_block(lines, g);
    return g;
}

ForestCertificate read_certificate(std::istream& in) {
    ForestCertificate cert;
    bool have_kind = false;
    bool have_vertices = false;
    for (const Line& line : content_lines(in)) {
        const auto t = tokens(line);
        if (t[0] == "kind" && t.size() == 2) {
            try {
                cert.kind = parse_forest_kind(t[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line.number, e.what());
            }
            have_kind = true;
        } else if (t[0] == "vertices") {
            for (std::size_t j = 1; j < t.size(); ++j) {
                cert.vertices.push_back(parse_int(line, t[j]));
            }
            have_vertices = true;
        } else if (t[0] != "value" && t[0] != "provenance") {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!have_kind || !have_vertices) {
        throw ParseError(0, "certificate needs 'kind' and 'vertices' lines");
    }
    return cert;
}

void write_certificate(std::ostream& out, const ForestCertificate& cert) {
    out << "# CERT v1\nkind " << to_string(cert.kind) << "\nprovenance " << to_string(cert.provenance) << "\nvalue "
        << cert.value() << "\nvertices";
    for (Vertex v : cert.vertices) {
        out << ' ' << v;
    }
    out << '\n';
}

AcyclicColoring read_coloring(std::istream& in, int n) {
    AcyclicColoring col;
    col.colors.assign(n, -1);
    for (const Line& line : content_lines(in)) {
        const auto t = tokens(line);
        if (t[0] == "colors" && t.size() == 2) {
            col.count = parse_int(line, t[1]);
        } else if (t[0] == "color" && t.size() == 3) {
            const int v = parse_int(line, t[1]);
            if (v < 0 || v >= n) {
                throw ParseError(line.number, "vertex out of range");
            }
            col.colors[v] = parse_int(line, t[2]);
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    return col;
}

void write_coloring(std::ostream& out, const AcyclicColoring& col) {
    out << "# COLORING v1\ncolors " << col.count << '\n';
    for (std::size_t v = 0; v < col.colors.size(); ++v) {
        out << "color " << v << ' ' << col.colors[v] << '\n';
    }
}

void write_map(std::ostream& out, const ReductionRecord& rec) {
    out << "# MAP v1\nkind " << to_string(rec.kind) << "\nk " << rec.k << '\n';
    for (std::size_t v = 0; v < rec.vertex_map.size(); ++v) {
        out << "map " << v << ' ' << rec.vertex_map[v] << '\n';
    }
    for (std::size_t i = 0; i < rec.added_vertices.size(); ++i) {
        out << "added " << rec.added_vertices[i] << ' ' << rec.subdivided[i].first << ' ' << rec.subdivided[i].second
            << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

} // namespace ifl
