#include "ifl/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ifl {

std::string to_string(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::Dedup:
        return "dedup";
    case ReductionKind::Double:
        return "double";
    case ReductionKind::Subdivide:
        return "subdivide";
    case ReductionKind::Normalize:
        return "normalize";
    }
    return "?";
}

ReductionKind parse_reduction_kind(const std::string& text) {
    if (text == "dedup") {
        return ReductionKind::Dedup;
    }
    if (text == "double") {
        return ReductionKind::Double;
    }
    if (text == "subdivide") {
        return ReductionKind::Subdivide;
    }
    if (text == "normalize") {
        return ReductionKind::Normalize;
    }
    throw std::invalid_argument("unknown reduction kind '" + text + "'");
}

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 0);
    return map;
}

void require_valid(const Multigraph& g, const ForestCertificate& f, const char* where) {
    if (!certificate_valid(g, f)) {
        throw GraphError(std::string(where) + ": certificate is not a valid " + to_string(f.kind) + " of its graph");
    }
}

} // namespace

ReductionRecord dedup(const Multigraph& m) {
    ReductionRecord rec;
    rec.input = m;
    rec.kind = ReductionKind::Dedup;
    rec.k = parallel_pairs(m).k();
    rec.vertex_map = identity_map(m.vertex_count());
    std::vector<Edge> edges;
    std::map<std::pair<Vertex, Vertex>, bool> seen;
    for (const Edge& e : m.edges()) {
        if (!seen.emplace(std::make_pair(e.lo(), e.hi()), true).second) {
            continue;
        }
        edges.push_back(e);
    }
    rec.output = Multigraph(m.vertex_count(), std::move(edges));
    return rec;
}

ReductionRecord double_edges(const Multigraph& g) {
    if (!is_simple(g)) {
        throw GraphError("double needs a simple graph");
    }
    ReductionRecord rec;
    rec.input = g;
    rec.kind = ReductionKind::Double;
    rec.vertex_map = identity_map(g.vertex_count());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        edges.push_back(e);
    }
    rec.output = Multigraph(g.vertex_count(), std::move(edges));
    // k of the doubled graph: every edge became a parallel pair.
    rec.k = g.edge_count();
    return rec;
}

ReductionRecord subdivide_parallel(const Multigraph& m) {
    ReductionRecord rec;
    rec.input = m;
    rec.kind = ReductionKind::Subdivide;
    rec.vertex_map = identity_map(m.vertex_count());
    const auto pairs = parallel_pairs(m).pairs;
    rec.k = static_cast<int>(pairs.size());

    // For each pair: the edge to subdivide and the edge to keep; the rest go.
    std::map<std::pair<Vertex, Vertex>, int> pair_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pair_index[{pairs[i].u, pairs[i].v}] = static_cast<int>(i);
        rec.added_vertices.push_back(m.vertex_count() + static_cast<int>(i));
        rec.subdivided.emplace_back(pairs[i].u, pairs[i].v);
    }
    std::vector<int> used(pairs.size(), 0);
    std::vector<Edge> edges;
    for (const Edge& e : m.edges()) {
        const auto it = pair_index.find({e.lo(), e.hi()});
        if (it == pair_index.end()) {
            edges.push_back(e);
            continue;
        }
        const int i = it->second;
        const Vertex w = rec.added_vertices[i];
        if (used[i] == 0) {
            edges.push_back({e.lo(), w});
            edges.push_back({w, e.hi()});
        } else if (used[i] == 1) {
            edges.push_back(e);
        }
        ++used[i];
    }
    rec.output = Multigraph(m.vertex_count() + rec.k, std::move(edges));
    return rec;
}

ForestCertificate lift_forest_subdivision(const ReductionRecord& rec, const ForestCertificate& f) {
    if (rec.kind != ReductionKind::Subdivide) {
        throw std::invalid_argument("lift_forest_subdivision needs a subdivide record");
    }
    require_valid(rec.input, f, "lift_forest_subdivision");
    ForestCertificate out{f.vertices, f.kind, Provenance::Constructed};
    for (Vertex& v : out.vertices) {
        v = rec.vertex_map[v];
    }
    out.vertices.insert(out.vertices.end(), rec.added_vertices.begin(), rec.added_vertices.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

ForestCertificate project_forest_subdivision(const ReductionRecord& rec, const ForestCertificate& f) {
    if (rec.kind != ReductionKind::Subdivide) {
        throw std::invalid_argument("project_forest_subdivision needs a subdivide record");
    }
    require_valid(rec.output, f, "project_forest_subdivision");
    const int n = rec.input.vertex_count();
    std::vector<char> in(n, 0);
    for (Vertex v : f.vertices) {
        if (v < n) {
            in[v] = 1;
        }
    }
    for (const auto& [u, v] : rec.subdivided) {
        if (in[u] && in[v]) {
            in[v] = 0;
        }
    }
    ForestCertificate out{{}, f.kind, Provenance::Constructed};
    for (Vertex v = 0; v < n; ++v) {
        if (in[v]) {
            out.vertices.push_back(v);
        }
    }
    return out;
}

ForestCertificate repair_forest_by_removal(const Multigraph& m, const ForestCertificate& f) {
    require_valid(dedup(m).output, f, "repair_forest_by_removal");
    std::vector<char> in(m.vertex_count(), 0);
    for (Vertex v : f.vertices) {
        in[v] = 1;
    }
    for (const ParallelPair& p : parallel_pairs(m).pairs) {
        if (in[p.u] && in[p.v]) {
            in[p.v] = 0;
        }
    }
    ForestCertificate out{{}, f.kind, Provenance::Constructed};
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        if (in[v]) {
            out.vertices.push_back(v);
        }
    }
    return out;
}

ColoringExtraction extract_forest_from_coloring(const Multigraph& m, const AcyclicColoring& col) {
    if (col.count < 2) {
        throw std::invalid_argument("colour pair extraction needs at least 2 colours");
    }
    if (!verify_acyclic_coloring(dedup(m).output, col)) {
        throw GraphError("colouring is not an acyclic colouring of the deduplicated graph");
    }
    const int c = col.count;
    std::vector<int> size(c, 0);
    for (int x : col.colors) {
        ++size[x];
    }
    ColoringExtraction out;
    out.k_pairs.assign(c, std::vector<int>(c, 0));
    const auto pairs = parallel_pairs(m).pairs;
    for (const ParallelPair& p : pairs) {
        const int a = col.colors[p.u];
        const int b = col.colors[p.v];
        ++out.k_pairs[a][b];
        ++out.k_pairs[b][a];
    }
    int best = -1;
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            const int value = size[i] + size[j] - out.k_pairs[i][j];
            if (value > best) {
                best = value;
                out.chosen = {i, j, size[i], size[j], out.k_pairs[i][j]};
            }
        }
    }
    const int i = out.chosen.i;
    const int j = out.chosen.j;
    std::vector<char> in(m.vertex_count(), 0);
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        in[v] = col.colors[v] == i || col.colors[v] == j;
    }
    for (const ParallelPair& p : pairs) {
        if (in[p.u] && in[p.v]) {
            in[p.v] = 0;
        }
    }
    out.forest.kind = ForestKind::Forest;
    out.forest.provenance = Provenance::Constructed;
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        if (in[v]) {
            out.forest.vertices.push_back(v);
        }
    }
    return out;
}

namespace {

// Fan of the edges u-v in rotation order at u, rotated so that the region
// holding the unbounded face lies between the last and the first dart.
std::vector<int> oriented_fan(const PlaneMultigraph& pm, Vertex u, Vertex v) {
    const Multigraph& g = pm.graph();
    const std::vector<int>& rot = pm.rotation().order[u];
    std::vector<int> fan;
    std::vector<int> position;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (dart_head(g, rot[i]) == v) {
            fan.push_back(rot[i]);
            position.push_back(static_cast<int>(i));
        }
    }
    const int b = static_cast<int>(fan.size());
    int outer = -1;
    for (int i = 0; i < b; ++i) {
        const int after = rot[(position[i] + 1) % rot.size()];
        const int blocked[] = {dart_edge(fan[i]), dart_edge(fan[(i + 1) % b])};
        if (dual_reachable(pm, pm.face_of_dart(after), blocked)[0]) {
            if (outer >= 0) {
                throw std::logic_error("two fan regions reach the unbounded face");
            }
            outer = i;
        }
    }
    if (outer < 0) {
        throw std::logic_error("no fan region reaches the unbounded face");
    }
    std::rotate(fan.begin(), fan.begin() + (outer + 1) % b, fan.end());
    return fan;
}

} // namespace

PlaneMultigraph normalize_multiplicity(const PlaneMultigraph& pm) {
    if (!two_faces(pm).empty()) {
        throw PreconditionError(PreconditionError::Reason::HasTwoFace, "normalize_multiplicity needs no 2-faces");
    }
    PlaneMultigraph cur = pm;
    for (;;) {
        const auto pairs = parallel_pairs(cur.graph()).pairs;
        const auto heavy =
            std::find_if(pairs.begin(), pairs.end(), [](const ParallelPair& p) { return p.multiplicity >= 3; });
        if (heavy == pairs.end()) {
            break;
        }
        const std::vector<int> fan = oriented_fan(cur, heavy->u, heavy->v);
        cur = remove_edge(cur, dart_edge(fan[1]));
        if (!two_faces(cur).empty()) {
            throw std::logic_error("normalize_multiplicity produced a 2-face");
        }
    }
    return cur;
}

std::vector<SimpleBound> standard_simple_bounds() {
    return {
        {"n/4", [](int n) { return Rational(n, 4); }, false},
        {"2n/5", [](int n) { return Rational(2 * n, 5); }, false},
        {"n/2", [](int n) { return Rational(n, 2); }, true},
    };
}

Rational transfer_bound(const SimpleBound& bound, int n, int k) {
    return bound.f(n + k) - k;
}

} // namespace ifl
