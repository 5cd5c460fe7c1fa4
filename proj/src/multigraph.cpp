#include "ifl/multigraph.hpp"

#include "ifl/union_find.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace ifl {

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), incident_(n < 0 ? 0 : n) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) {
            throw GraphError("edge " + std::to_string(e) + " has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (ed.u == ed.v) {
            throw GraphError("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(ed.u));
        }
        incident_[ed.u].push_back(e);
        incident_[ed.v].push_back(e);
    }
}

std::vector<Vertex> Multigraph::neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (int e : incident(v)) {
        out.push_back(edges_[e].other(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    int count = 0;
    for (int e : incident(u)) {
        if (edges_[e].other(u) == v) {
            ++count;
        }
    }
    return count;
}

ParallelPairSummary parallel_pairs(const Multigraph& g) {
    std::map<std::pair<Vertex, Vertex>, int> count;
    for (const Edge& e : g.edges()) {
        ++count[{e.lo(), e.hi()}];
    }
    ParallelPairSummary out;
    for (const auto& [key, mult] : count) {
        if (mult >= 2) {
            out.pairs.push_back({key.first, key.second, mult});
        }
    }
    return out;
}

bool is_simple(const Multigraph& g) {
    return parallel_pairs(g).k() == 0;
}

bool has_triangle(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v] = g.neighbours(v);
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : adj[a]) {
            if (b <= a) {
                continue;
            }
            for (Vertex c : adj[b]) {
                if (c > b && std::binary_search(adj[a].begin(), adj[a].end(), c)) {
                    return true;
                }
            }
        }
    }
    return false;
}

Multigraph disjoint_union(std::span<const Multigraph> parts) {
    if (parts.empty()) {
        throw GraphError("disjoint_union needs at least one part");
    }
    int offset = 0;
    std::vector<Edge> edges;
    for (const Multigraph& part : parts) {
        for (const Edge& e : part.edges()) {
            edges.push_back({e.u + offset, e.v + offset});
        }
        offset += part.vertex_count();
    }
    return Multigraph(offset, std::move(edges));
}

std::vector<Vertex> normalize_vertex_set(const Multigraph& g, std::span<const Vertex> s) {
    std::vector<Vertex> out(s.begin(), s.end());
    for (Vertex v : out) {
        if (v < 0 || v >= g.vertex_count()) {
            throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s) {
    InducedSubgraph out;
    out.vertices = normalize_vertex_set(g, s);
    out.index_map.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) {
        out.index_map[out.vertices[i]] = i;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = out.index_map[e.u];
        int b = out.index_map[e.v];
        if (a >= 0 && b >= 0) {
            edges.push_back({a, b});
        }
    }
    out.graph = Multigraph(static_cast<int>(out.vertices.size()), std::move(edges));
    return out;
}

bool is_induced_forest(const Multigraph& g, std::span<const Vertex> s) {
    std::vector<Vertex> set = normalize_vertex_set(g, s);
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : set) {
        in[v] = 1;
    }
    // A repeated endpoint pair is a 2-cycle and also fails the union below.
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v] && !uf.unite(e.u, e.v)) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) {
        uf.unite(e.u, e.v);
    }
    std::vector<int> slot(g.vertex_count(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

} // namespace ifl
