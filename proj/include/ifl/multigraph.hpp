#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace ifl {

using Vertex = int;

/// Thrown on malformed graphs and out-of-range vertex references.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered endpoint pair. Loops are never stored.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex lo() const { return u < v ? u : v; }
    Vertex hi() const { return u < v ? v : u; }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph on vertices [0, n) with edges [0, m). Parallel edges are
/// separate entries. Immutable once built.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n, std::vector<Edge> edges = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(e); }

    /// Incident edge ids of v in increasing order.
    const std::vector<int>& incident(Vertex v) const { return incident_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }

    /// Distinct neighbours of v in increasing order.
    std::vector<Vertex> neighbours(Vertex v) const;
    /// Number of edges joining u and v.
    int multiplicity(Vertex u, Vertex v) const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

struct ParallelPair {
    Vertex u = 0; // u < v
    Vertex v = 0;
    int multiplicity = 0;

    friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

struct ParallelPairSummary {
    std::vector<ParallelPair> pairs; // sorted by (u, v)
    int k() const { return static_cast<int>(pairs.size()); }
};

/// Every endpoint pair joined by at least two edges.
ParallelPairSummary parallel_pairs(const Multigraph& g);

bool is_simple(const Multigraph& g);

bool has_triangle(const Multigraph& g);

/// Concatenates the parts; part i is shifted by the vertex and edge totals of
/// the parts before it. Throws on an empty list.
Multigraph disjoint_union(std::span<const Multigraph> parts);

struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> index_map; // old vertex -> new vertex, -1 if dropped
    std::vector<Vertex> vertices; // new vertex -> old vertex
};

/// Keeps exactly the edges with both endpoints in s, in their original order.
InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s);

/// True iff g[s] is acyclic; a parallel pair inside s counts as a 2-cycle.
bool is_induced_forest(const Multigraph& g, std::span<const Vertex> s);

/// Connected components (isolated vertices included), each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);

/// Sorted, de-duplicated copy of s; throws GraphError on an out-of-range vertex.
std::vector<Vertex> normalize_vertex_set(const Multigraph& g, std::span<const Vertex> s);

} // namespace ifl
