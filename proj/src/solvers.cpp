#include "ifl/solvers.hpp"

#include "ifl/union_find.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ifl {

std::string to_string(ForestKind kind) {
    switch (kind) {
    case ForestKind::Forest:
        return "forest";
    case ForestKind::LinearForest:
        return "linear-forest";
    case ForestKind::IndependentSet:
        return "independent-set";
    }
    return "?";
}

std::string to_string(Provenance provenance) {
    switch (provenance) {
    case Provenance::Oracle:
        return "oracle";
    case Provenance::BranchAndBound:
        return "branch-and-bound";
    case Provenance::Constructed:
        return "constructed";
    }
    return "?";
}

ForestKind parse_forest_kind(const std::string& text) {
    if (text == "forest") {
        return ForestKind::Forest;
    }
    if (text == "linear" || text == "linear-forest") {
        return ForestKind::LinearForest;
    }
    if (text == "independent" || text == "independent-set") {
        return ForestKind::IndependentSet;
    }
    throw std::invalid_argument("unknown forest kind '" + text + "'");
}

bool induces(const Multigraph& g, std::span<const Vertex> s, ForestKind kind) {
    const InducedSubgraph sub = induced_subgraph(g, s);
    switch (kind) {
    case ForestKind::IndependentSet:
        return sub.graph.edge_count() == 0;
    case ForestKind::Forest:
        return is_induced_forest(g, s);
    case ForestKind::LinearForest:
        if (!is_induced_forest(g, s)) {
            return false;
        }
        for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
            if (sub.graph.degree(v) > 2) {
                return false;
            }
        }
        return true;
    }
    return false;
}

bool certificate_valid(const Multigraph& g, const ForestCertificate& cert) {
    for (Vertex v : cert.vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            return false;
        }
    }
    if (!std::is_sorted(cert.vertices.begin(), cert.vertices.end()) ||
        std::adjacent_find(cert.vertices.begin(), cert.vertices.end()) != cert.vertices.end()) {
        return false;
    }
    return induces(g, cert.vertices, cert.kind);
}

namespace {

// One connected component, relabelled 0..s-1 in increasing global order.
// Parallel edges are collapsed to one neighbour entry flagged as a forbidden
// pair.
class BranchAndBound {
public:
    BranchAndBound(const Multigraph& g, const std::vector<Vertex>& vertices, ForestKind kind, std::uint64_t budget,
                   std::uint64_t& nodes)
        : kind_(kind), budget_(budget), nodes_(nodes), global_(vertices), size_(static_cast<int>(vertices.size())),
          adj_(size_), uf_(size_), state_(size_, 0), inside_degree_(size_, 0) {
        std::vector<int> local(g.vertex_count(), -1);
        for (int i = 0; i < size_; ++i) {
            local[vertices[i]] = i;
        }
        for (int i = 0; i < size_; ++i) {
            for (Vertex w : g.neighbours(vertices[i])) {
                adj_[i].push_back({local[w], g.multiplicity(vertices[i], w) >= 2});
            }
        }
    }

    std::vector<Vertex> run() {
        descend(0, 0);
        std::vector<Vertex> out;
        for (int i = 0; i < size_; ++i) {
            if (best_state_[i]) {
                out.push_back(global_[i]);
            }
        }
        return out;
    }

private:
    struct Neighbour {
        int v;
        bool parallel;
    };

    bool can_include(int v) const {
        int inside = 0;
        std::vector<int> roots;
        for (const Neighbour& nb : adj_[v]) {
            if (!state_[nb.v]) {
                continue;
            }
            if (kind_ == ForestKind::IndependentSet || nb.parallel) {
                return false;
            }
            ++inside;
            if (kind_ == ForestKind::LinearForest && inside_degree_[nb.v] >= 2) {
                return false;
            }
            roots.push_back(uf_.find(nb.v));
        }
        if (kind_ == ForestKind::LinearForest && inside > 2) {
            return false;
        }
        std::sort(roots.begin(), roots.end());
        return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    }

    void descend(int next, int included) {
        if (++nodes_ > budget_) {
            throw SearchBudgetExceeded("branch and bound exceeded its node budget");
        }
        if (included + (size_ - next) <= best_) {
            return;
        }
        if (next == size_) {
            best_ = included;
            best_state_ = state_;
            return;
        }
        if (can_include(next)) {
            const int mark = uf_.checkpoint();
            state_[next] = 1;
            for (const Neighbour& nb : adj_[next]) {
                if (state_[nb.v] && nb.v != next) {
                    uf_.unite(next, nb.v);
                    ++inside_degree_[nb.v];
                    ++inside_degree_[next];
                }
            }
            descend(next + 1, included + 1);
            for (const Neighbour& nb : adj_[next]) {
                if (state_[nb.v] && nb.v != next) {
                    --inside_degree_[nb.v];
                    --inside_degree_[next];
                }
            }
            state_[next] = 0;
            uf_.rollback(mark);
        }
        descend(next + 1, included);
    }

    ForestKind kind_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<Vertex> global_;
    int size_;
    std::vector<std::vector<Neighbour>> adj_;
    RollbackUnionFind uf_;
    std::vector<char> state_;
    std::vector<int> inside_degree_;
    int best_ = -1;
    std::vector<char> best_state_;
};

} // namespace

ForestCertificate solve(const Multigraph& g, ForestKind kind, const SolverOptions& options) {
    ForestCertificate cert;
    cert.kind = kind;
    cert.provenance = Provenance::BranchAndBound;
    std::uint64_t nodes = 0;
    // Components are solved independently; a(M) is additive over them.
    for (const auto& comp : connected_components(g)) {
        BranchAndBound bb(g, comp, kind, options.budget, nodes);
        const auto part = bb.run();
        cert.vertices.insert(cert.vertices.end(), part.begin(), part.end());
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

ForestCertificate max_induced_forest(const Multigraph& g, const SolverOptions& options) {
    return solve(g, ForestKind::Forest, options);
}

ForestCertificate max_independent_set(const Multigraph& g, const SolverOptions& options) {
    return solve(g, ForestKind::IndependentSet, options);
}

ForestCertificate max_induced_linear_forest(const Multigraph& g, const SolverOptions& options) {
    return solve(g, ForestKind::LinearForest, options);
}

ForestCertificate brute_force_max(const Multigraph& g, ForestKind kind) {
    const int n = g.vertex_count();
    if (n > 24) {
        throw GraphError("brute force limited to 24 vertices");
    }
    std::uint32_t best = 0;
    int best_size = -1;
    std::vector<Vertex> set;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < best_size) {
            continue;
        }
        set.clear();
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1U) {
                set.push_back(v);
            }
        }
        if (!induces(g, set, kind)) {
            continue;
        }
        // Equal sizes: the set holding the smallest differing vertex wins.
        const std::uint32_t diff = mask ^ best;
        if (size > best_size || (diff != 0 && (mask & (diff & (~diff + 1))) != 0)) {
            best = mask;
            best_size = size;
        }
    }
    ForestCertificate cert;
    cert.kind = kind;
    cert.provenance = Provenance::Oracle;
    for (int v = 0; v < n; ++v) {
        if (best >> v & 1U) {
            cert.vertices.push_back(v);
        }
    }
    return cert;
}

} // namespace ifl
