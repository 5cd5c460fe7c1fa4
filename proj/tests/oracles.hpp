#pragma once

// Slow reference computations written against plain edge lists. Nothing here
// calls into the library, so the tests compare two independent answers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// True iff the edges inside mask close no cycle; a repeated pair is a cycle.
inline bool acyclic_on(int n, const EdgeList& edges, std::uint32_t mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : edges) {
        if (!(mask >> u & 1U) || !(mask >> v & 1U)) {
            continue;
        }
        const int a = find(u);
        const int b = find(v);
        if (a == b) {
            return false;
        }
        parent[a] = b;
    }
    return true;
}

inline bool max_degree_two_on(int n, const EdgeList& edges, std::uint32_t mask) {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        if ((mask >> u & 1U) && (mask >> v & 1U) && (++deg[u] > 2 || ++deg[v] > 2)) {
            return false;
        }
    }
    return true;
}

inline bool edgeless_on(const EdgeList& edges, std::uint32_t mask) {
    return std::none_of(edges.begin(), edges.end(),
                        [&](const auto& e) { return (mask >> e.first & 1U) && (mask >> e.second & 1U); });
}

enum class Kind { Forest, Linear, Independent };

inline int best(int n, const EdgeList& edges, Kind kind) {
    int result = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= result) {
            continue;
        }
        bool ok = false;
        switch (kind) {
        case Kind::Forest:
            ok = acyclic_on(n, edges, mask);
            break;
        case Kind::Linear:
            ok = acyclic_on(n, edges, mask) && max_degree_two_on(n, edges, mask);
            break;
        case Kind::Independent:
            ok = edgeless_on(edges, mask);
            break;
        }
        if (ok) {
            result = size;
        }
    }
    return result;
}

inline int a(int n, const EdgeList& edges) { return best(n, edges, Kind::Forest); }
inline int a_linear(int n, const EdgeList& edges) { return best(n, edges, Kind::Linear); }
inline int alpha(int n, const EdgeList& edges) { return best(n, edges, Kind::Independent); }

// Distinct unordered pairs carrying at least two edges.
inline int parallel_pair_count(const EdgeList& edges) {
    std::vector<std::pair<int, int>> keys;
    for (auto [u, v] : edges) {
        keys.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(keys.begin(), keys.end());
    int count = 0;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) {
            ++j;
        }
        count += j - i >= 2 ? 1 : 0;
        i = j;
    }
    return count;
}

// Random loopless multigraph: a random simple graph plus extra copies of some
// of its edges.
inline EdgeList random_multigraph(std::mt19937_64& rng, int n, double density, int extra_copies) {
    EdgeList edges;
    std::bernoulli_distribution take(density);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (take(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    if (!edges.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        for (int i = 0; i < extra_copies; ++i) {
            edges.push_back(edges[pick(rng)]);
        }
    }
    return edges;
}

// Simple graph on n vertices whose pair set is encoded by the bits of code.
inline EdgeList simple_graph_from_code(int n, std::uint64_t code) {
    EdgeList edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (code >> bit & 1U) {
                edges.emplace_back(u, v);
            }
        }
    }
    return edges;
}

inline EdgeList complete(int n) {
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return edges;
}

inline EdgeList doubled(const EdgeList& edges) {
    EdgeList out;
    for (const auto& e : edges) {
        out.push_back(e);
        out.push_back(e);
    }
    return out;
}

} // namespace oracle
