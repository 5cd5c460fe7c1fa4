#pragma once

#include "ifl/multigraph.hpp"
#include "oracles.hpp"

inline ifl::Multigraph to_graph(int n, const oracle::EdgeList& edges) {
    std::vector<ifl::Edge> out;
    for (const auto& [u, v] : edges) {
        out.push_back({u, v});
    }
    return ifl::Multigraph(n, std::move(out));
}

inline oracle::EdgeList to_edges(const ifl::Multigraph& g) {
    oracle::EdgeList out;
    for (const ifl::Edge& e : g.edges()) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}
