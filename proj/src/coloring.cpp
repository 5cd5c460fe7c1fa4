#include "ifl/solvers.hpp"

#include "ifl/union_find.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ifl {

bool verify_acyclic_coloring(const Multigraph& g, const AcyclicColoring& coloring) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.colors.size()) != n) {
        throw GraphError("colouring covers " + std::to_string(coloring.colors.size()) + " of " + std::to_string(n) +
                         " vertices");
    }
    for (Vertex v = 0; v < n; ++v) {
        const int c = coloring.colors[v];
        if (c < 0) {
            throw GraphError("vertex " + std::to_string(v) + " has no colour");
        }
        if (c >= coloring.count) {
            throw GraphError("vertex " + std::to_string(v) + " has colour " + std::to_string(c) + " outside [0, " +
                             std::to_string(coloring.count) + ")");
        }
    }
    for (const Edge& e : g.edges()) {
        if (coloring.colors[e.u] == coloring.colors[e.v]) {
            return false;
        }
    }
    for (int a = 0; a < coloring.count; ++a) {
        for (int b = a + 1; b < coloring.count; ++b) {
            UnionFind uf(n);
            for (Vertex v = 0; v < n; ++v) {
                const int cv = coloring.colors[v];
                if (cv != a && cv != b) {
                    continue;
                }
                for (Vertex w : g.neighbours(v)) {
                    const int cw = coloring.colors[w];
                    if (w > v && (cw == a || cw == b) && !uf.unite(v, w)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

struct BudgetSpent {};

class ColoringSearch {
public:
    ColoringSearch(const Multigraph& g, int colors, std::uint64_t budget, std::uint64_t& visited)
        : n_(g.vertex_count()), colors_(colors), budget_(budget), visited_(visited), adj_(n_), color_(n_, -1) {
        for (Vertex v = 0; v < n_; ++v) {
            adj_[v] = g.neighbours(v);
        }
        // Smallest-last elimination; colour in reverse so every vertex sees
        // few coloured neighbours.
        std::vector<int> degree(n_);
        std::vector<char> removed(n_, 0);
        for (Vertex v = 0; v < n_; ++v) {
            degree[v] = static_cast<int>(adj_[v].size());
        }
        for (int step = 0; step < n_; ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < n_; ++v) {
                if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) {
                    pick = v;
                }
            }
            removed[pick] = 1;
            order_.push_back(pick);
            for (Vertex w : adj_[pick]) {
                --degree[w];
            }
        }
        std::reverse(order_.begin(), order_.end());
    }

    bool run() { return place(0, -1); }
    const std::vector<int>& colors() const { return color_; }

private:
    // Adding v in colour a closes a bichromatic cycle iff two of its
    // neighbours in some colour b already share an {a, b} tree.
    bool closes_cycle(Vertex v, int a) const {
        for (int b = 0; b < colors_; ++b) {
            if (b == a) {
                continue;
            }
            std::vector<Vertex> targets;
            for (Vertex w : adj_[v]) {
                if (color_[w] == b) {
                    targets.push_back(w);
                }
            }
            if (targets.size() < 2) {
                continue;
            }
            std::vector<char> reached(n_, 0);
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (reached[targets[t]]) {
                    return true;
                }
                std::deque<Vertex> queue{targets[t]};
                reached[targets[t]] = 1;
                while (!queue.empty()) {
                    Vertex x = queue.front();
                    queue.pop_front();
                    for (Vertex y : adj_[x]) {
                        if (y != v && !reached[y] && (color_[y] == a || color_[y] == b)) {
                            reached[y] = 1;
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        return false;
    }

    bool place(int pos, int highest) {
        if (++visited_ > budget_) {
            throw BudgetSpent{};
        }
        if (pos == n_) {
            return true;
        }
        const Vertex v = order_[pos];
        const int limit = std::min(highest + 1, colors_ - 1);
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (Vertex w : adj_[v]) {
                if (color_[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash || closes_cycle(v, c)) {
                continue;
            }
            color_[v] = c;
            if (place(pos + 1, std::max(highest, c))) {
                return true;
            }
            color_[v] = -1;
        }
        return false;
    }

    int n_;
    int colors_;
    std::uint64_t budget_;
    std::uint64_t& visited_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> color_;
    std::vector<Vertex> order_;
};

} // namespace

ColoringSearchResult find_acyclic_coloring(const Multigraph& g, int colors, const ColoringSearchOptions& options) {
    if (colors <= 0) {
        throw std::invalid_argument("colour count must be positive");
    }
    ColoringSearchResult result;
    ColoringSearch search(g, colors, options.budget, result.visited);
    try {
        if (search.run()) {
            result.status = ColoringSearchResult::Status::Found;
            result.coloring = AcyclicColoring{search.colors(), colors};
        } else {
            result.status = ColoringSearchResult::Status::None;
        }
    } catch (const BudgetSpent&) {
        result.status = ColoringSearchResult::Status::Exhausted;
    }
    return result;
}

} // namespace ifl
