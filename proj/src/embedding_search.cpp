#include "ifl/embedding.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ifl {

namespace {

struct BudgetSpent {};

// Depth-first enumeration of the rotation systems of one connected component,
// keeping the planar one with the fewest 2-faces.
class ComponentSearch {
public:
    ComponentSearch(const Multigraph& g, const std::vector<Vertex>& vertices, int allowed_two_faces, bool stop_at_first,
                    std::uint64_t budget, std::uint64_t& examined)
        : g_(g), allowed_(allowed_two_faces), stop_at_first_(stop_at_first), budget_(budget), examined_(examined),
          succ_(2 * static_cast<std::size_t>(g.edge_count()), -1) {
        int edges = 0;
        for (Vertex v : vertices) {
            edges += g.degree(v);
            for (int e : g.incident(v)) {
                darts_.push_back(e2d(e, v));
            }
        }
        edges /= 2;
        std::sort(darts_.begin(), darts_.end());
        for (Vertex v : vertices) {
            for (int e : g.incident(v)) {
                vertex_darts_[v].push_back(e2d(e, v));
            }
            std::sort(vertex_darts_[v].begin(), vertex_darts_[v].end());
        }
        target_faces_ = 2 - static_cast<int>(vertices.size()) + edges;

        // BFS order from the first vertex of maximum degree.
        Vertex start = vertices.front();
        for (Vertex v : vertices) {
            if (g.degree(v) > g.degree(start)) {
                start = v;
            }
        }
        std::vector<char> seen(g.vertex_count(), 0);
        std::deque<Vertex> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            order_.push_back(v);
            for (Vertex w : g.neighbours(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Returns false if the budget ran out before the space was covered.
    bool run() {
        try {
            assign(0);
        } catch (const BudgetSpent&) {
            return false;
        }
        return true;
    }

    bool found() const { return best_ <= allowed_; }
    int best_two_faces() const { return best_; }
    const std::vector<std::vector<int>>& best_rotation() const { return best_rotation_; }
    const std::vector<Vertex>& order() const { return order_; }

private:
    int e2d(int e, Vertex v) const { return 2 * e + (g_.edge(e).lo() == v ? 0 : 1); }

    // Setting succ[d] defines next(twin(d)); the only face that can close is
    // the walk through twin(d).
    bool close_face_through(int entering) {
        int len = 0;
        int d = entering;
        do {
            ++len;
            const int next = succ_[twin(d)];
            if (next < 0) {
                return true;
            }
            d = next;
        } while (d != entering);
        ++closed_;
        closed_darts_ += len;
        if (len == 2) {
            ++closed_two_;
        }
        return !pruned();
    }

    bool pruned() const {
        const int cap = std::min(allowed_, best_ - 1);
        const int open = static_cast<int>(darts_.size()) - closed_darts_;
        return closed_two_ > cap || closed_ + open / 2 < target_faces_;
    }

    void assign(std::size_t index) {
        if (pruned()) {
            return;
        }
        if (++examined_ > budget_) {
            throw BudgetSpent{};
        }
        if (index == order_.size()) {
            if (closed_ == target_faces_) {
                best_ = closed_two_;
                best_rotation_.assign(g_.vertex_count(), {});
                for (Vertex v : order_) {
                    best_rotation_[v] = current_[v];
                }
                if (best_ == 0 || stop_at_first_) {
                    done_ = true;
                }
            }
            return;
        }
        const Vertex v = order_[index];
        std::vector<int>& cyc = current_[v];
        cyc.assign(vertex_darts_[v].size(), -1);
        cyc[0] = vertex_darts_[v][0];
        std::vector<char> used(vertex_darts_[v].size(), 0);
        used[0] = 1;
        extend(index, v, 1, used);
    }

    // Chooses the dart at position pos of v's rotation, smallest first.
    void extend(std::size_t index, Vertex v, std::size_t pos, std::vector<char>& used) {
        std::vector<int>& cyc = current_[v];
        const std::vector<int>& darts = vertex_darts_[v];
        const int saved_closed = closed_;
        const int saved_two = closed_two_;
        const int saved_darts = closed_darts_;
        if (pos == darts.size()) {
            // Mirror images have the same faces; fix the orientation at the
            // first vertex.
            if (index == 0 && cyc.size() >= 3 && cyc[1] > cyc.back()) {
                return;
            }
            succ_[cyc.back()] = cyc[0];
            if (close_face_through(twin(cyc.back()))) {
                assign(index + 1);
            }
            closed_ = saved_closed;
            closed_two_ = saved_two;
            closed_darts_ = saved_darts;
            if (!done_) {
                succ_[cyc.back()] = -1;
            }
            return;
        }
        for (std::size_t i = 1; i < darts.size() && !done_; ++i) {
            if (used[i]) {
                continue;
            }
            used[i] = 1;
            cyc[pos] = darts[i];
            succ_[cyc[pos - 1]] = darts[i];
            if (close_face_through(twin(cyc[pos - 1]))) {
                extend(index, v, pos + 1, used);
            }
            closed_ = saved_closed;
            closed_two_ = saved_two;
            closed_darts_ = saved_darts;
            if (!done_) {
                succ_[cyc[pos - 1]] = -1;
            }
            used[i] = 0;
        }
    }

    const Multigraph& g_;
    int allowed_;
    bool stop_at_first_;
    std::uint64_t budget_;
    std::uint64_t& examined_;
    std::vector<int> succ_;
    std::vector<int> darts_;
    std::vector<Vertex> order_;
    int target_faces_ = 0;
    int best_ = std::numeric_limits<int>::max();
    bool done_ = false;
    std::vector<std::vector<int>> best_rotation_;
    std::vector<std::vector<int>> current_ = std::vector<std::vector<int>>(g_.vertex_count());
    std::vector<std::vector<int>> vertex_darts_ = std::vector<std::vector<int>>(g_.vertex_count());
    int closed_ = 0;
    int closed_two_ = 0;
    int closed_darts_ = 0;
};

std::vector<std::vector<Vertex>> edge_components(const Multigraph& g) {
    std::vector<std::vector<Vertex>> out;
    for (auto& comp : connected_components(g)) {
        if (g.degree(comp.front()) > 0) {
            out.push_back(std::move(comp));
        }
    }
    return out;
}

// Glues every 2-face of every component to some other component. Assumes the
// counting condition sum(max(t_c, 1)) <= 2P - 2 already holds.
PlaneMultigraph assemble(const Multigraph& g, RotationSystem rs) {
    const PlaneMultigraph scaffold(g, rs, std::vector<int>(edge_components(g).size(), 0), {});
    const int P = scaffold.component_count();
    std::vector<std::vector<int>> twos(P);
    std::vector<int> degree_two_free(P, -1);
    for (int c = 0; c < P; ++c) {
        for (const FaceWalk& f : scaffold.component_faces(c)) {
            if (f.degree() == 2) {
                twos[c].push_back(f.id);
            } else if (degree_two_free[c] < 0) {
                degree_two_free[c] = f.id;
            }
        }
    }

    std::vector<int> outer(P, 0);
    std::vector<Placement> placement(P, Placement::unbounded());
    // demands[c]: faces of c that still need a guest; -1 means "needs a second
    // component in the unbounded region".
    std::vector<std::vector<int>> demands(P);
    int root = 0;
    for (int c = 0; c < P; ++c) {
        if (twos[c].empty()) {
            root = c;
            break;
        }
    }
    for (int c = 0; c < P; ++c) {
        if (c == root) {
            if (twos[c].empty()) {
                outer[c] = 0;
            } else if (degree_two_free[c] >= 0) {
                outer[c] = degree_two_free[c];
                demands[c] = twos[c];
            } else {
                outer[c] = twos[c].front();
                demands[c].push_back(-1);
                demands[c].insert(demands[c].end(), twos[c].begin() + 1, twos[c].end());
            }
        } else if (!twos[c].empty()) {
            outer[c] = twos[c].front();
            demands[c].assign(twos[c].begin() + 1, twos[c].end());
        }
    }

    std::vector<int> pool;
    for (int c = 0; c < P; ++c) {
        if (c != root) {
            pool.push_back(c);
        }
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [&](int a, int b) { return demands[a].size() > demands[b].size(); });
    std::size_t next = 0;
    std::deque<int> queue{root};
    while (next < pool.size() || !queue.empty()) {
        if (queue.empty()) {
            queue.push_back(pool[next++]); // stays unbounded
        }
        int host = queue.front();
        queue.pop_front();
        for (int face : demands[host]) {
            if (next >= pool.size()) {
                throw std::logic_error("embedding assembly ran out of components");
            }
            int guest = pool[next++];
            placement[guest] = face < 0 ? Placement::unbounded() : Placement::in(host, face);
            queue.push_back(guest);
        }
    }
    return PlaneMultigraph(g, std::move(rs), std::move(outer), std::move(placement));
}

EmbeddingSearchResult search(const Multigraph& g, const EmbeddingSearchOptions& options, bool two_face_free) {
    EmbeddingSearchResult result;
    const auto comps = edge_components(g);
    const int P = static_cast<int>(comps.size());
    RotationSystem rs;
    rs.order.assign(g.vertex_count(), {});
    if (P == 0) {
        result.status = EmbeddingSearchResult::Status::Found;
        result.witness = PlaneMultigraph(g, std::move(rs), {}, {});
        return result;
    }

    // With P components at most P - 1 two-faces of one component can be fixed
    // by gluing; a lone component must have none.
    const int allowed = two_face_free ? (P == 1 ? 0 : P - 1) : std::numeric_limits<int>::max() - 1;
    long demand = 0;
    for (const auto& comp : comps) {
        ComponentSearch cs(g, comp, allowed, !two_face_free, options.budget, result.examined);
        if (!cs.run()) {
            result.status = EmbeddingSearchResult::Status::Exhausted;
            return result;
        }
        if (!cs.found()) {
            result.status = EmbeddingSearchResult::Status::None;
            return result;
        }
        demand += std::max(cs.best_two_faces(), 1);
        for (Vertex v : comp) {
            rs.order[v] = cs.best_rotation()[v];
        }
    }
    if (two_face_free && P >= 2 && demand > 2L * P - 2) {
        result.status = EmbeddingSearchResult::Status::None;
        return result;
    }
    PlaneMultigraph pm = two_face_free ? assemble(g, std::move(rs))
                                       : PlaneMultigraph(g, std::move(rs), std::vector<int>(P, 0), {});
    if (two_face_free && !two_faces(pm).empty()) {
        throw std::logic_error("assembled embedding still has a 2-face");
    }
    result.status = EmbeddingSearchResult::Status::Found;
    result.witness = std::move(pm);
    return result;
}

} // namespace

EmbeddingSearchResult search_2face_free_embedding(const Multigraph& g, const EmbeddingSearchOptions& options) {
    return search(g, options, true);
}

EmbeddingSearchResult search_plane_embedding(const Multigraph& g, const EmbeddingSearchOptions& options) {
    return search(g, options, false);
}

} // namespace ifl
