#include "ifl/embedding.hpp"

#include "ifl/union_find.hpp"

#include <algorithm>
#include <string>

namespace ifl {

void validate_rotation(const Multigraph& g, const RotationSystem& rs) {
    if (static_cast<int>(rs.order.size()) != g.vertex_count()) {
        throw EmbeddingError("rotation system covers " + std::to_string(rs.order.size()) + " vertices, graph has " +
                             std::to_string(g.vertex_count()));
    }
    std::vector<char> seen(2 * static_cast<std::size_t>(g.edge_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = rs.order[v];
        if (static_cast<int>(rot.size()) != g.degree(v)) {
            throw EmbeddingError("rotation at vertex " + std::to_string(v) + " has " + std::to_string(rot.size()) +
                                 " darts, degree is " + std::to_string(g.degree(v)));
        }
        for (int d : rot) {
            if (d < 0 || d >= 2 * g.edge_count()) {
                throw EmbeddingError("dart " + std::to_string(d) + " does not exist");
            }
            if (dart_tail(g, d) != v) {
                throw EmbeddingError("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                                     " but leaves vertex " + std::to_string(dart_tail(g, d)));
            }
            if (seen[d]) {
                throw EmbeddingError("dart " + std::to_string(d) + " appears twice");
            }
            seen[d] = 1;
        }
    }
}

std::vector<FaceWalk> trace_faces(const RotationSystem& rs) {
    int dart_total = 0;
    for (const auto& rot : rs.order) {
        dart_total += static_cast<int>(rot.size());
    }
    std::vector<int> succ(dart_total, -1);
    for (const auto& rot : rs.order) {
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= dart_total || succ[d] != -1) {
                throw EmbeddingError("malformed rotation: dart " + std::to_string(d) + " is out of range or repeated");
            }
            succ[d] = rot[(i + 1) % rot.size()];
        }
    }
    if (dart_total % 2 != 0) {
        throw EmbeddingError("malformed rotation: odd number of darts");
    }

    std::vector<FaceWalk> faces;
    if (dart_total == 0) {
        if (!rs.order.empty()) {
            faces.push_back({0, {}});
        }
        return faces;
    }
    std::vector<char> visited(dart_total, 0);
    for (int start = 0; start < dart_total; ++start) {
        if (visited[start]) {
            continue;
        }
        FaceWalk face;
        face.id = static_cast<int>(faces.size());
        int d = start;
        do {
            visited[d] = 1;
            face.darts.push_back(d);
            d = succ[twin(d)];
        } while (d != start);
        faces.push_back(std::move(face));
    }
    return faces;
}

PlaneMultigraph::PlaneMultigraph(Multigraph g, RotationSystem rs, std::vector<int> outer_faces,
                                 std::vector<Placement> placements, std::vector<Placement> isolated)
    : graph_(std::move(g)), rotation_(std::move(rs)), outer_faces_(std::move(outer_faces)),
      placements_(std::move(placements)), isolated_(std::move(isolated)) {
    validate_rotation(graph_, rotation_);

    const auto all_components = connected_components(graph_);
    connected_components_ = static_cast<int>(all_components.size());
    vertex_component_.assign(graph_.vertex_count(), -1);
    for (const auto& verts : all_components) {
        if (graph_.degree(verts.front()) == 0) {
            continue;
        }
        Component comp;
        comp.vertices = verts;
        for (Vertex v : verts) {
            vertex_component_[v] = static_cast<int>(components_.size());
        }
        components_.push_back(std::move(comp));
    }
    for (int e = 0; e < graph_.edge_count(); ++e) {
        components_[vertex_component_[graph_.edge(e).u]].edges.push_back(e);
    }

    if (graph_.edge_count() > 0) {
        for (FaceWalk& face : trace_faces(rotation_)) {
            Component& comp = components_[vertex_component_[dart_tail(graph_, face.darts.front())]];
            face.id = static_cast<int>(comp.faces.size());
            comp.faces.push_back(std::move(face));
        }
    }
    for (int c = 0; c < component_count(); ++c) {
        const Component& comp = components_[c];
        const int chi = static_cast<int>(comp.vertices.size()) - static_cast<int>(comp.edges.size()) +
                        static_cast<int>(comp.faces.size());
        if (chi != 2) {
            throw EmbeddingError("component " + std::to_string(c) + " is not embedded in the plane (n - m + faces = " +
                                 std::to_string(chi) + ")");
        }
    }

    if (static_cast<int>(outer_faces_.size()) != component_count()) {
        throw EmbeddingError("expected an outer face for each of the " + std::to_string(component_count()) +
                             " components");
    }
    for (int c = 0; c < component_count(); ++c) {
        if (outer_faces_[c] < 0 || outer_faces_[c] >= static_cast<int>(components_[c].faces.size())) {
            throw EmbeddingError("outer face " + std::to_string(outer_faces_[c]) + " of component " +
                                 std::to_string(c) + " does not exist");
        }
    }

    if (placements_.empty()) {
        placements_.assign(component_count(), Placement::unbounded());
    }
    if (static_cast<int>(placements_.size()) != component_count()) {
        throw EmbeddingError("expected a placement for each component");
    }
    auto check_target = [&](const Placement& p, const std::string& who) {
        if (p.is_unbounded()) {
            return;
        }
        if (p.component >= component_count() ||
            p.face < 0 || p.face >= static_cast<int>(components_[p.component].faces.size())) {
            throw EmbeddingError(who + " is placed in nonexistent face " + std::to_string(p.component) + "." +
                                 std::to_string(p.face));
        }
    };
    for (int c = 0; c < component_count(); ++c) {
        check_target(placements_[c], "component " + std::to_string(c));
        // The host chain must reach the unbounded region.
        int cur = c;
        for (int steps = 0; !placements_[cur].is_unbounded(); ++steps) {
            cur = placements_[cur].component;
            if (cur == c || steps > component_count()) {
                throw EmbeddingError("placement of component " + std::to_string(c) + " is cyclic");
            }
        }
    }
    if (!isolated_.empty()) {
        if (static_cast<int>(isolated_.size()) != graph_.vertex_count()) {
            throw EmbeddingError("isolated-vertex placement must cover every vertex");
        }
        for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
            if (vertex_component_[v] >= 0) {
                isolated_[v] = Placement::unbounded();
            } else {
                check_target(isolated_[v], "isolated vertex " + std::to_string(v));
            }
        }
    }

    merge();
}

Placement PlaneMultigraph::isolated_placement(Vertex v) const {
    if (isolated_.empty()) {
        return Placement::unbounded();
    }
    return isolated_.at(v);
}

int PlaneMultigraph::global_face(int component, int face) const {
    return node_face_.at(components_.at(component).first_node + face);
}

void PlaneMultigraph::merge() {
    int nodes = 0;
    for (Component& comp : components_) {
        comp.first_node = nodes;
        nodes += static_cast<int>(comp.faces.size());
    }
    const int unbounded = nodes;
    UnionFind uf(nodes + 1);
    for (int c = 0; c < component_count(); ++c) {
        const Placement& p = placements_[c];
        const int target = p.is_unbounded() ? unbounded : components_[p.component].first_node + p.face;
        uf.unite(components_[c].first_node + outer_faces_[c], target);
    }

    std::vector<int> class_id(nodes + 1, -1);
    global_faces_.clear();
    global_faces_.push_back(GlobalFace{0, true, {}, {}, 0});
    class_id[uf.find(unbounded)] = 0;
    node_face_.assign(nodes, -1);
    dart_face_.assign(2 * static_cast<std::size_t>(graph_.edge_count()), -1);
    for (int c = 0; c < component_count(); ++c) {
        const Component& comp = components_[c];
        for (int f = 0; f < static_cast<int>(comp.faces.size()); ++f) {
            const int root = uf.find(comp.first_node + f);
            if (class_id[root] < 0) {
                class_id[root] = static_cast<int>(global_faces_.size());
                global_faces_.push_back(GlobalFace{class_id[root], false, {}, {}, 0});
            }
            GlobalFace& gf = global_faces_[class_id[root]];
            gf.parts.emplace_back(c, f);
            gf.darts.insert(gf.darts.end(), comp.faces[f].darts.begin(), comp.faces[f].darts.end());
            gf.degree += comp.faces[f].degree();
            node_face_[comp.first_node + f] = gf.id;
            for (int d : comp.faces[f].darts) {
                dart_face_[d] = gf.id;
            }
        }
    }
}

std::vector<GlobalFace> merge_faces(const PlaneMultigraph& pm) {
    return pm.faces();
}

bool handshake_check(const PlaneMultigraph& pm) {
    long total = 0;
    for (const GlobalFace& f : pm.faces()) {
        total += f.degree;
    }
    return total == 2L * pm.graph().edge_count();
}

bool euler_check(const PlaneMultigraph& pm) {
    const long n = pm.graph().vertex_count();
    const long m = pm.graph().edge_count();
    const long faces = static_cast<long>(pm.faces().size());
    return n - m + faces == 1 + pm.connected_component_count();
}

std::vector<GlobalFace> two_faces(const PlaneMultigraph& pm) {
    std::vector<GlobalFace> out;
    for (const GlobalFace& f : pm.faces()) {
        if (f.degree == 2) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<char> dual_reachable(const PlaneMultigraph& pm, int start, std::span<const int> blocked) {
    const int faces = static_cast<int>(pm.faces().size());
    const int m = pm.graph().edge_count();
    std::vector<char> cut(m, 0);
    for (int e : blocked) {
        cut.at(e) = 1;
    }
    std::vector<std::vector<int>> dual(faces);
    for (int e = 0; e < m; ++e) {
        if (!cut[e]) {
            const int a = pm.face_of_dart(2 * e);
            const int b = pm.face_of_dart(2 * e + 1);
            dual[a].push_back(b);
            dual[b].push_back(a);
        }
    }
    std::vector<char> seen(faces, 0);
    std::vector<int> stack{start};
    seen.at(start) = 1;
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int h : dual[f]) {
            if (!seen[h]) {
                seen[h] = 1;
                stack.push_back(h);
            }
        }
    }
    return seen;
}

bool edge_bound_check(const PlaneMultigraph& pm) {
    const int n = pm.graph().vertex_count();
    if (n < 3) {
        throw PreconditionError(PreconditionError::Reason::TooFewVertices,
                                "edge bound needs n >= 3, got n = " + std::to_string(n));
    }
    if (!two_faces(pm).empty()) {
        throw PreconditionError(PreconditionError::Reason::HasTwoFace, "edge bound needs an embedding without 2-faces");
    }
    return pm.graph().edge_count() <= 3 * n - 6;
}

PlaneMultigraph disjoint_union(std::span<const PlaneMultigraph> parts) {
    if (parts.empty()) {
        throw GraphError("disjoint_union needs at least one part");
    }
    int vertex_offset = 0;
    int edge_offset = 0;
    int component_offset = 0;
    std::vector<Edge> edges;
    RotationSystem rs;
    std::vector<int> outer;
    std::vector<Placement> placements;
    std::vector<Placement> isolated;
    auto shift = [&](Placement p) {
        if (!p.is_unbounded()) {
            p.component += component_offset;
        }
        return p;
    };
    for (const PlaneMultigraph& part : parts) {
        const Multigraph& g = part.graph();
        for (const Edge& e : g.edges()) {
            edges.push_back({e.u + vertex_offset, e.v + vertex_offset});
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> rot;
            for (int d : part.rotation().order[v]) {
                rot.push_back(d + 2 * edge_offset);
            }
            rs.order.push_back(std::move(rot));
            isolated.push_back(shift(part.isolated_placement(v)));
        }
        for (int c = 0; c < part.component_count(); ++c) {
            outer.push_back(part.outer_face(c));
            placements.push_back(shift(part.placement(c)));
        }
        vertex_offset += g.vertex_count();
        edge_offset += g.edge_count();
        component_offset += part.component_count();
    }
    return PlaneMultigraph(Multigraph(vertex_offset, std::move(edges)), std::move(rs), std::move(outer),
                           std::move(placements), std::move(isolated));
}

PlaneMultigraph with_placement(const PlaneMultigraph& pm, int component, Placement where) {
    std::vector<Placement> placements = pm.placements();
    placements.at(component) = where;
    return PlaneMultigraph(pm.graph(), pm.rotation(), pm.outer_faces(), std::move(placements),
                           pm.isolated_placements());
}

PlaneMultigraph with_outer_face(const PlaneMultigraph& pm, int component, int face) {
    std::vector<int> outer = pm.outer_faces();
    outer.at(component) = face;
    return PlaneMultigraph(pm.graph(), pm.rotation(), std::move(outer), pm.placements(), pm.isolated_placements());
}

PlaneMultigraph remove_edge(const PlaneMultigraph& pm, int removed) {
    const Multigraph& g = pm.graph();
    if (removed < 0 || removed >= g.edge_count()) {
        throw GraphError("edge " + std::to_string(removed) + " does not exist");
    }
    auto new_dart = [removed](int d) { return dart_edge(d) < removed ? d : d - 2; };

    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + removed);
    Multigraph h(g.vertex_count(), std::move(edges));
    if (connected_components(h).size() != connected_components(g).size()) {
        throw EmbeddingError("edge " + std::to_string(removed) + " is a bridge");
    }
    RotationSystem rs;
    for (const auto& rot : pm.rotation().order) {
        std::vector<int> out;
        for (int d : rot) {
            if (dart_edge(d) != removed) {
                out.push_back(new_dart(d));
            }
        }
        rs.order.push_back(std::move(out));
    }

    // Scaffold with trivial face references, only used to read off the new
    // face numbering.
    const PlaneMultigraph scaffold(h, rs, std::vector<int>(pm.component_count(), 0), {});
    std::vector<int> dart_local(2 * static_cast<std::size_t>(h.edge_count()), -1);
    for (int c = 0; c < scaffold.component_count(); ++c) {
        for (const FaceWalk& f : scaffold.component_faces(c)) {
            for (int d : f.darts) {
                dart_local[d] = f.id;
            }
        }
    }
    auto remap_face = [&](int c, int f) {
        for (int d : pm.component_faces(c).at(f).darts) {
            if (dart_edge(d) != removed) {
                return dart_local[new_dart(d)];
            }
        }
        throw EmbeddingError("face " + std::to_string(c) + "." + std::to_string(f) + " consists of the removed edge");
    };
    auto remap = [&](Placement p) {
        if (!p.is_unbounded()) {
            p.face = remap_face(p.component, p.face);
        }
        return p;
    };

    std::vector<int> outer;
    std::vector<Placement> placements;
    for (int c = 0; c < pm.component_count(); ++c) {
        outer.push_back(remap_face(c, pm.outer_face(c)));
        placements.push_back(remap(pm.placement(c)));
    }
    std::vector<Placement> isolated;
    if (!pm.isolated_placements().empty()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            isolated.push_back(pm.component_of(v) < 0 ? remap(pm.isolated_placement(v)) : Placement::unbounded());
        }
    }
    return PlaneMultigraph(std::move(h), std::move(rs), std::move(outer), std::move(placements), std::move(isolated));
}

} // namespace ifl
