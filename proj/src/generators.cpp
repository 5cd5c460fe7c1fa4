#include "ifl/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ifl {

std::string to_string(Family family) {
    switch (family) {
    case Family::K4Copies:
        return "k4";
    case Family::DoubledK4Copies:
        return "dk4";
    case Family::NK:
        return "nk";
    case Family::MK:
        return "mk";
    }
    return "?";
}

Family parse_family(const std::string& text) {
    if (text == "k4") {
        return Family::K4Copies;
    }
    if (text == "dk4") {
        return Family::DoubledK4Copies;
    }
    if (text == "nk") {
        return Family::NK;
    }
    if (text == "mk") {
        return Family::MK;
    }
    throw std::invalid_argument("unknown family '" + text + "'");
}

PlaneMultigraph embedded_k4() {
    Multigraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    // Triangle 012 counterclockwise with 3 inside it.
    RotationSystem rs{{{0, 4, 2}, {6, 8, 1}, {3, 10, 7}, {11, 5, 9}}};
    return PlaneMultigraph(std::move(g), std::move(rs), {0}, {});
}

PlaneMultigraph doubled(const PlaneMultigraph& pm) {
    const Multigraph& g = pm.graph();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        edges.push_back(e);
    }
    // Edge e becomes 2e (original) and 2e+1 (copy). The copy's dart precedes
    // the original at the lower end and follows it at the higher end, so the
    // pair bounds a digon.
    RotationSystem rs;
    for (const auto& rot : pm.rotation().order) {
        std::vector<int> out;
        for (int d : rot) {
            const int e = dart_edge(d);
            const int side = d & 1;
            const int original = 4 * e + side;
            const int copy = 4 * e + 2 + side;
            if (side == 0) {
                out.push_back(copy);
                out.push_back(original);
            } else {
                out.push_back(original);
                out.push_back(copy);
            }
        }
        rs.order.push_back(std::move(out));
    }
    Multigraph h(g.vertex_count(), std::move(edges));
    // Old face f survives as the face through the original of its first dart.
    const PlaneMultigraph scaffold(h, rs, std::vector<int>(pm.component_count(), 0), {});
    auto remap = [&](int c, int f) {
        const int d = pm.component_faces(c).at(f).darts.front();
        const int nd = 4 * dart_edge(d) + (d & 1);
        for (const FaceWalk& w : scaffold.component_faces(c)) {
            if (std::find(w.darts.begin(), w.darts.end(), nd) != w.darts.end()) {
                return w.id;
            }
        }
        throw std::logic_error("doubled face lost");
    };
    std::vector<int> outer;
    std::vector<Placement> placements;
    for (int c = 0; c < pm.component_count(); ++c) {
        outer.push_back(remap(c, pm.outer_face(c)));
        Placement p = pm.placement(c);
        if (!p.is_unbounded()) {
            p.face = remap(p.component, p.face);
        }
        placements.push_back(p);
    }
    return PlaneMultigraph(std::move(h), std::move(rs), std::move(outer), std::move(placements));
}

int digon_face(const PlaneMultigraph& pm, int component, Vertex u, Vertex v) {
    const Multigraph& g = pm.graph();
    for (const FaceWalk& f : pm.component_faces(component)) {
        if (f.degree() != 2) {
            continue;
        }
        const Edge& e = g.edge(dart_edge(f.darts[0]));
        if (e.lo() == std::min(u, v) && e.hi() == std::max(u, v)) {
            return f.id;
        }
    }
    throw std::logic_error("no digon between " + std::to_string(u) + " and " + std::to_string(v));
}

PlaneMultigraph doubled_triangle() {
    Multigraph g(3, {{0, 1}, {0, 2}, {1, 2}});
    RotationSystem rs{{{0, 2}, {1, 4}, {3, 5}}};
    const PlaneMultigraph t = doubled(PlaneMultigraph(std::move(g), std::move(rs), {0}, {}));
    return with_outer_face(t, 0, digon_face(t, 0, 0, 1));
}

namespace {

void require_k(int k) {
    if (k < 1) {
        throw std::invalid_argument("family index k must be at least 1, got " + std::to_string(k));
    }
}

PlaneMultigraph copies(const PlaneMultigraph& part, int k) {
    const std::vector<PlaneMultigraph> parts(k, part);
    return disjoint_union(parts);
}

PlaneMultigraph build_Nk(int k) {
    if (k == 1) {
        return embedded_k4();
    }
    const PlaneMultigraph t = doubled_triangle();
    const PlaneMultigraph parts[] = {t, embedded_k4(), build_Nk(k - 1)};
    PlaneMultigraph pm = disjoint_union(parts);
    // Components: 0 the triangle, 1 the K4, 2 the root of the previous level.
    pm = with_placement(pm, 1, Placement::in(0, digon_face(pm, 0, 0, 2)));
    return with_placement(pm, 2, Placement::in(0, digon_face(pm, 0, 1, 2)));
}

} // namespace

FamilyInstance gen_k4_copies(int k) {
    require_k(k);
    return {copies(embedded_k4(), k), Family::K4Copies, k, 4 * k, 6 * k, 0, 2 * k, false};
}

FamilyInstance gen_doubled_k4_copies(int k) {
    require_k(k);
    return {copies(doubled(embedded_k4()), k), Family::DoubledK4Copies, k, 4 * k, 12 * k, 6 * k, k, true};
}

FamilyInstance gen_Nk(int k) {
    require_k(k);
    return {build_Nk(k), Family::NK, k, 7 * k - 3, 12 * k - 6, 3 * (k - 1), 3 * k - 1, k >= 2};
}

FamilyInstance gen_Mk(int k) {
    require_k(k);
    const PlaneMultigraph parts[] = {build_Nk(k), embedded_k4()};
    return {disjoint_union(parts), Family::MK, k, 7 * k + 1, 12 * k, 3 * (k - 1), 3 * k + 1, false};
}

FamilyInstance generate(Family family, int k) {
    switch (family) {
    case Family::K4Copies:
        return gen_k4_copies(k);
    case Family::DoubledK4Copies:
        return gen_doubled_k4_copies(k);
    case Family::NK:
        return gen_Nk(k);
    case Family::MK:
        return gen_Mk(k);
    }
    throw std::invalid_argument("unknown family");
}

namespace {

int dart_at(const Edge& e, int id, Vertex v) { return 2 * id + (v == e.hi() ? 1 : 0); }

} // namespace

PlaneMultigraph random_plane_multigraph(std::uint64_t seed, const RandomPlaneOptions& options) {
    if (options.components < 0 || options.min_vertices < 1 || options.max_vertices < options.min_vertices ||
        options.isolated < 0) {
        throw std::invalid_argument("bad random plane multigraph options");
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<Vertex>> comps;
    auto add_edge = [&](Vertex a, int pos_a, Vertex b, int pos_b) {
        const int id = static_cast<int>(edges.size());
        edges.push_back({a, b});
        const Edge& e = edges.back();
        rot[a].insert(rot[a].begin() + pos_a, dart_at(e, id, a));
        rot[b].insert(rot[b].begin() + pos_b, dart_at(e, id, b));
    };

    for (int c = 0; c < options.components; ++c) {
        const int size = std::max(2, uniform(options.min_vertices, options.max_vertices));
        const Vertex base = static_cast<Vertex>(rot.size());
        rot.resize(rot.size() + size);
        std::vector<Vertex> verts{base};
        for (int i = 1; i < size; ++i) {
            const Vertex w = base + i;
            const Vertex x = verts[uniform(0, static_cast<int>(verts.size()) - 1)];
            add_edge(x, uniform(0, static_cast<int>(rot[x].size())), w, 0);
            verts.push_back(w);
        }
        for (int t = 0; t < options.extra_edges; ++t) {
            // Pick a face of this piece and join two corners on it. Earlier
            // pieces are traced too, since dart ids must stay dense.
            const auto faces = trace_faces(RotationSystem{rot});
            std::vector<const FaceWalk*> candidates;
            for (const FaceWalk& f : faces) {
                if (f.degree() > 0 && edges[dart_edge(f.darts.front())].u >= base) {
                    candidates.push_back(&f);
                }
            }
            const FaceWalk& f = *candidates[uniform(0, static_cast<int>(candidates.size()) - 1)];
            const int i = uniform(0, f.degree() - 1);
            const int j = uniform(0, f.degree() - 1);
            // Corner after dart d: between twin(d) and its successor at head(d).
            const int di = f.darts[i];
            const int dj = f.darts[j];
            const Edge& ei = edges[dart_edge(di)];
            const Edge& ej = edges[dart_edge(dj)];
            const Vertex a = (di & 1) ? ei.lo() : ei.hi();
            const Vertex b = (dj & 1) ? ej.lo() : ej.hi();
            if (a == b || i == j) {
                continue;
            }
            const auto pos = [&](Vertex v, int d) {
                const auto it = std::find(rot[v].begin(), rot[v].end(), twin(d));
                return static_cast<int>(it - rot[v].begin()) + 1;
            };
            const int pa = pos(a, di);
            const int pb = pos(b, dj);
            add_edge(a, pa, b, pb);
        }
        comps.push_back(verts);
    }
    const int n = static_cast<int>(rot.size()) + options.isolated;
    rot.resize(n);
    Multigraph g(n, edges);
    RotationSystem rs{rot};
    const PlaneMultigraph scaffold(g, rs, std::vector<int>(comps.size(), 0), {});
    const int P = scaffold.component_count();
    std::vector<int> outer(P);
    std::vector<Placement> placements(P, Placement::unbounded());
    auto random_spot = [&](int limit) {
        const int host = uniform(-1, limit - 1);
        if (host < 0) {
            return Placement::unbounded();
        }
        const int faces = static_cast<int>(scaffold.component_faces(host).size());
        return Placement::in(host, uniform(0, faces - 1));
    };
    for (int c = 0; c < P; ++c) {
        outer[c] = uniform(0, static_cast<int>(scaffold.component_faces(c).size()) - 1);
        placements[c] = random_spot(c);
    }
    std::vector<Placement> isolated(n, Placement::unbounded());
    for (Vertex v = n - options.isolated; v < n; ++v) {
        isolated[v] = random_spot(P);
    }
    return PlaneMultigraph(std::move(g), std::move(rs), std::move(outer), std::move(placements), std::move(isolated));
}

} // namespace ifl
