#pragma once

#include "ifl/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ifl {

class EmbeddingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dart 2e is edge e leaving its lower endpoint, dart 2e+1 leaves the higher one.
inline int twin(int dart) { return dart ^ 1; }
inline int dart_edge(int dart) { return dart >> 1; }
inline Vertex dart_tail(const Multigraph& g, int dart) {
    const Edge& e = g.edge(dart_edge(dart));
    return (dart & 1) ? e.hi() : e.lo();
}
inline Vertex dart_head(const Multigraph& g, int dart) { return dart_tail(g, twin(dart)); }

/// Cyclic order of outgoing darts around every vertex.
struct RotationSystem {
    std::vector<std::vector<int>> order;

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Throws EmbeddingError unless every dart of g appears exactly once, in the
/// rotation of its tail.
void validate_rotation(const Multigraph& g, const RotationSystem& rs);

struct FaceWalk {
    int id = 0;
    std::vector<int> darts; // cyclic; next(d) = successor of twin(d) at its tail

    int degree() const { return static_cast<int>(darts.size()); }
};

/// Face boundary walks of a rotation system, discovered in order of smallest
/// dart. A rotation system without darts has one face of degree 0.
std::vector<FaceWalk> trace_faces(const RotationSystem& rs);

/// Where a component (or an isolated vertex) sits: in the unbounded region or
/// inside face `face` of component `component`.
struct Placement {
    int component = -1;
    int face = -1;

    static Placement unbounded() { return {}; }
    static Placement in(int component, int face) { return {component, face}; }
    bool is_unbounded() const { return component < 0; }

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// A face of the whole plane multigraph: one face of each participating
/// component, glued through placements.
struct GlobalFace {
    int id = 0;
    bool unbounded = false;
    std::vector<std::pair<int, int>> parts; // (component, component face index)
    std::vector<int> darts;
    int degree = 0;
};

/// Multigraph with a planar rotation system per edge component plus a
/// placement forest. Components are the connected components that carry at
/// least one edge, ordered by smallest vertex; isolated vertices are placed
/// separately and never contribute to face degrees.
class PlaneMultigraph {
public:
    PlaneMultigraph() : PlaneMultigraph(Multigraph(), RotationSystem{}, {}, {}) {}

    /// `isolated` is indexed by vertex (entries of non-isolated vertices are
    /// ignored); an empty vector places every isolated vertex unbounded.
    /// Throws EmbeddingError on a malformed rotation, a non-planar component,
    /// a bad face reference or a placement cycle.
    PlaneMultigraph(Multigraph g, RotationSystem rs, std::vector<int> outer_faces, std::vector<Placement> placements,
                    std::vector<Placement> isolated = {});

    const Multigraph& graph() const { return graph_; }
    const RotationSystem& rotation() const { return rotation_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<Vertex>& component_vertices(int c) const { return components_.at(c).vertices; }
    const std::vector<int>& component_edges(int c) const { return components_.at(c).edges; }
    const std::vector<FaceWalk>& component_faces(int c) const { return components_.at(c).faces; }
    /// Edge component of v, or -1 for an isolated vertex.
    int component_of(Vertex v) const { return vertex_component_.at(v); }
    int outer_face(int c) const { return outer_faces_.at(c); }
    const std::vector<int>& outer_faces() const { return outer_faces_; }
    const Placement& placement(int c) const { return placements_.at(c); }
    const std::vector<Placement>& placements() const { return placements_; }
    Placement isolated_placement(Vertex v) const;
    const std::vector<Placement>& isolated_placements() const { return isolated_; }

    const std::vector<GlobalFace>& faces() const { return global_faces_; }
    int face_of_dart(int dart) const { return dart_face_.at(dart); }
    int global_face(int component, int face) const;
    /// Connected components including isolated vertices (p).
    int connected_component_count() const { return connected_components_; }

private:
    struct Component {
        std::vector<Vertex> vertices;
        std::vector<int> edges;
        std::vector<FaceWalk> faces;
        int first_node = 0;
    };

    void merge();

    Multigraph graph_;
    RotationSystem rotation_;
    std::vector<Component> components_;
    std::vector<int> vertex_component_;
    std::vector<int> outer_faces_;
    std::vector<Placement> placements_;
    std::vector<Placement> isolated_;
    std::vector<GlobalFace> global_faces_;
    std::vector<int> node_face_;
    std::vector<int> dart_face_;
    int connected_components_ = 0;
};

/// Global faces: each placed component's outer face is glued to its host face
/// (or to the unbounded region). Global face 0 is the unbounded one.
std::vector<GlobalFace> merge_faces(const PlaneMultigraph& pm);

/// 2m equals the sum of global face degrees.
bool handshake_check(const PlaneMultigraph& pm);

/// n - m + l = 1 + p over global faces and all connected components.
bool euler_check(const PlaneMultigraph& pm);

std::vector<GlobalFace> two_faces(const PlaneMultigraph& pm);

/// Global faces reachable from `start` in the dual without crossing any edge
/// of `blocked`, as a membership mask over face ids.
std::vector<char> dual_reachable(const PlaneMultigraph& pm, int start, std::span<const int> blocked);

class PreconditionError : public std::invalid_argument {
public:
    enum class Reason { TooFewVertices, HasTwoFace, Other };

    PreconditionError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// m <= 3n - 6. Requires n >= 3 and no 2-faces; throws PreconditionError
/// telling the two apart otherwise.
bool edge_bound_check(const PlaneMultigraph& pm);

/// Side-by-side union: every component of every part keeps its placement
/// relative to its own part; the parts' roots all go to the unbounded region.
PlaneMultigraph disjoint_union(std::span<const PlaneMultigraph> parts);

PlaneMultigraph with_placement(const PlaneMultigraph& pm, int component, Placement where);
PlaneMultigraph with_outer_face(const PlaneMultigraph& pm, int component, int face);

/// Deletes edge e and keeps every face reference pointing at the face that
/// absorbed it. Edge ids above e shift down by one. Throws if e is a bridge.
PlaneMultigraph remove_edge(const PlaneMultigraph& pm, int e);

// ---------------------------------------------------------------------------
// Exhaustive search for an embedding without 2-faces.

struct EmbeddingSearchOptions {
    std::uint64_t budget = 10'000'000; // search nodes that survive pruning
};

struct EmbeddingSearchResult {
    enum class Status { Found, None, Exhausted };

    Status status = Status::None;
    std::optional<PlaneMultigraph> witness;
    std::uint64_t examined = 0;
};

/// Enumerates rotation systems per component (first vertex fixed up to
/// reflection), keeps the fewest 2-faces per component and then decides
/// whether placements can glue every remaining 2-face to another component.
EmbeddingSearchResult search_2face_free_embedding(const Multigraph& g, const EmbeddingSearchOptions& options = {});

/// Any planar embedding, 2-faces allowed. None means some component is not
/// planar.
EmbeddingSearchResult search_plane_embedding(const Multigraph& g, const EmbeddingSearchOptions& options = {});

} // namespace ifl
