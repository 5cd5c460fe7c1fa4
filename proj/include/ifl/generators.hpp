#pragma once

#include "ifl/embedding.hpp"

#include <cstdint>
#include <string>

namespace ifl {

enum class Family { K4Copies, DoubledK4Copies, NK, MK };

std::string to_string(Family family);
/// Accepts "k4", "dk4", "nk", "mk".
Family parse_family(const std::string& text);

struct FamilyInstance {
    PlaneMultigraph pm;
    Family family = Family::K4Copies;
    int k = 0;
    int expected_n = 0;
    int expected_m = 0;
    int expected_pairs = 0;
    int expected_a = 0;
    bool has_two_faces = false;
};

/// The embedded K4 with edges 01 02 03 12 13 23; all four faces are triangles.
PlaneMultigraph embedded_k4();

/// Every edge followed by its copy; each pair bounds a new 2-face.
PlaneMultigraph doubled(const PlaneMultigraph& pm);

/// Triangle 0 1 2 with every edge doubled; the outer face is the 0-1 digon.
PlaneMultigraph doubled_triangle();

/// Local index of the digon face of component c bounded by the two u-v edges.
int digon_face(const PlaneMultigraph& pm, int component, Vertex u, Vertex v);

/// All throw std::invalid_argument when k < 1.
FamilyInstance gen_k4_copies(int k);
FamilyInstance gen_doubled_k4_copies(int k);
FamilyInstance gen_Nk(int k);
FamilyInstance gen_Mk(int k);
FamilyInstance generate(Family family, int k);

struct RandomPlaneOptions {
    int components = 1;
    int min_vertices = 1; // per component
    int max_vertices = 6;
    int extra_edges = 4; // attempted per component, on top of a spanning tree
    int isolated = 0;
};

/// Random rotation systems built by face-splitting edge insertion, with
/// random outer faces and placements. Parallel edges appear freely.
PlaneMultigraph random_plane_multigraph(std::uint64_t seed, const RandomPlaneOptions& options = {});

} // namespace ifl
