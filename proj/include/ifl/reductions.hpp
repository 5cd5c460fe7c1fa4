#pragma once

#include "ifl/embedding.hpp"
#include "ifl/multigraph.hpp"
#include "ifl/rational.hpp"
#include "ifl/solvers.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ifl {

enum class ReductionKind { Dedup, Double, Subdivide, Normalize };

std::string to_string(ReductionKind kind);
ReductionKind parse_reduction_kind(const std::string& text);

/// One transformation together with what is needed to move certificates
/// across it.
struct ReductionRecord {
    Multigraph input;
    Multigraph output;
    std::vector<int> vertex_map; // input vertex -> output vertex, -1 if gone
    ReductionKind kind = ReductionKind::Dedup;
    int k = 0; // parallel pairs of the input
    std::vector<Vertex> added_vertices; // subdivide: one per parallel pair
    std::vector<std::pair<Vertex, Vertex>> subdivided; // (u, v) split by added_vertices[i]
};

/// One edge per adjacent pair, in order of first occurrence.
ReductionRecord dedup(const Multigraph& m);

/// Every edge twice, copies adjacent. Throws GraphError on a non-simple input.
ReductionRecord double_edges(const Multigraph& g);

/// Each parallel pair u < v (sorted) keeps its two lowest edges; the lower
/// one becomes u-w-v with w = n + i. Simple output on n + k vertices.
ReductionRecord subdivide_parallel(const Multigraph& m);

/// f plus every subdivision vertex. Throws GraphError unless f is valid on
/// rec.input.
ForestCertificate lift_forest_subdivision(const ReductionRecord& rec, const ForestCertificate& f);

/// Drops subdivision vertices, then the higher endpoint of every pair whose
/// endpoints both survive. Throws GraphError unless f is valid on rec.output.
ForestCertificate project_forest_subdivision(const ReductionRecord& rec, const ForestCertificate& f);

/// f is a forest of dedup(m); drops the higher endpoint of each parallel pair
/// still fully present. Throws GraphError on an invalid f.
ForestCertificate repair_forest_by_removal(const Multigraph& m, const ForestCertificate& f);

struct ColorPairChoice {
    int i = 0;
    int j = 0;
    int size_i = 0;
    int size_j = 0;
    int k_ij = 0;
};

struct ColoringExtraction {
    ForestCertificate forest;
    ColorPairChoice chosen;
    std::vector<std::vector<int>> k_pairs; // k_ij for i < j, symmetric
};

/// Best colour pair by |C_i| + |C_j| - k_ij (lexicographic ties), minus the
/// higher endpoint of each parallel pair inside it. Throws GraphError on an
/// invalid colouring of dedup(m) and std::invalid_argument when count < 2.
ColoringExtraction extract_forest_from_coloring(const Multigraph& m, const AcyclicColoring& col);

/// Removes the second fan edge of every pair of multiplicity >= 3 until all
/// multiplicities are at most 2. The fan at the lower endpoint starts just
/// after the region holding the unbounded face. Throws PreconditionError
/// (HasTwoFace) on a 2-face.
PlaneMultigraph normalize_multiplicity(const PlaneMultigraph& pm);

/// A lower bound a(G) >= f(n) for simple planar graphs.
struct SimpleBound {
    std::string name;
    std::function<Rational(int)> f;
    bool conditional = false;
};

/// The n/4, 2n/5 and conjectural n/2 bounds.
std::vector<SimpleBound> standard_simple_bounds();

/// f(n + k) - k.
Rational transfer_bound(const SimpleBound& bound, int n, int k);

} // namespace ifl
