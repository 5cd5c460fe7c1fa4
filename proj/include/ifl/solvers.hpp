#pragma once

#include "ifl/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

enum class ForestKind { Forest, LinearForest, IndependentSet };
enum class Provenance { Oracle, BranchAndBound, Constructed };

std::string to_string(ForestKind kind);
std::string to_string(Provenance provenance);
/// Accepts "forest", "linear", "linear-forest", "independent", "independent-set".
ForestKind parse_forest_kind(const std::string& text);

/// A vertex set claimed to induce a forest (or linear forest, or independent
/// set). Vertices are kept sorted.
struct ForestCertificate {
    std::vector<Vertex> vertices;
    ForestKind kind = ForestKind::Forest;
    Provenance provenance = Provenance::Constructed;

    int value() const { return static_cast<int>(vertices.size()); }
};

/// Does g[s] have the shape `kind` asks for? Parallel pairs count as 2-cycles.
bool induces(const Multigraph& g, std::span<const Vertex> s, ForestKind kind);

bool certificate_valid(const Multigraph& g, const ForestCertificate& cert);

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    std::uint64_t budget = 100'000'000; // search nodes
};

/// Branch and bound per connected component; the lexicographically least
/// maximum set is returned. Throws SearchBudgetExceeded.
ForestCertificate max_induced_forest(const Multigraph& g, const SolverOptions& options = {});
ForestCertificate max_independent_set(const Multigraph& g, const SolverOptions& options = {});
ForestCertificate max_induced_linear_forest(const Multigraph& g, const SolverOptions& options = {});
ForestCertificate solve(const Multigraph& g, ForestKind kind, const SolverOptions& options = {});

/// Checks every subset; throws GraphError above 24 vertices. Same tie-break
/// as the branch and bound.
ForestCertificate brute_force_max(const Multigraph& g, ForestKind kind);

// ---------------------------------------------------------------------------
// Acyclic colourings. Parallel edges behave like a single edge here.

struct AcyclicColoring {
    std::vector<int> colors; // vertex -> colour in [0, count), -1 unassigned
    int count = 0;
};

/// Proper, and every two colour classes induce a forest of the underlying
/// simple graph. Throws GraphError on an unassigned or out-of-range colour.
bool verify_acyclic_coloring(const Multigraph& g, const AcyclicColoring& coloring);

struct ColoringSearchOptions {
    std::uint64_t budget = 100'000'000; // node visits
};

struct ColoringSearchResult {
    enum class Status { Found, None, Exhausted };

    Status status = Status::None;
    std::optional<AcyclicColoring> coloring;
    std::uint64_t visited = 0;
};

/// Backtracking in degeneracy order with colour-symmetry breaking. Throws
/// std::invalid_argument when colors <= 0.
ColoringSearchResult find_acyclic_coloring(const Multigraph& g, int colors, const ColoringSearchOptions& options = {});

} // namespace ifl
