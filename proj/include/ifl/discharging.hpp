#pragma once

#include "ifl/embedding.hpp"
#include "ifl/rational.hpp"
#include "ifl/solvers.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

/// A rule found no eligible donor, or a donor would give twice. Either means
/// the classification is wrong, never the input.
class DischargingError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The two edges of a parallel pair of multiplicity exactly 2. The interior is
/// the side of the curve that does not hold global face 0.
struct TwoCycle {
    int id = 0;
    Vertex u = 0; // u < v
    Vertex v = 0;
    int e1 = 0; // e1 < e2
    int e2 = 0;
    std::vector<int> interior_faces; // sorted global face ids
    std::vector<int> exterior_faces;
    std::vector<int> interior_edges; // sorted; both sides in the interior
};

/// One entry per parallel pair, sorted by (u, v). Throws GraphError when a
/// pair has multiplicity >= 3 (normalize_multiplicity removes those).
std::vector<TwoCycle> find_two_cycles(const PlaneMultigraph& pm);

enum class CycleCategory { EB, ENB, NENL, NEL1, NEL2 };

std::string to_string(CycleCategory category);

/// parent[d] = c iff d is immediately inside c; -1 for roots. Exclusive
/// interiors subtract the closed interiors of the cycles inside c only.
struct NestingForest {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<CycleCategory> category;
    std::vector<std::vector<int>> exclusive_faces;
    std::vector<std::vector<int>> exclusive_edges;
};

/// Throws PreconditionError (HasTwoFace) on a 2-face.
NestingForest build_nesting_forest(const PlaneMultigraph& pm, const std::vector<TwoCycle>& cycles);

struct WeightedRootedForest {
    std::vector<int> parent; // -1 for roots
    std::vector<int> weight; // leaf 2, unary 1, branching 0 or 1
};

struct ForestWeight {
    int total = 0;
    bool ok = false; // total >= n + 1
};

/// Throws std::invalid_argument on an empty forest, a parent cycle or an
/// inadmissible weight.
ForestWeight forest_weight_check(const WeightedRootedForest& forest);

struct ChargeSnapshot {
    std::vector<Rational> faces; // by global face id
    std::vector<Rational> edges;
    std::vector<Rational> cycles;
    Rational pot{0};

    Rational total() const;
};

struct Transfer {
    std::string rule;
    std::string donor; // "face 3", "edge 7", "cycle 0", "pot"
    std::string receiver;
    Rational amount{0};
};

struct ChargeLedger {
    int n = 0;
    int m = 0;
    int k = 0;
    int p = 0;
    int faces = 0;
    std::vector<TwoCycle> cycles;
    NestingForest nesting;
    ChargeSnapshot initial;
    ChargeSnapshot after_stage1;
    ChargeSnapshot final;
    std::vector<Transfer> transfers;

    Rational expected_total() const { return Rational(3 * n - 3 * k - 4 - 3 * p); }
    Rational stage1_cycle_charge() const;
    bool conserved() const;
    bool identity_holds() const;
    bool final_nonnegative() const; // faces, edges and pot
};

/// Throws PreconditionError on a 2-face, on a pair of multiplicity other than
/// 2, or when m = 0 or k = 0.
ChargeLedger run_discharging(const PlaneMultigraph& pm);

/// One element per line; charges as exact fractions.
void write_audit(std::ostream& out, const ChargeLedger& ledger);

struct RefuterReport {
    int n = 0;
    int k = 0;
    int p = 0;
    std::optional<ChargeLedger> ledger; // empty when k = 0
    int a = 0;
    Rational bound{0};        // 3n/10 + 7/30
    Rational coloring_bound{0}; // 2n/5 - k/10
    bool bound_holds = false;
    /// Ledger total >= 0 gives 3n - 3k - 7 >= 3(p - 1) >= 0, which lifts the
    /// 2n/5 - k/10 bound above 3n/10 + 7/30.
    bool chain_holds = false;
};

/// Throws like run_discharging, except that k = 0 only skips the ledger.
RefuterReport counterexample_refuter(const PlaneMultigraph& pm, const SolverOptions& options = {});

} // namespace ifl
