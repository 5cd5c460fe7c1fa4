#include "ifl/discharging.hpp"
#include "ifl/generators.hpp"
#include "ifl/reductions.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace ifl;

namespace {

// Digon 0-1 with the paths 0-2-1 and 0-3-1 on opposite sides, so no face has
// degree 2.
PlaneMultigraph digon_with_paths() {
    const Multigraph g(5, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    const auto r = search_2face_free_embedding(g);
    REQUIRE(r.status == EmbeddingSearchResult::Status::Found);
    return *r.witness;
}

// Digon 0-1 around the pendant edge 0-2, with the path 0-3-1 outside.
// Every rotation and outer face is tried; the one with the pendant inside is
// kept.
PlaneMultigraph digon_with_pendant() {
    const Multigraph g(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 3}});
    std::vector<int> at0 = {0, 2, 4, 6};
    do {
        std::vector<int> at1 = {1, 3, 8};
        do {
            const RotationSystem rs{{at0, at1, {5}, {7, 9}}};
            for (int outer = 0; outer < 3; ++outer) {
                try {
                    const PlaneMultigraph pm(g, rs, {outer}, {Placement::unbounded()});
                    if (two_faces(pm).empty() && find_two_cycles(pm)[0].interior_edges == std::vector<int>{2}) {
                        return pm;
                    }
                } catch (const EmbeddingError&) {
                }
            }
        } while (std::next_permutation(at1.begin(), at1.end()));
    } while (std::next_permutation(at0.begin(), at0.end()));
    FAIL("no embedding with the pendant edge inside");
    return PlaneMultigraph();
}

} // namespace

TEST_CASE("two-cycles of M2") {
    const PlaneMultigraph m2 = gen_Mk(2).pm;
    const auto cycles = find_two_cycles(m2);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].u == 0);
    CHECK(cycles[0].v == 1);
    CHECK(cycles[1].v == 2);
    CHECK(cycles[2].u == 1);
    for (const TwoCycle& c : cycles) {
        CHECK(c.e1 < c.e2);
        CHECK(std::find(c.interior_faces.begin(), c.interior_faces.end(), 0) == c.interior_faces.end());
        CHECK(std::find(c.exterior_faces.begin(), c.exterior_faces.end(), 0) != c.exterior_faces.end());
    }
    CHECK(find_two_cycles(embedded_k4()).empty());
}

TEST_CASE("multiplicity three is rejected with a hint") {
    const Multigraph g(2, {{0, 1}, {0, 1}, {0, 1}});
    const auto r = search_plane_embedding(g);
    REQUIRE(r.witness);
    CHECK_THROWS_AS(find_two_cycles(*r.witness), GraphError);
}

TEST_CASE("nesting and categories on M2") {
    const PlaneMultigraph m2 = gen_Mk(2).pm;
    const auto cycles = find_two_cycles(m2);
    const NestingForest nf = build_nesting_forest(m2, cycles);
    CHECK(nf.parent == std::vector<int>{-1, 0, 0});
    CHECK(nf.children[0] == std::vector<int>{1, 2});
    CHECK(nf.category[0] == CycleCategory::EB);
    CHECK(nf.category[1] == CycleCategory::NEL2);
    CHECK(nf.category[2] == CycleCategory::NEL2);
    CHECK(nf.exclusive_edges[0].empty());
    CHECK(nf.exclusive_edges[1].size() == 6);

    // Exclusive interiors never share a face.
    std::set<int> seen;
    for (const auto& faces : nf.exclusive_faces) {
        for (int f : faces) {
            CHECK(seen.insert(f).second);
        }
    }
}

TEST_CASE("nesting rejects 2-faces") {
    const PlaneMultigraph t = doubled_triangle();
    CHECK_THROWS_AS(build_nesting_forest(t, find_two_cycles(t)), PreconditionError);
}

TEST_CASE("a 2-cycle around a path is NE-L2") {
    const PlaneMultigraph pm = digon_with_paths();
    const auto cycles = find_two_cycles(pm);
    REQUIRE(cycles.size() == 1);
    const NestingForest nf = build_nesting_forest(pm, cycles);
    // The interior holds either the 0-2-1 path or the 0-3-1 path.
    CHECK(cycles[0].interior_edges.size() == 2);
    CHECK(nf.category[0] == CycleCategory::NEL2);
}

TEST_CASE("a 2-cycle around one pendant edge is NE-L1") {
    const PlaneMultigraph pm = digon_with_pendant();
    const auto cycles = find_two_cycles(pm);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].interior_edges == std::vector<int>{2});
    CHECK(cycles[0].interior_faces.size() == 1);
    CHECK(pm.faces()[cycles[0].interior_faces[0]].degree == 4);
    const NestingForest nf = build_nesting_forest(pm, cycles);
    CHECK(nf.category[0] == CycleCategory::NEL1);
    const ChargeLedger l = run_discharging(pm);
    CHECK(l.identity_holds());
    CHECK(l.final_nonnegative());
}

TEST_CASE("category names") {
    CHECK(to_string(CycleCategory::EB) == "E-B");
    CHECK(to_string(CycleCategory::ENB) == "E-NB");
    CHECK(to_string(CycleCategory::NENL) == "NE-NL");
    CHECK(to_string(CycleCategory::NEL1) == "NE-L1");
    CHECK(to_string(CycleCategory::NEL2) == "NE-L2");
}

TEST_CASE("forest weights") {
    // Path 0 <- 1 <- 2 <- 3 rooted at 0: one leaf.
    const ForestWeight path = forest_weight_check({{-1, 0, 1, 2}, {1, 1, 1, 2}});
    CHECK(path.total == 5);
    CHECK(path.ok);
    const ForestWeight single = forest_weight_check({{-1}, {2}});
    CHECK(single.total == 2);
    CHECK(single.ok);
    const ForestWeight cherry = forest_weight_check({{-1, 0, 0}, {0, 2, 2}});
    CHECK(cherry.total == 4);
    CHECK(cherry.ok);
    const ForestWeight two_roots = forest_weight_check({{-1, -1}, {2, 2}});
    CHECK(two_roots.total == 4);

    CHECK_THROWS_AS(forest_weight_check({{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(forest_weight_check({{-1, 0}, {2, 2}}), std::invalid_argument);  // unary root needs 1
    CHECK_THROWS_AS(forest_weight_check({{-1, 0}, {1, 1}}), std::invalid_argument);  // leaf needs 2
    CHECK_THROWS_AS(forest_weight_check({{-1, 0, 0}, {2, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(forest_weight_check({{1, 0}, {1, 1}}), std::invalid_argument);   // cycle
    CHECK_THROWS_AS(forest_weight_check({{-1, 5}, {1, 2}}), std::invalid_argument);   // bad parent
}

TEST_CASE("ledger on M2") {
    const FamilyInstance inst = gen_Mk(2);
    const ChargeLedger l = run_discharging(inst.pm);
    CHECK(l.n == 15);
    CHECK(l.k == 3);
    CHECK(l.p == 4);
    CHECK(l.initial.total() == Rational(20));
    CHECK(l.expected_total() == Rational(20));
    CHECK(l.identity_holds());
    CHECK(l.conserved());
    CHECK(l.final_nonnegative());
    CHECK(l.stage1_cycle_charge() >= Rational(l.k + 1));
    CHECK(l.final.pot == l.stage1_cycle_charge() - Rational(l.k + 1));
    CHECK(l.after_stage1.total() == l.initial.total());
    CHECK(l.final.total() == l.initial.total());
    for (const Rational& c : l.final.cycles) {
        CHECK(c == Rational(0));
    }

    // Parallel edges start at -(k+1)/(2k).
    const Rational start = -Rational(l.k + 1, 2 * l.k);
    for (const TwoCycle& c : l.cycles) {
        CHECK(l.initial.edges[c.e1] == start);
        CHECK(l.initial.edges[c.e2] == start);
    }

    std::set<std::string> donors;
    for (const Transfer& t : l.transfers) {
        if (t.rule != "R5" && t.rule != "R6") {
            CHECK(donors.insert(t.donor).second);
        }
    }
}

TEST_CASE("ledger identity on M3 and single-digon instances") {
    for (const PlaneMultigraph& pm : {gen_Mk(3).pm, digon_with_paths(), digon_with_pendant()}) {
        const ChargeLedger l = run_discharging(pm);
        CHECK(l.initial.total() == l.expected_total());
        CHECK(l.identity_holds());
        CHECK(l.conserved());
        CHECK(l.final_nonnegative());
    }
}

TEST_CASE("discharging preconditions") {
    CHECK_THROWS_AS(run_discharging(embedded_k4()), PreconditionError);  // k = 0
    CHECK_THROWS_AS(run_discharging(doubled_triangle()), PreconditionError);
    CHECK_THROWS_AS(run_discharging(PlaneMultigraph()), PreconditionError);
}

TEST_CASE("audit lists every element") {
    const ChargeLedger l = run_discharging(gen_Mk(2).pm);
    std::ostringstream out;
    write_audit(out, l);
    const std::string text = out.str();
    CHECK(text.find("two-cycle 0 vertices 0 1") != std::string::npos);
    CHECK(text.find("category E-B") != std::string::npos);
    CHECK(text.find("conserved ok") != std::string::npos);
}

TEST_CASE("refuter on M_k and K4") {
    for (int k = 1; k <= 3; ++k) {
        const RefuterReport r = counterexample_refuter(gen_Mk(k).pm);
        CHECK(r.a == 3 * k + 1);
        CHECK(r.bound_holds);
        CHECK(r.ledger.has_value() == (k >= 2));
        CHECK(r.chain_holds);
    }
    const RefuterReport k4 = counterexample_refuter(embedded_k4());
    CHECK(k4.a == 2);
    CHECK(k4.bound == Rational(43, 30));
    CHECK(k4.bound_holds);
}
