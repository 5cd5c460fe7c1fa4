#include "ifl/generators.hpp"
#include "ifl/solvers.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace ifl;

namespace {

void check_counts(const FamilyInstance& inst) {
    const Multigraph& g = inst.pm.graph();
    CHECK(g.vertex_count() == inst.expected_n);
    CHECK(g.edge_count() == inst.expected_m);
    CHECK(parallel_pairs(g).k() == inst.expected_pairs);
    CHECK(two_faces(inst.pm).empty() == !inst.has_two_faces);
    CHECK(euler_check(inst.pm));
    CHECK(handshake_check(inst.pm));
}

} // namespace

TEST_CASE("family names") {
    for (Family f : {Family::K4Copies, Family::DoubledK4Copies, Family::NK, Family::MK}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_THROWS(parse_family("k5"));
}

TEST_CASE("k below one is rejected") {
    CHECK_THROWS_AS(gen_k4_copies(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_doubled_k4_copies(-1), std::invalid_argument);
    CHECK_THROWS_AS(gen_Nk(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_Mk(0), std::invalid_argument);
}

TEST_CASE("K4 copies") {
    for (int k = 1; k <= 4; ++k) {
        const FamilyInstance inst = gen_k4_copies(k);
        CHECK(inst.expected_n == 4 * k);
        CHECK(inst.expected_m == 6 * k);
        CHECK(inst.expected_a == 2 * k);
        check_counts(inst);
        CHECK(max_induced_forest(inst.pm.graph()).value() == inst.expected_a);
    }
}

TEST_CASE("doubled K4 copies") {
    for (int k = 1; k <= 4; ++k) {
        const FamilyInstance inst = gen_doubled_k4_copies(k);
        CHECK(inst.expected_n == 4 * k);
        CHECK(inst.expected_m == 12 * k);
        CHECK(inst.has_two_faces);
        check_counts(inst);
        CHECK(max_induced_forest(inst.pm.graph()).value() == k);
        CHECK(inst.expected_m > 3 * inst.expected_n - 6);
    }
}

TEST_CASE("N_k") {
    const FamilyInstance n1 = gen_Nk(1);
    CHECK(n1.pm.graph().edges() == embedded_k4().graph().edges());
    for (const GlobalFace& f : n1.pm.faces()) {
        CHECK(f.degree == 3);
    }
    for (int k = 1; k <= 3; ++k) {
        const FamilyInstance inst = gen_Nk(k);
        CHECK(inst.expected_n == 7 * k - 3);
        CHECK(inst.expected_a == 3 * k - 1);
        check_counts(inst);
        CHECK(max_induced_forest(inst.pm.graph()).value() == inst.expected_a);
        if (k >= 2) {
            CHECK(inst.pm.faces()[0].degree == 2);
        }
    }
}

TEST_CASE("M_k") {
    for (int k = 1; k <= 3; ++k) {
        const FamilyInstance inst = gen_Mk(k);
        CHECK(inst.expected_n == 7 * k + 1);
        CHECK(inst.expected_a == 3 * k + 1);
        CHECK_FALSE(inst.has_two_faces);
        check_counts(inst);
        CHECK(edge_bound_check(inst.pm));
        CHECK(max_induced_forest(inst.pm.graph()).value() == inst.expected_a);
        // 7a = 3n + 4.
        CHECK(7 * inst.expected_a == 3 * inst.expected_n + 4);

        std::map<int, int> sizes;
        for (const auto& comp : connected_components(inst.pm.graph())) {
            ++sizes[static_cast<int>(comp.size())];
        }
        CHECK(sizes[4] == k + 1);
        CHECK(sizes[3] == k - 1);
    }
}

TEST_CASE("generate dispatches on the family") {
    CHECK(generate(Family::MK, 2).expected_n == 15);
    CHECK(generate(Family::DoubledK4Copies, 1).expected_a == 1);
}

TEST_CASE("random plane multigraphs are deterministic per seed") {
    RandomPlaneOptions opts;
    opts.components = 2;
    opts.isolated = 2;
    const PlaneMultigraph a = random_plane_multigraph(42, opts);
    const PlaneMultigraph b = random_plane_multigraph(42, opts);
    CHECK(a.graph() == b.graph());
    CHECK(a.rotation() == b.rotation());
    CHECK(a.placements() == b.placements());
    CHECK(a.graph().vertex_count() >= 4);
    CHECK_THROWS_AS(random_plane_multigraph(1, {1, 0, 3, 2, 0}), std::invalid_argument);
}

TEST_CASE("random plane multigraphs produce parallel pairs and several components") {
    bool parallel = false;
    bool nested = false;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PlaneMultigraph pm = random_plane_multigraph(seed, {3, 2, 5, 5, 1});
        parallel = parallel || parallel_pairs(pm.graph()).k() > 0;
        nested = nested || std::any_of(pm.placements().begin(), pm.placements().end(),
                                       [](const Placement& p) { return !p.is_unbounded(); });
        CHECK(euler_check(pm));
        CHECK(handshake_check(pm));
    }
    CHECK(parallel);
    CHECK(nested);
}
