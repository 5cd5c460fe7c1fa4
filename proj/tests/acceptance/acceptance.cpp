// Acceptance gate: one PASS/FAIL line per criterion. `acceptance` runs all of
// them, `acceptance N` runs criterion N only. Exit status is 1 iff a line
// reads FAIL.

#include "ifl/discharging.hpp"
#include "ifl/embedding.hpp"
#include "ifl/generators.hpp"
#include "ifl/reductions.hpp"
#include "ifl/solvers.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ifl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double seconds; // wall-clock limit; exceeding it fails the line
    std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        out += (out.empty() ? "" : "; ") + p;
    }
    return out;
}

// 1. Doubled K4 copies attain n/4 exactly.
Outcome tight_quarter() {
    std::vector<std::string> notes;
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
        const FamilyInstance inst = gen_doubled_k4_copies(k);
        const int a = max_induced_forest(inst.pm.graph()).value();
        ok = ok && a == k && 4 * a == inst.pm.graph().vertex_count();
        notes.push_back("k=" + std::to_string(k) + " a=" + std::to_string(a));
    }
    return {ok, join(notes)};
}

// 2. Subdividing one edge of each parallel pair adds exactly k, both sides by
// brute force.
Outcome subdivision_equality() {
    std::mt19937_64 rng(20240501);
    int checked = 0;
    int bad = 0;
    int max_k = 0;
    while (checked < 200) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        const int copies = std::uniform_int_distribution<int>(1, 5)(rng);
        const auto edges = oracle::random_multigraph(rng, n, 0.45, copies);
        const int k = oracle::parallel_pair_count(edges);
        if (k == 0 || n + k > 16) {
            continue;
        }
        const ReductionRecord rec = subdivide_parallel(to_graph(n, edges));
        const int before = oracle::a(n, edges);
        const int after = oracle::a(n + k, to_edges(rec.output));
        bad += after == before + k ? 0 : 1;
        max_k = std::max(max_k, k);
        ++checked;
    }
    return {bad == 0, std::to_string(checked) + " instances, max k " + std::to_string(max_k) + ", " +
                          std::to_string(bad) + " mismatches"};
}

// 3. Doubling every edge turns a into alpha.
Outcome doubling_equality() {
    std::mt19937_64 rng(7);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + i % 7;
        const int pairs = n * (n - 1) / 2;
        const std::uint64_t code = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
        const auto edges = oracle::simple_graph_from_code(n, code);
        const ReductionRecord rec = double_edges(to_graph(n, edges));
        bad += oracle::a(n, to_edges(rec.output)) == oracle::alpha(n, edges) ? 0 : 1;
    }
    return {bad == 0, "500 simple graphs on 1..7 vertices, " + std::to_string(bad) + " mismatches"};
}

// 4. M_k: n = 7k+1, no 2-faces, a = 3k+1.
Outcome mk_family() {
    std::vector<std::string> notes;
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
        const FamilyInstance inst = gen_Mk(k);
        const int n = inst.pm.graph().vertex_count();
        const bool free = two_faces(inst.pm).empty();
        const int a = max_induced_forest(inst.pm.graph()).value();
        ok = ok && n == 7 * k + 1 && free && a == 3 * k + 1 && 7 * a == 3 * n + 4;
        notes.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                        (free ? " no 2-faces" : " HAS 2-faces"));
    }
    return {ok, join(notes)};
}

// 5. Doubled K4 has no embedding without 2-faces; the search must finish.
Outcome doubled_k4_search() {
    EmbeddingSearchOptions opts;
    opts.budget = 100'000'000;
    const auto r = search_2face_free_embedding(gen_doubled_k4_copies(1).pm.graph(), opts);
    const char* status = r.status == EmbeddingSearchResult::Status::None    ? "none"
                         : r.status == EmbeddingSearchResult::Status::Found ? "found"
                                                                            : "exhausted";
    return {r.status == EmbeddingSearchResult::Status::None,
            std::string("status ") + status + " after " + std::to_string(r.examined) + " nodes"};
}

// 6. Handshake and Euler on generated and random embeddings.
Outcome identities() {
    int total = 0;
    int bad = 0;
    auto check = [&](const PlaneMultigraph& pm) {
        ++total;
        bad += handshake_check(pm) && euler_check(pm) ? 0 : 1;
    };
    for (Family f : {Family::K4Copies, Family::DoubledK4Copies, Family::NK, Family::MK}) {
        for (int k = 1; k <= 4; ++k) {
            check(generate(f, k).pm);
        }
    }
    for (std::uint64_t seed = 1; seed <= 1200; ++seed) {
        RandomPlaneOptions opts;
        opts.components = 1 + static_cast<int>(seed % 4);
        opts.max_vertices = 2 + static_cast<int>(seed % 7);
        opts.extra_edges = static_cast<int>(seed % 9);
        opts.isolated = static_cast<int>(seed % 3);
        check(random_plane_multigraph(seed, opts));
    }
    return {bad == 0 && total >= 1000, std::to_string(total) + " instances, " + std::to_string(bad) + " violations"};
}

// Small multigraphs whose 2-face-free search succeeded, from a fixed seed.
// Each has n <= 8 and every parallel pair of multiplicity exactly 2.
struct SearchedPool {
    std::vector<PlaneMultigraph> found;
    int attempted = 0;
    int exhausted = 0;
};

const SearchedPool& searched_pool() {
    static const SearchedPool pool = [] {
        SearchedPool p;
        std::mt19937_64 rng(99);
        EmbeddingSearchOptions opts;
        opts.budget = 50'000;
        for (int i = 0; i < 400; ++i) {
            const int n = 3 + i % 6;
            oracle::EdgeList simple = oracle::random_multigraph(rng, n, 0.55, 0);
            if (simple.empty() || static_cast<int>(simple.size()) > 3 * n - 6) {
                continue;
            }
            oracle::EdgeList edges = simple;
            std::set<std::size_t> doubled;
            const int pairs = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < pairs; ++j) {
                doubled.insert(rng() % simple.size());
            }
            for (std::size_t j : doubled) {
                edges.push_back(simple[j]);
            }
            if (static_cast<int>(edges.size()) > 3 * n - 6) {
                continue; // no 2-face-free embedding can exist
            }
            ++p.attempted;
            const auto r = search_2face_free_embedding(to_graph(n, edges), opts);
            if (r.status == EmbeddingSearchResult::Status::Found) {
                p.found.push_back(*r.witness);
            } else if (r.status == EmbeddingSearchResult::Status::Exhausted) {
                ++p.exhausted;
            }
        }
        return p;
    }();
    return pool;
}

// 7. m <= 3n - 6 on every 2-face-free embedding with n >= 3.
Outcome edge_bound() {
    std::vector<PlaneMultigraph> all = searched_pool().found;
    for (int k = 1; k <= 4; ++k) {
        all.push_back(gen_k4_copies(k).pm);
        all.push_back(gen_Mk(k).pm);
    }
    std::mt19937_64 rng(3);
    EmbeddingSearchOptions opts;
    opts.budget = 50'000;
    int exhausted = 0;
    for (int i = 0; i < 150; ++i) {
        const int n = 3 + i % 5;
        const auto r =
            search_2face_free_embedding(to_graph(n, oracle::random_multigraph(rng, n, 0.6, i % 3)), opts);
        if (r.witness) {
            all.push_back(*r.witness);
        }
        exhausted += r.status == EmbeddingSearchResult::Status::Exhausted ? 1 : 0;
    }
    int checked = 0;
    int bad = 0;
    for (const PlaneMultigraph& pm : all) {
        const int n = pm.graph().vertex_count();
        if (n < 3 || !two_faces(pm).empty()) {
            continue;
        }
        ++checked;
        bad += edge_bound_check(pm) && pm.graph().edge_count() <= 3 * n - 6 ? 0 : 1;
    }
    return {bad == 0 && checked > 0, std::to_string(checked) + " embeddings, " + std::to_string(bad) +
                                         " violations, " + std::to_string(exhausted) + " searches over budget"};
}

// 8. Every rooted forest on up to 9 nodes, minimal admissible weights.
Outcome forest_weights() {
    long forests = 0;
    long below = 0;
    long path_not_tight = 0;
    long characterisation_mismatch = 0;
    long tight_non_paths = 0;
    for (int n = 1; n <= 9; ++n) {
        // parent[i] < i enumerates every rooted forest shape (with repeats).
        std::vector<int> parent(n, -1);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                std::vector<int> out(n, 0);
                int roots = 0;
                for (int v = 0; v < n; ++v) {
                    roots += parent[v] < 0 ? 1 : 0;
                    if (parent[v] >= 0) {
                        ++out[parent[v]];
                    }
                }
                std::vector<int> weight(n);
                bool path = roots == 1;
                bool branching_binary = roots == 1;
                for (int v = 0; v < n; ++v) {
                    weight[v] = out[v] == 0 ? 2 : out[v] == 1 ? 1 : 0;
                    path = path && out[v] <= 1;
                    branching_binary = branching_binary && out[v] <= 2;
                }
                const ForestWeight fw = forest_weight_check({parent, weight});
                ++forests;
                below += fw.ok ? 0 : 1;
                const bool equal = fw.total == n + 1;
                path_not_tight += path && !equal ? 1 : 0;
                tight_non_paths += equal && !path ? 1 : 0;
                characterisation_mismatch += equal != branching_binary ? 1 : 0;
                return;
            }
            for (int p = -1; p < i; ++p) {
                parent[i] = p;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return {below == 0 && path_not_tight == 0 && characterisation_mismatch == 0,
            std::to_string(forests) + " forests, " + std::to_string(below) + " below n+1, " +
                std::to_string(path_not_tight) + " paths above n+1; equality also on " +
                std::to_string(tight_non_paths) +
                " non-path trees (every branching node binary), characterisation mismatches " +
                std::to_string(characterisation_mismatch)};
}

// 9. Discharging ledger on M_k and on searched instances.
Outcome discharging_audit() {
    int audited = 0;
    int not_applicable = 0;
    std::vector<std::string> failures;
    auto audit = [&](const std::string& label, const PlaneMultigraph& pm) {
        if (parallel_pairs(pm.graph()).k() == 0) {
            ++not_applicable;
            return;
        }
        try {
            const ChargeLedger l = run_discharging(pm);
            std::set<std::string> donors;
            bool once = true;
            for (const Transfer& t : l.transfers) {
                if (t.rule != "R5" && t.rule != "R6") {
                    once = once && donors.insert(t.donor).second;
                }
            }
            bool cycles_zero = true;
            for (const Rational& c : l.final.cycles) {
                cycles_zero = cycles_zero && c == Rational(0);
            }
            const bool ok = l.initial.total() == l.expected_total() && l.identity_holds() && l.conserved() &&
                            l.final_nonnegative() && l.final.pot >= Rational(0) && cycles_zero && once;
            if (!ok) {
                failures.push_back(label);
            }
            ++audited;
        } catch (const std::exception& e) {
            failures.push_back(label + " (" + e.what() + ")");
        }
    };
    for (int k = 1; k <= 3; ++k) {
        audit("M" + std::to_string(k), gen_Mk(k).pm);
    }
    const SearchedPool& pool = searched_pool();
    for (std::size_t i = 0; i < pool.found.size(); ++i) {
        audit("searched#" + std::to_string(i), pool.found[i]);
    }
    return {failures.empty() && audited >= 2,
            std::to_string(audited) + " ledgers (M2, M3 and " + std::to_string(audited - 2) +
                " searched), " + std::to_string(not_applicable) + " without parallel pairs (M1), " +
                std::to_string(pool.exhausted) + " of " + std::to_string(pool.attempted) + " searches over budget" +
                (failures.empty() ? std::string() : ", failing: " + join(failures))};
}

// 10. Forest extracted from an acyclic 5-colouring.
Outcome coloring_extraction() {
    std::vector<Multigraph> pool;
    for (int k = 1; k <= 3; ++k) {
        pool.push_back(gen_k4_copies(k).pm.graph());
        pool.push_back(gen_doubled_k4_copies(k).pm.graph());
    }
    pool.push_back(gen_Mk(1).pm.graph());
    pool.push_back(gen_Nk(2).pm.graph());
    for (const PlaneMultigraph& pm : searched_pool().found) {
        pool.push_back(pm.graph());
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        RandomPlaneOptions opts;
        opts.components = 1 + static_cast<int>(seed % 3);
        opts.max_vertices = 4;
        opts.extra_edges = 6;
        const PlaneMultigraph pm = random_plane_multigraph(seed, opts);
        if (pm.graph().vertex_count() <= 12) {
            pool.push_back(pm.graph());
        }
    }
    int checked = 0;
    int skipped = 0;
    int bad = 0;
    ColoringSearchOptions opts;
    opts.budget = 1'000'000;
    for (const Multigraph& m : pool) {
        const int n = m.vertex_count();
        if (n > 12) {
            continue;
        }
        const auto r = find_acyclic_coloring(dedup(m).output, 5, opts);
        if (!r.coloring) {
            ++skipped;
            continue;
        }
        const int k = parallel_pairs(m).k();
        const ColoringExtraction ex = extract_forest_from_coloring(m, *r.coloring);
        const std::int64_t need = ceil(Rational(2 * n, 5) - Rational(k, 10));
        ++checked;
        bad += certificate_valid(m, ex.forest) && ex.forest.value() >= need ? 0 : 1;
    }
    return {bad == 0 && checked > 0, std::to_string(checked) + " colourings, " + std::to_string(bad) +
                                         " below ceil(2n/5-k/10), " + std::to_string(skipped) + " skipped"};
}

// 11. Solver monotonicity and additivity.
Outcome solver_properties() {
    std::mt19937_64 rng(11);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const int n1 = 2 + i % 6;
        const int n2 = 1 + (i / 6) % 5;
        const auto e1 = oracle::random_multigraph(rng, n1, 0.5, i % 3);
        const auto e2 = oracle::random_multigraph(rng, n2, 0.5, i % 2);
        const Multigraph g1 = to_graph(n1, e1);
        const Multigraph g2 = to_graph(n2, e2);
        const int a1 = max_induced_forest(g1).value();
        const int a2 = max_induced_forest(g2).value();
        const Multigraph parts[] = {g1, g2};
        const bool additive = max_induced_forest(disjoint_union(parts)).value() == a1 + a2;
        bool monotone = true;
        if (!e1.empty()) {
            auto fewer = e1;
            fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
            monotone = max_induced_forest(to_graph(n1, fewer)).value() >= a1;
        }
        std::vector<Vertex> keep;
        const Vertex drop = static_cast<Vertex>(rng() % n1);
        for (Vertex v = 0; v < n1; ++v) {
            if (v != drop) {
                keep.push_back(v);
            }
        }
        const int smaller = max_induced_forest(induced_subgraph(g1, keep).graph).value();
        monotone = monotone && smaller <= a1 && smaller >= a1 - 1;
        bad += additive && monotone && a1 == oracle::a(n1, e1) ? 0 : 1;
    }
    return {bad == 0, "500 instances, " + std::to_string(bad) + " violations"};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "doubled-K4 copies attain n/4", 5, tight_quarter},
        {2, "subdivision adds exactly k", 60, subdivision_equality},
        {3, "doubling gives alpha", 60, doubling_equality},
        {4, "M_k attains 3n/7+4/7", 30, mk_family},
        {5, "doubled K4 has no 2-face-free embedding", 120, doubled_k4_search},
        {6, "handshake and Euler", 60, identities},
        {7, "edge bound without 2-faces", 60, edge_bound},
        {8, "forest-weight bound", 30, forest_weights},
        {9, "discharging audit", 120, discharging_audit},
        {10, "colouring extraction bound", 120, coloring_extraction},
        {11, "monotonicity and additivity", 60, solver_properties},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
            return 2;
        }
    }
    bool all = true;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.seconds;
        const bool pass = o.pass && in_time;
        all = all && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << c.name << ": " << o.detail << " ["
             << secs << "s of " << c.seconds << "s]";
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
