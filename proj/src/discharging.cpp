#include "ifl/discharging.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace ifl {

std::vector<TwoCycle> find_two_cycles(const PlaneMultigraph& pm) {
    const Multigraph& g = pm.graph();
    const int faces = static_cast<int>(pm.faces().size());
    std::vector<TwoCycle> out;
    for (const ParallelPair& pair : parallel_pairs(g).pairs) {
        if (pair.multiplicity != 2) {
            throw GraphError("pair " + std::to_string(pair.u) + "-" + std::to_string(pair.v) + " has multiplicity " +
                             std::to_string(pair.multiplicity) + "; run normalize_multiplicity first");
        }
        TwoCycle c;
        c.id = static_cast<int>(out.size());
        c.u = pair.u;
        c.v = pair.v;
        std::vector<int> edges;
        for (int e : g.incident(pair.u)) {
            if (g.edge(e).other(pair.u) == pair.v) {
                edges.push_back(e);
            }
        }
        c.e1 = edges[0];
        c.e2 = edges[1];
        const int blocked[] = {c.e1, c.e2};
        const int side_a = pm.face_of_dart(2 * c.e1);
        const int side_b = pm.face_of_dart(2 * c.e1 + 1);
        std::vector<char> reach = dual_reachable(pm, side_a, blocked);
        if (reach[side_b]) {
            throw std::logic_error("2-cycle does not separate the plane");
        }
        if (reach[0]) {
            reach = dual_reachable(pm, side_b, blocked);
        }
        for (int f = 0; f < faces; ++f) {
            (reach[f] ? c.interior_faces : c.exterior_faces).push_back(f);
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e != c.e1 && e != c.e2 && reach[pm.face_of_dart(2 * e)]) {
                c.interior_edges.push_back(e);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string to_string(CycleCategory category) {
    switch (category) {
    case CycleCategory::EB:
        return "E-B";
    case CycleCategory::ENB:
        return "E-NB";
    case CycleCategory::NENL:
        return "NE-NL";
    case CycleCategory::NEL1:
        return "NE-L1";
    case CycleCategory::NEL2:
        return "NE-L2";
    }
    return "?";
}

NestingForest build_nesting_forest(const PlaneMultigraph& pm, const std::vector<TwoCycle>& cycles) {
    if (!two_faces(pm).empty()) {
        throw PreconditionError(PreconditionError::Reason::HasTwoFace, "nesting forest needs no 2-faces");
    }
    const int count = static_cast<int>(cycles.size());
    const int m = pm.graph().edge_count();
    const int faces = static_cast<int>(pm.faces().size());
    std::vector<std::vector<char>> edge_in(count, std::vector<char>(m, 0));
    std::vector<std::vector<char>> face_in(count, std::vector<char>(faces, 0));
    for (int c = 0; c < count; ++c) {
        for (int e : cycles[c].interior_edges) {
            edge_in[c][e] = 1;
        }
        for (int f : cycles[c].interior_faces) {
            face_in[c][f] = 1;
        }
    }
    auto inside = [&](int d, int c) { return d != c && edge_in[c][cycles[d].e1]; };

    NestingForest forest;
    forest.parent.assign(count, -1);
    forest.children.assign(count, {});
    forest.category.assign(count, CycleCategory::EB);
    forest.exclusive_faces.assign(count, {});
    forest.exclusive_edges.assign(count, {});
    // Containers of d form a chain; the innermost has the fewest faces.
    for (int d = 0; d < count; ++d) {
        for (int c = 0; c < count; ++c) {
            if (inside(d, c) &&
                (forest.parent[d] < 0 ||
                 cycles[c].interior_faces.size() < cycles[forest.parent[d]].interior_faces.size())) {
                forest.parent[d] = c;
            }
        }
        if (forest.parent[d] >= 0) {
            forest.children[forest.parent[d]].push_back(d);
        }
    }

    for (int c = 0; c < count; ++c) {
        std::vector<char> edge_cut(m, 0);
        std::vector<char> face_cut(faces, 0);
        for (int d = 0; d < count; ++d) {
            if (!inside(d, c)) {
                continue;
            }
            edge_cut[cycles[d].e1] = edge_cut[cycles[d].e2] = 1;
            for (int e : cycles[d].interior_edges) {
                edge_cut[e] = 1;
            }
            for (int f : cycles[d].interior_faces) {
                face_cut[f] = 1;
            }
        }
        for (int e : cycles[c].interior_edges) {
            if (!edge_cut[e]) {
                forest.exclusive_edges[c].push_back(e);
            }
        }
        for (int f : cycles[c].interior_faces) {
            if (!face_cut[f]) {
                forest.exclusive_faces[c].push_back(f);
            }
        }
        const std::size_t kids = forest.children[c].size();
        const bool empty = forest.exclusive_edges[c].empty();
        if (kids == 0) {
            if (empty) {
                throw DischargingError("leaf 2-cycle " + std::to_string(c) + " has an empty interior");
            }
            forest.category[c] = forest.exclusive_edges[c].size() == 1 ? CycleCategory::NEL1 : CycleCategory::NEL2;
        } else if (!empty) {
            forest.category[c] = CycleCategory::NENL;
        } else {
            forest.category[c] = kids == 1 ? CycleCategory::ENB : CycleCategory::EB;
        }
    }
    return forest;
}

ForestWeight forest_weight_check(const WeightedRootedForest& forest) {
    const int n = static_cast<int>(forest.parent.size());
    if (n == 0 || forest.weight.size() != forest.parent.size()) {
        throw std::invalid_argument("weighted forest needs n >= 1 and one weight per node");
    }
    std::vector<int> out_degree(n, 0);
    for (int v = 0; v < n; ++v) {
        const int p = forest.parent[v];
        if (p < -1 || p >= n || p == v) {
            throw std::invalid_argument("bad parent of node " + std::to_string(v));
        }
        if (p >= 0) {
            ++out_degree[p];
        }
    }
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int x = v; x >= 0; x = forest.parent[x]) {
            if (++steps > n) {
                throw std::invalid_argument("parent relation has a cycle through node " + std::to_string(v));
            }
        }
    }
    ForestWeight result;
    for (int v = 0; v < n; ++v) {
        const int w = forest.weight[v];
        const bool admissible = out_degree[v] == 0   ? w == 2
                                : out_degree[v] == 1 ? w == 1
                                                     : (w == 0 || w == 1);
        if (!admissible) {
            throw std::invalid_argument("node " + std::to_string(v) + " of out-degree " +
                                        std::to_string(out_degree[v]) + " cannot have weight " + std::to_string(w));
        }
        result.total += w;
    }
    result.ok = result.total >= n + 1;
    return result;
}

Rational ChargeSnapshot::total() const {
    Rational sum = pot;
    for (const Rational& r : faces) {
        sum += r;
    }
    for (const Rational& r : edges) {
        sum += r;
    }
    for (const Rational& r : cycles) {
        sum += r;
    }
    return sum;
}

Rational ChargeLedger::stage1_cycle_charge() const {
    Rational sum(0);
    for (const Rational& r : after_stage1.cycles) {
        sum += r;
    }
    return sum;
}

bool ChargeLedger::conserved() const {
    return initial.total() == after_stage1.total() && after_stage1.total() == final.total();
}

bool ChargeLedger::identity_holds() const {
    return initial.total() == expected_total() && Rational(3 * m - 3 * k - 3 * faces - 1) == expected_total();
}

bool ChargeLedger::final_nonnegative() const {
    const auto nonneg = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r >= Rational(0); });
    };
    return nonneg(final.faces) && nonneg(final.edges) && final.pot >= Rational(0);
}

namespace {

class Donations {
public:
    Donations(ChargeLedger& ledger) : ledger_(ledger), face_used_(ledger.faces, 0), edge_used_(ledger.m, 0) {}

    void face(int f, int cycle, const char* rule) {
        if (face_used_[f]++) {
            throw DischargingError("face " + std::to_string(f) + " donates twice");
        }
        move(ledger_.after_stage1.faces[f], "face " + std::to_string(f), cycle, rule);
    }

    void edge(int e, int cycle, const char* rule) {
        if (edge_used_[e]++) {
            throw DischargingError("edge " + std::to_string(e) + " donates twice");
        }
        move(ledger_.after_stage1.edges[e], "edge " + std::to_string(e), cycle, rule);
    }

private:
    void move(Rational& from, std::string donor, int cycle, const char* rule) {
        from -= 1;
        ledger_.after_stage1.cycles[cycle] += 1;
        ledger_.transfers.push_back({rule, std::move(donor), "cycle " + std::to_string(cycle), Rational(1)});
    }

    ChargeLedger& ledger_;
    std::vector<int> face_used_;
    std::vector<int> edge_used_;
};

int single_four_face(const PlaneMultigraph& pm, const std::vector<int>& faces, int cycle, const char* what) {
    if (faces.size() != 1 || pm.faces()[faces[0]].degree != 4) {
        throw DischargingError(std::string(what) + " of 2-cycle " + std::to_string(cycle) +
                               " is not a single 4-face");
    }
    return faces[0];
}

} // namespace

ChargeLedger run_discharging(const PlaneMultigraph& pm) {
    const Multigraph& g = pm.graph();
    if (!two_faces(pm).empty()) {
        throw PreconditionError(PreconditionError::Reason::HasTwoFace, "discharging needs no 2-faces");
    }
    if (g.edge_count() == 0) {
        throw PreconditionError(PreconditionError::Reason::Other, "discharging needs m >= 1");
    }
    const auto pairs = parallel_pairs(g).pairs;
    if (pairs.empty()) {
        throw PreconditionError(PreconditionError::Reason::Other, "discharging needs k >= 1");
    }
    for (const ParallelPair& p : pairs) {
        if (p.multiplicity != 2) {
            throw PreconditionError(PreconditionError::Reason::Other,
                                    "discharging needs every multiplicity to be exactly 2");
        }
    }

    ChargeLedger ledger;
    ledger.n = g.vertex_count();
    ledger.m = g.edge_count();
    ledger.k = static_cast<int>(pairs.size());
    ledger.p = pm.connected_component_count();
    ledger.faces = static_cast<int>(pm.faces().size());
    ledger.cycles = find_two_cycles(pm);
    ledger.nesting = build_nesting_forest(pm, ledger.cycles);

    const Rational share(ledger.k + 1, 2 * ledger.k);
    ChargeSnapshot& init = ledger.initial;
    for (const GlobalFace& f : pm.faces()) {
        init.faces.push_back(Rational(f.degree - 3));
    }
    for (const Edge& e : g.edges()) {
        init.edges.push_back(g.multiplicity(e.u, e.v) >= 2 ? -share : Rational(1));
    }
    init.cycles.assign(ledger.cycles.size(), Rational(0));

    ledger.after_stage1 = init;
    Donations give(ledger);
    for (const TwoCycle& c : ledger.cycles) {
        const auto& excl_edges = ledger.nesting.exclusive_edges[c.id];
        switch (ledger.nesting.category[c.id]) {
        case CycleCategory::EB:
            break;
        case CycleCategory::ENB:
            give.face(single_four_face(pm, ledger.nesting.exclusive_faces[c.id], c.id, "exclusive interior"), c.id,
                      "R1");
            break;
        case CycleCategory::NENL:
            give.edge(excl_edges.front(), c.id, "R2");
            break;
        case CycleCategory::NEL1:
            give.edge(c.interior_edges.front(), c.id, "R3");
            give.face(single_four_face(pm, c.interior_faces, c.id, "interior"), c.id, "R3");
            break;
        case CycleCategory::NEL2:
            give.edge(c.interior_edges[0], c.id, "R4");
            give.edge(c.interior_edges[1], c.id, "R4");
            break;
        }
    }

    ledger.final = ledger.after_stage1;
    ChargeSnapshot& fin = ledger.final;
    for (std::size_t c = 0; c < fin.cycles.size(); ++c) {
        if (fin.cycles[c] != Rational(0)) {
            ledger.transfers.push_back({"R5", "cycle " + std::to_string(c), "pot", fin.cycles[c]});
        }
        fin.pot += fin.cycles[c];
        fin.cycles[c] = 0;
    }
    for (int e = 0; e < ledger.m; ++e) {
        const Edge& edge = g.edge(e);
        if (g.multiplicity(edge.u, edge.v) >= 2) {
            fin.pot -= share;
            fin.edges[e] += share;
            ledger.transfers.push_back({"R6", "pot", "edge " + std::to_string(e), share});
        }
    }
    return ledger;
}

namespace {

void write_snapshot(std::ostream& out, const std::string& name, const ChargeSnapshot& s) {
    out << "snapshot " << name << '\n';
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
        out << "face " << f << ' ' << to_string(s.faces[f]) << '\n';
    }
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        out << "edge " << e << ' ' << to_string(s.edges[e]) << '\n';
    }
    for (std::size_t c = 0; c < s.cycles.size(); ++c) {
        out << "cycle " << c << ' ' << to_string(s.cycles[c]) << '\n';
    }
    out << "pot " << to_string(s.pot) << '\n';
    out << "total " << to_string(s.total()) << '\n';
}

const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

} // namespace

void write_audit(std::ostream& out, const ChargeLedger& ledger) {
    out << "n " << ledger.n << '\n';
    out << "m " << ledger.m << '\n';
    out << "k " << ledger.k << '\n';
    out << "p " << ledger.p << '\n';
    out << "faces " << ledger.faces << '\n';
    for (const TwoCycle& c : ledger.cycles) {
        out << "two-cycle " << c.id << " vertices " << c.u << ' ' << c.v << " edges " << c.e1 << ' ' << c.e2
            << " parent " << ledger.nesting.parent[c.id] << " category " << to_string(ledger.nesting.category[c.id])
            << '\n';
    }
    write_snapshot(out, "initial", ledger.initial);
    write_snapshot(out, "stage1", ledger.after_stage1);
    write_snapshot(out, "final", ledger.final);
    for (const Transfer& t : ledger.transfers) {
        out << "transfer " << t.rule << ' ' << t.donor << " -> " << t.receiver << ' ' << to_string(t.amount) << '\n';
    }
    out << "identity 3n-3k-4-3p " << to_string(ledger.expected_total()) << " total "
        << to_string(ledger.initial.total()) << ' ' << verdict(ledger.identity_holds()) << '\n';
    out << "conserved " << verdict(ledger.conserved()) << '\n';
    out << "stage1-cycle-charge " << to_string(ledger.stage1_cycle_charge()) << " k+1 " << ledger.k + 1 << ' '
        << verdict(ledger.stage1_cycle_charge() >= Rational(ledger.k + 1)) << '\n';
    out << "nonnegative " << verdict(ledger.final_nonnegative()) << '\n';
}

RefuterReport counterexample_refuter(const PlaneMultigraph& pm, const SolverOptions& options) {
    const Multigraph& g = pm.graph();
    RefuterReport report;
    report.n = g.vertex_count();
    report.k = parallel_pairs(g).k();
    report.p = pm.connected_component_count();
    if (report.k > 0) {
        report.ledger = run_discharging(pm);
    } else if (!two_faces(pm).empty()) {
        throw PreconditionError(PreconditionError::Reason::HasTwoFace, "refuter needs no 2-faces");
    }
    report.a = max_induced_forest(g, options).value();
    report.bound = Rational(3 * report.n, 10) + Rational(7, 30);
    report.coloring_bound = Rational(2 * report.n, 5) - Rational(report.k, 10);
    report.bound_holds = Rational(report.a) >= report.bound;
    if (report.ledger) {
        const Rational total = report.ledger->final.total();
        report.chain_holds = report.ledger->final_nonnegative() && total >= Rational(0) &&
                             3 * report.n - 3 * report.k - 7 >= 3 * (report.p - 1) && report.p >= 1 &&
                             report.coloring_bound >= report.bound;
    } else {
        // Without parallel pairs the colouring bound alone clears 3n/10 + 7/30
        // once n >= 3.
        report.chain_holds = report.n < 3 || report.coloring_bound >= report.bound;
    }
    return report;
}

} // namespace ifl
