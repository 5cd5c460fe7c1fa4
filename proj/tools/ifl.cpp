#include "ifl/discharging.hpp"
#include "ifl/embedding.hpp"
#include "ifl/generators.hpp"
#include "ifl/io.hpp"
#include "ifl/reductions.hpp"
#include "ifl/report.hpp"
#include "ifl/solvers.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace ifl;

namespace {

// Exit codes: 0 all checks pass, 1 some check failed, 2 bad configuration.
constexpr int kFail = 1;
constexpr int kConfig = 2;

struct Args {
    std::string in;
    std::string out;
    std::string family;
    int k = 1;
    std::string kind;
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
    std::string audit;
    std::string map;
    std::string cert;
    bool expect = false;
    bool any = false;
    int colors = 5;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

std::istringstream open_in(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return std::istringstream(ss.str());
    }
    return std::istringstream(read_file(path));
}

bool has_embedding(const std::string& text) {
    return text.find("\nouter ") != std::string::npos || text.rfind("# PMGRAPH", 0) == 0;
}

int cmd_gen(const Args& a) {
    std::ostringstream out;
    if (a.family == "random") {
        write_pmgraph(out, random_plane_multigraph(a.seed, {2, 1, 6, 5, 1}));
        emit(a.out, out.str());
        return 0;
    }
    const FamilyInstance inst = generate(parse_family(a.family), a.k);
    write_pmgraph(out, inst.pm);
    emit(a.out, out.str());
    if (a.expect) {
        std::cerr << "family " << to_string(inst.family) << " k " << inst.k << " n " << inst.expected_n << " m "
                  << inst.expected_m << " pairs " << inst.expected_pairs << " a " << inst.expected_a
                  << " two-faces " << (inst.has_two_faces ? "yes" : "no") << '\n';
    }
    return 0;
}

int cmd_solve(const Args& a) {
    auto in = open_in(a.in);
    const Multigraph g = read_any_graph(in);
    SolverOptions opts;
    if (a.budget > 0) {
        opts.budget = a.budget;
    }
    const ForestCertificate cert = solve(g, parse_forest_kind(a.kind.empty() ? "forest" : a.kind), opts);
    std::cout << "value " << cert.value() << '\n' << "vertices";
    for (Vertex v : cert.vertices) {
        std::cout << ' ' << v;
    }
    std::cout << '\n';
    if (!a.out.empty()) {
        std::ostringstream out;
        write_certificate(out, cert);
        write_file(a.out, out.str());
    }
    return 0;
}

int cmd_verify(const Args& a) {
    const std::string text = a.in.empty() ? open_in(a.in).str() : read_file(a.in);
    VerifyOptions opts;
    if (a.budget > 0) {
        opts.solver.budget = a.budget;
        opts.embedding.budget = a.budget;
    }
    std::istringstream in(text);
    VerificationReport report;
    if (!a.cert.empty()) {
        std::istringstream cert_in(read_file(a.cert));
        report = verify_certificate(a.in, read_any_graph(in), read_certificate(cert_in), opts);
    } else if (has_embedding(text)) {
        const PlaneMultigraph pm = read_pmgraph(in);
        report = verify_bounds(a.in, pm.graph(), pm, opts);
    } else {
        report = verify_bounds(a.in, read_mgraph(in), std::nullopt, opts);
    }
    emit(a.out, report.text());
    return report.passed() ? 0 : kFail;
}

int cmd_reduce(const Args& a) {
    const ReductionKind kind = parse_reduction_kind(a.kind);
    auto in = open_in(a.in);
    std::ostringstream out;
    if (kind == ReductionKind::Normalize) {
        const PlaneMultigraph pm = normalize_multiplicity(read_pmgraph(in));
        write_pmgraph(out, pm);
        emit(a.out, out.str());
        return 0;
    }
    const Multigraph g = read_any_graph(in);
    const ReductionRecord rec = kind == ReductionKind::Dedup    ? dedup(g)
                                : kind == ReductionKind::Double ? double_edges(g)
                                                                : subdivide_parallel(g);
    write_mgraph(out, rec.output);
    emit(a.out, out.str());
    if (!a.map.empty()) {
        std::ostringstream map;
        write_map(map, rec);
        write_file(a.map, map.str());
    }
    return 0;
}

int cmd_discharge(const Args& a) {
    auto in = open_in(a.in);
    const PlaneMultigraph pm = read_pmgraph(in);
    if (parallel_pairs(pm.graph()).k() == 0) {
        // Nothing to discharge; the bound is checked by the solver alone.
        const RefuterReport r = counterexample_refuter(pm);
        std::cout << "k 0 ledger n/a\na " << r.a << " bound " << to_string(r.bound) << ' '
                  << (r.bound_holds ? "ok" : "FAIL") << '\n';
        return r.bound_holds ? 0 : kFail;
    }
    const ChargeLedger ledger = run_discharging(pm);
    std::ostringstream audit;
    write_audit(audit, ledger);
    emit(a.audit, audit.str());
    const bool ok = ledger.identity_holds() && ledger.conserved() && ledger.final_nonnegative();
    if (!a.audit.empty()) {
        std::cout << "total " << to_string(ledger.initial.total()) << " expected "
                  << to_string(ledger.expected_total()) << " pot " << to_string(ledger.final.pot) << ' '
                  << (ok ? "ok" : "FAIL") << '\n';
    }
    return ok ? 0 : kFail;
}

int cmd_report(const Args& a) {
    VerifyOptions opts;
    if (a.budget > 0) {
        opts.solver.budget = a.budget;
        opts.embedding.budget = a.budget;
    }
    const SuiteResult result = run_suite(a.in, opts);
    emit(a.out, result.report);
    return result.exit_code;
}

int cmd_embed(const Args& a) {
    auto in = open_in(a.in);
    const Multigraph g = read_any_graph(in);
    EmbeddingSearchOptions opts;
    if (a.budget > 0) {
        opts.budget = a.budget;
    }
    const EmbeddingSearchResult r = a.any ? search_plane_embedding(g, opts) : search_2face_free_embedding(g, opts);
    const char* status = r.status == EmbeddingSearchResult::Status::Found  ? "found"
                         : r.status == EmbeddingSearchResult::Status::None ? "none"
                                                                           : "exhausted";
    std::cerr << "status " << status << " examined " << r.examined << '\n';
    if (r.witness) {
        std::ostringstream out;
        write_pmgraph(out, *r.witness);
        emit(a.out, out.str());
    }
    return r.status == EmbeddingSearchResult::Status::Found ? 0 : kFail;
}

int cmd_color(const Args& a) {
    auto in = open_in(a.in);
    const Multigraph g = read_any_graph(in);
    ColoringSearchOptions opts;
    if (a.budget > 0) {
        opts.budget = a.budget;
    }
    const ColoringSearchResult r = find_acyclic_coloring(dedup(g).output, a.colors, opts);
    if (!r.coloring) {
        std::cout << (r.status == ColoringSearchResult::Status::None ? "none" : "exhausted") << '\n';
        return kFail;
    }
    const ColoringExtraction ex = extract_forest_from_coloring(g, *r.coloring);
    std::ostringstream out;
    write_coloring(out, *r.coloring);
    emit(a.out, out.str());
    std::cout << "pair " << ex.chosen.i << ' ' << ex.chosen.j << " k_ij " << ex.chosen.k_ij << "\nvalue "
              << ex.forest.value() << "\nvertices";
    for (Vertex v : ex.forest.vertices) {
        std::cout << ' ' << v;
    }
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced forests in planar multigraphs"};
    app.require_subcommand(1);
    Args a;

    auto* gen = app.add_subcommand("gen", "Write a family instance as PMGRAPH");
    gen->add_option("--family", a.family, "k4|dk4|nk|mk|random")->required();
    gen->add_option("--k", a.k, "Family index");
    gen->add_option("--seed", a.seed, "Seed for --family random");
    gen->add_option("--out", a.out, "Output file (default stdout)");
    gen->add_flag("--expect", a.expect, "Print expected metadata to stderr");

    auto* solve_cmd = app.add_subcommand("solve", "Exact maximum induced forest");
    solve_cmd->add_option("--in", a.in, "MGRAPH or PMGRAPH file")->required();
    solve_cmd->add_option("--kind", a.kind, "forest|linear|independent");
    solve_cmd->add_option("--budget", a.budget, "Search node budget");
    solve_cmd->add_option("--out", a.out, "Certificate file");

    auto* verify = app.add_subcommand("verify", "Check every lower bound, or one certificate");
    verify->add_option("--in", a.in, "MGRAPH or PMGRAPH file")->required();
    verify->add_option("--cert", a.cert, "Certificate to check instead of the bounds");
    verify->add_option("--budget", a.budget, "Search node budget");
    verify->add_option("--out", a.out, "Report file");

    auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
    reduce->add_option("--kind", a.kind, "dedup|double|subdivide|normalize")->required();
    reduce->add_option("--in", a.in, "Input file")->required();
    reduce->add_option("--out", a.out, "Output file");
    reduce->add_option("--map", a.map, "Vertex map file");

    auto* discharge = app.add_subcommand("discharge", "Replay the discharging rules");
    discharge->add_option("--in", a.in, "PMGRAPH file")->required();
    discharge->add_option("--audit", a.audit, "Audit file (default stdout)");

    auto* report = app.add_subcommand("report", "Run a verification manifest");
    report->add_option("--in", a.in, "Manifest file")->required();
    report->add_option("--out", a.out, "Report file");
    report->add_option("--budget", a.budget, "Search node budget");

    auto* embed = app.add_subcommand("embed", "Search for an embedding without 2-faces");
    embed->add_option("--in", a.in, "MGRAPH file")->required();
    embed->add_option("--out", a.out, "Witness PMGRAPH");
    embed->add_option("--budget", a.budget, "Search node budget");
    embed->add_flag("--any", a.any, "Accept 2-faces");

    auto* color = app.add_subcommand("color", "Acyclic colouring and the forest it yields");
    color->add_option("--in", a.in, "MGRAPH file")->required();
    color->add_option("--colors", a.colors, "Colour count");
    color->add_option("--budget", a.budget, "Search node budget");
    color->add_option("--out", a.out, "Colouring file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfig;
    }

    try {
        if (*gen) {
            return cmd_gen(a);
        }
        if (*solve_cmd) {
            return cmd_solve(a);
        }
        if (*verify) {
            return cmd_verify(a);
        }
        if (*reduce) {
            return cmd_reduce(a);
        }
        if (*discharge) {
            return cmd_discharge(a);
        }
        if (*report) {
            return cmd_report(a);
        }
        if (*embed) {
            return cmd_embed(a);
        }
        if (*color) {
            return cmd_color(a);
        }
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }
    return kConfig;
}
