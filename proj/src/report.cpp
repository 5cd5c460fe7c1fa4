#include "ifl/report.hpp"

#include "ifl/generators.hpp"
#include "ifl/io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <thread>

namespace ifl {

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass:
        return "PASS";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::Skipped:
        return "SKIP";
    case CheckStatus::Info:
        return "INFO";
    }
    return "?";
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << "instance " << id << '\n';
    out << "n " << n << " m " << m << " k " << k << " p " << p << " triangle-free " << (triangle_free ? "yes" : "no")
        << " planar " << planar << " two-face-free " << two_face_free << '\n';
    if (a) {
        out << "a " << *a << '\n';
    }
    if (a_linear) {
        out << "a_linear " << *a_linear << '\n';
    }
    for (const Check& c : checks) {
        out << "check " << c.name << " expected " << c.expected << " actual " << c.actual << ' ' << to_string(c.status);
        if (!c.note.empty()) {
            out << " (" << c.note << ')';
        }
        out << '\n';
    }
    out << "result " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

namespace {

struct Gate {
    bool open;
    std::string reason;
};

Check bound_check(const std::string& name, const Rational& bound, const std::optional<int>& value, const Gate& gate) {
    Check c{name, ">= " + to_string(bound), value ? std::to_string(*value) : "-", CheckStatus::Skipped, ""};
    if (!gate.open) {
        c.note = gate.reason;
        return c;
    }
    if (!value) {
        c.note = "solver budget exhausted";
        return c;
    }
    c.status = Rational(*value) >= bound ? CheckStatus::Pass : CheckStatus::Fail;
    if (Rational(*value) == bound) {
        c.note = "tight";
    }
    return c;
}

std::optional<int> try_solve(const Multigraph& g, ForestKind kind, const SolverOptions& options) {
    try {
        return solve(g, kind, options).value();
    } catch (const SearchBudgetExceeded&) {
        return std::nullopt;
    }
}

std::string status_word(EmbeddingSearchResult::Status s) {
    switch (s) {
    case EmbeddingSearchResult::Status::Found:
        return "yes";
    case EmbeddingSearchResult::Status::None:
        return "no";
    case EmbeddingSearchResult::Status::Exhausted:
        return "unknown";
    }
    return "unknown";
}

} // namespace

VerificationReport verify_bounds(const std::string& id, const Multigraph& g,
                                 const std::optional<PlaneMultigraph>& embedding, const VerifyOptions& options) {
    VerificationReport r;
    r.id = id;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.k = parallel_pairs(g).k();
    r.p = static_cast<int>(connected_components(g).size());
    r.triangle_free = !has_triangle(g);

    if (embedding) {
        r.planar = "yes";
        r.two_face_free = two_faces(*embedding).empty() ? "yes" : "";
    } else {
        r.planar = status_word(search_plane_embedding(g, options.embedding).status);
    }
    if (r.planar == "yes" && r.two_face_free.empty()) {
        // Without 2-faces m <= 3n - 6; past that the search is pointless.
        const bool dense = r.n >= 3 && r.m > 3 * r.n - 6;
        r.two_face_free = dense ? "no" : status_word(search_2face_free_embedding(g, options.embedding).status);
    } else if (r.planar != "yes") {
        r.two_face_free = "unknown";
    }

    r.a = try_solve(g, ForestKind::Forest, options.solver);
    r.a_linear = try_solve(g, ForestKind::LinearForest, options.solver);

    const int n = r.n;
    const int k = r.k;
    const Gate planar{r.planar == "yes" && n >= 1,
                      n < 1 ? "empty graph" : r.planar == "no" ? "not planar" : "planarity undecided"};
    const Gate triangle_free{planar.open && r.triangle_free, planar.open ? "has a triangle" : planar.reason};
    const Gate no_two_faces{planar.open && r.two_face_free == "yes",
                            !planar.open                  ? planar.reason
                            : r.two_face_free == "no" ? "every embedding has a 2-face"
                                                      : "2-face-free embedding undecided"};

    r.checks.push_back(bound_check("a>=n/4", Rational(n, 4), r.a, planar));
    r.checks.push_back(bound_check("a>=(n+1)/3[triangle-free]", Rational(n + 1, 3), r.a, triangle_free));
    r.checks.push_back(bound_check("a_linear>=n/4", Rational(n, 4), r.a_linear, planar));
    r.checks.push_back(bound_check("a>=2n/5-3k/5", Rational(2 * n, 5) - Rational(3 * k, 5), r.a, planar));
    r.checks.push_back(bound_check("a>=2n/5-k/10", Rational(2 * n, 5) - Rational(k, 10), r.a, planar));
    r.checks.push_back(bound_check("a>=n/4+3/10[no-2-face]", Rational(n, 4) + Rational(3, 10), r.a, no_two_faces));
    r.checks.push_back(
        bound_check("a>=3n/10+7/30[no-2-face]", Rational(3 * n, 10) + Rational(7, 30), r.a, no_two_faces));

    Check conditional = bound_check("a>=(n-k)/2[conditional]", Rational(n - k, 2), r.a, planar);
    if (conditional.status == CheckStatus::Pass || conditional.status == CheckStatus::Fail) {
        conditional.note = conditional.status == CheckStatus::Pass ? "holds" : "violated";
        conditional.status = CheckStatus::Info;
    }
    r.checks.push_back(conditional);
    if (r.a && planar.open && k == 0 && 2 * *r.a == n) {
        r.checks.push_back({"a=n/2", std::to_string(n) + "/2", std::to_string(*r.a), CheckStatus::Info,
                            "extremal for the simple-graph conjecture"});
    }
    return r;
}

VerificationReport verify_certificate(const std::string& id, const Multigraph& g, const ForestCertificate& cert,
                                      const VerifyOptions& options) {
    VerificationReport r;
    r.id = id;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.k = parallel_pairs(g).k();
    r.p = static_cast<int>(connected_components(g).size());
    r.triangle_free = !has_triangle(g);
    r.planar = "unknown";
    r.two_face_free = "unknown";
    const bool valid = certificate_valid(g, cert);
    r.checks.push_back({"certificate-valid", to_string(cert.kind), valid ? "valid" : "invalid",
                        valid ? CheckStatus::Pass : CheckStatus::Fail, ""});
    const auto best = try_solve(g, cert.kind, options.solver);
    Check optimal{"certificate-optimal", best ? std::to_string(*best) : "-", std::to_string(cert.value()),
                  CheckStatus::Skipped, ""};
    if (!best) {
        optimal.note = "solver budget exhausted";
    } else if (valid) {
        optimal.status = cert.value() == *best ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
        optimal.note = "invalid certificate";
    }
    r.checks.push_back(optimal);
    if (cert.kind == ForestKind::Forest) {
        r.a = best;
    }
    return r;
}

unsigned worker_count() {
    if (const char* env = std::getenv("IFL_THREADS")) {
        const int value = std::atoi(env);
        if (value >= 1) {
            return static_cast<unsigned>(value);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct Entry {
    int line;
    std::function<std::string()> run;
};

bool is_plane_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("outer ", 0) == 0 || line.rfind("# PMGRAPH", 0) == 0) {
            return true;
        }
    }
    return false;
}

std::string run_file(const std::string& label, const std::string& path, const VerifyOptions& options) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    if (is_plane_file(text)) {
        const PlaneMultigraph pm = read_pmgraph(in);
        return verify_bounds(label, pm.graph(), pm, options).text();
    }
    return verify_bounds(label, read_mgraph(in), std::nullopt, options).text();
}

} // namespace

SuiteResult run_suite(const std::string& manifest_path, const VerifyOptions& options) {
    SuiteResult result;
    std::string manifest;
    try {
        manifest = read_file(manifest_path);
    } catch (const std::exception& e) {
        result.report = std::string("error ") + e.what() + '\n';
        result.exit_code = 2;
        return result;
    }
    const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
    auto resolve = [&](const std::string& p) { return (base / p).string(); };

    std::vector<Entry> entries;
    std::istringstream in(manifest);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::vector<std::string> t;
        for (std::string w; ss >> w;) {
            t.push_back(w);
        }
        if (t.empty()) {
            continue;
        }
        if (t[0] == "family" && t.size() == 3) {
            Family family;
            int k = 0;
            try {
                family = parse_family(t[1]);
                k = std::stoi(t[2]);
            } catch (const std::exception& e) {
                result.report = "error line " + std::to_string(number) + ": " + e.what() + '\n';
                result.exit_code = 2;
                return result;
            }
            const std::string label = "family-" + t[1] + "-" + t[2];
            entries.push_back({number, [=] {
                                   const FamilyInstance inst = generate(family, k);
                                   VerificationReport r = verify_bounds(label, inst.pm.graph(), inst.pm, options);
                                   const bool counts = r.n == inst.expected_n && r.m == inst.expected_m &&
                                                       r.k == inst.expected_pairs;
                                   r.checks.push_back({"expected-counts",
                                                       std::to_string(inst.expected_n) + "/" +
                                                           std::to_string(inst.expected_m) + "/" +
                                                           std::to_string(inst.expected_pairs),
                                                       std::to_string(r.n) + "/" + std::to_string(r.m) + "/" +
                                                           std::to_string(r.k),
                                                       counts ? CheckStatus::Pass : CheckStatus::Fail, "n/m/k"});
                                   Check value{"expected-a", std::to_string(inst.expected_a),
                                               r.a ? std::to_string(*r.a) : "-", CheckStatus::Skipped, ""};
                                   if (r.a) {
                                       value.status = *r.a == inst.expected_a ? CheckStatus::Pass : CheckStatus::Fail;
                                   }
                                   r.checks.push_back(value);
                                   return r.text();
                               }});
        } else if (t[0] == "file" && t.size() == 2) {
            const std::string path = resolve(t[1]);
            entries.push_back({number, [=] { return run_file(t[1], path, options); }});
        } else if (t[0] == "check-cert" && t.size() == 3) {
            const std::string graph_path = resolve(t[1]);
            const std::string cert_path = resolve(t[2]);
            const std::string label = t[1] + ":" + t[2];
            entries.push_back({number, [=] {
                                   std::istringstream g_in(read_file(graph_path));
                                   const Multigraph g = read_any_graph(g_in);
                                   std::istringstream c_in(read_file(cert_path));
                                   return verify_certificate(label, g, read_certificate(c_in), options).text();
                               }});
        } else {
            result.report = "error line " + std::to_string(number) + ": unknown manifest entry\n";
            result.exit_code = 2;
            return result;
        }
    }

    std::vector<std::string> outputs(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                outputs[i] = entries[i].run();
            } catch (const std::exception& e) {
                outputs[i] = "entry line " + std::to_string(entries[i].line) + "\nerror " + e.what() + "\nresult FAIL\n";
            }
        }
    };
    const unsigned threads = std::min<unsigned>(worker_count(), std::max<std::size_t>(1, entries.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& th : pool) {
        th.join();
    }
    for (const std::string& out : outputs) {
        result.report += out;
        if (out.find("result FAIL") != std::string::npos) {
            result.exit_code = 1;
        }
    }
    return result;
}

} // namespace ifl
