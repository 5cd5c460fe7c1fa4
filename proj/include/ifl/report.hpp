#pragma once

#include "ifl/embedding.hpp"
#include "ifl/rational.hpp"
#include "ifl/solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ifl {

enum class CheckStatus { Pass, Fail, Skipped, Info };

std::string to_string(CheckStatus status);

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::Skipped;
    std::string note;
};

struct VerificationReport {
    std::string id;
    int n = 0;
    int m = 0;
    int k = 0;
    int p = 0;
    bool triangle_free = false;
    std::string planar;         // "yes", "no", "unknown"
    std::string two_face_free;  // "yes", "no", "unknown"
    std::optional<int> a;
    std::optional<int> a_linear;
    std::vector<Check> checks;

    bool passed() const;
    std::string text() const;
};

struct VerifyOptions {
    SolverOptions solver;
    EmbeddingSearchOptions embedding;
};

/// Every lower bound compared with exact solver values. Bounds that need
/// planarity, triangle-freeness or a 2-face-free embedding are skipped when
/// the gate fails or cannot be decided; an embedding, when given, settles
/// planarity and may settle 2-face-freeness.
VerificationReport verify_bounds(const std::string& id, const Multigraph& g,
                                 const std::optional<PlaneMultigraph>& embedding, const VerifyOptions& options = {});

/// Named checks on a claimed certificate: validity and optimality.
VerificationReport verify_certificate(const std::string& id, const Multigraph& g, const ForestCertificate& cert,
                                      const VerifyOptions& options = {});

struct SuiteResult {
    std::string report;
    int exit_code = 0; // 0 all pass, 1 some check failed, 2 configuration error
};

/// Manifest lines: "family <k4|dk4|nk|mk> <k>", "file <path>",
/// "check-cert <graph> <cert>". Paths are relative to the manifest. Entries
/// run on up to IFL_THREADS workers; output follows manifest order.
SuiteResult run_suite(const std::string& manifest_path, const VerifyOptions& options = {});

/// Worker count from IFL_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

} // namespace ifl
