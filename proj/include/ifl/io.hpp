#pragma once

#include "ifl/embedding.hpp"
#include "ifl/reductions.hpp"
#include "ifl/solvers.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ifl {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// MGRAPH v1: "n m", then m lines "u v". '#' starts a comment.
Multigraph read_mgraph(std::istream& in);
void write_mgraph(std::ostream& out, const Multigraph& g);

// PMGRAPH v1: an MGRAPH block followed by
//   rot v: d1 d2 ...
//   outer c f
//   place c unbounded | place c in h.f
//   isolated v unbounded | isolated v in h.f
// Every edge component needs an outer line; missing rot lines mean an empty
// rotation and missing place lines mean unbounded.
PlaneMultigraph read_pmgraph(std::istream& in);
void write_pmgraph(std::ostream& out, const PlaneMultigraph& pm);

/// Reads either format and keeps only the graph.
Multigraph read_any_graph(std::istream& in);

// CERT v1: "kind <kind>", "vertices v1 v2 ...".
ForestCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const ForestCertificate& cert);

// COLORING v1: "colors c", then one "color v i" per vertex.
AcyclicColoring read_coloring(std::istream& in, int n);
void write_coloring(std::ostream& out, const AcyclicColoring& col);

// MAP v1: "kind", "k", one "map old new" per input vertex and one
// "added w u v" per subdivision vertex.
void write_map(std::ostream& out, const ReductionRecord& rec);

/// Whole-file helpers; throw std::runtime_error when the file cannot be
/// opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace ifl
