#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nell2rdf/rdf/term.hpp"

namespace nell2rdf::rdf {

// Minimal reader for the output grammars the converter produces (N-Triples,
// N-Quads and the TriG subset emitted by TrigWriter). It exists for the
// round-trip tests and the cross-model verifier; it is not a general RDF
// parser.

enum class SyntaxFormat { NTriples, NQuads, Trig };

/// Stateful line reader; TriG needs the graph-block state across lines.
class DocumentReader {
  public:
    explicit DocumentReader(SyntaxFormat format) : format_(format) {}

    /// Parses one input line. Returns nullopt for blank lines, comments and
    /// TriG block delimiters; a Quad otherwise.
    Result<std::optional<Quad>> read_line(std::string_view line);

    /// True when no TriG block is left open.
    bool balanced() const { return !in_block_; }

  private:
    SyntaxFormat format_;
    bool in_block_ = false;
    Term block_graph_;
};

/// Convenience wrapper: parses an entire document held in memory.
Result<std::vector<Quad>> parse_document(std::string_view text, SyntaxFormat format);

}  // namespace nell2rdf::rdf
