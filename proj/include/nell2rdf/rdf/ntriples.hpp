#pragma once

#include <string>

#include "nell2rdf/rdf/term.hpp"

namespace nell2rdf::rdf {

// Line-oriented serializers for N-Triples, N-Quads and TriG. All of them
// append UTF-8 bytes with LF line endings to a caller-owned string buffer;
// output is byte-identical across runs for the same input sequence.
//
// Literal escaping: exactly \" \\ \n \r \t, plus \uXXXX for the remaining
// control characters below U+0020. Everything else is written raw.

void append_term(std::string& out, const Term& t);

/// `<s> <p> <o> .\n`
void append_triple_line(std::string& out, const Triple& t);

/// N-Quads; quads in the default graph omit the graph term.
void append_quad_line(std::string& out, const Quad& q);

/// The canonical statement rendering used for content hashing: the
/// N-Triples line without the trailing newline.
std::string statement_key(const Triple& t);

/// TriG writer. Named quads open a `<g> {` block; consecutive quads sharing
/// a graph stay in one block (the converter always emits one belief's quads
/// contiguously, so each graph serializes as a single block). Default-graph
/// quads are written as bare triple lines.
class TrigWriter {
  public:
    /// Appends the TriG rendering of `q` to `out`.
    void append(std::string& out, const Quad& q);
    /// Closes a dangling graph block, if any.
    void finish(std::string& out);

  private:
    bool in_block_ = false;
    Term current_graph_;
};

}  // namespace nell2rdf::rdf
