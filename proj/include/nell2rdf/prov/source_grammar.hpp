// Parser for field 13 (Candidate Source): a bracketed list of component
// execution records.  The concrete syntax is documented in
// docs/field13-grammar.ebnf; the per-component payload sub-grammars are
// table-driven so a different dump dialect can be swapped in.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nell2rdf/prov/records.hpp"
#include "nell2rdf/util/diagnostics.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::prov {

// Counts top-level records without interpreting payloads.  Used by ingest
// to cross-check fields 4/5 arity before full parsing.  Empty input counts
// as zero records.
Result<std::size_t> count_source_records(const std::string& field13);

struct ParseSourceOptions {
    // Tags two-part tokens: true on `generalizations` beliefs.
    bool generalization_belief = false;
    // Receives UnknownComponent diagnostics; unknown records are skipped.
    DiagnosticSink* diagnostics = nullptr;
    std::uint64_t line_number = 0;
};

// Parses every record in order.  `iterations`/`probabilities` are the
// already-split fields 4/5 of a Candidate row (empty for Promoted rows);
// when non-empty their arity must match the record count.  Per-record
// iteration/probability values always come from the record itself.
Result<std::vector<ComponentExecution>> parse_candidate_source(
    const std::string& field13, const std::vector<std::uint64_t>& iterations,
    const std::vector<std::string>& probabilities, const ParseSourceOptions& opts = {});

// Parses one parenthesized token, e.g. ("paris","france") or
// ("paris",48.85,2.35).  LatLong always yields a GeoToken; other
// components yield a RelationToken, or a GeneralizationToken when
// `generalization` is set (the caller knows the belief predicate).
Result<Token> parse_token(std::string_view parenthesized, ComponentId component,
                          bool generalization = false);

}  // namespace nell2rdf::prov
