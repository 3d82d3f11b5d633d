#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nell2rdf/ingest/dialect.hpp"
#include "nell2rdf/util/diagnostics.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::ingest {

/// Promoted rows come from the .esv dump (one promotion iteration and one
/// confidence score); candidate rows from the .cesv dump (per-component
/// lists in fields 4 and 5).
enum class BeliefKind { Promoted, Candidate };

const char* belief_kind_name(BeliefKind k);

/// One parsed belief row. Fields 4, 5 and 13 keep their raw strings as well:
/// field 13 is handed to the provenance grammar, and the raw forms make
/// join(split(line)) == line testable.
struct NellBelief {
    BeliefKind kind = BeliefKind::Promoted;
    std::string entity;    // field 1
    std::string relation;  // field 2
    std::string value;     // field 3

    std::string iterations_raw;     // field 4
    std::string probability_raw;    // field 5
    std::string source_summary;     // field 6 (never parsed; summary of 13)
    std::vector<std::string> entity_labels;  // field 7
    std::vector<std::string> value_labels;   // field 8
    std::optional<std::string> entity_best_label;  // field 9
    std::optional<std::string> value_best_label;   // field 10
    std::vector<std::string> entity_categories;  // field 11
    std::vector<std::string> value_categories;   // field 12
    std::string candidate_source;  // field 13

    // Promoted rows only.
    std::uint64_t promotion_iteration = 0;
    std::string promotion_probability;  // canonical decimal in [0,1]

    // Candidate rows only; aligned 1:1 with the records of field 13.
    std::vector<std::uint64_t> component_iterations;
    std::vector<std::string> component_probabilities;
};

/// True for header lines ("Entity\tRelation...").
bool is_header_line(const std::string& line, const Dialect& dialect);

/// Parses one 13-field belief row. Rows failing validation return an error
/// (the caller skips and counts them). A promoted row with probability below
/// 0.9 is accepted but flagged through `diag` with one
/// PromotionThresholdWarning.
Result<NellBelief> parse_belief_line(const std::string& line, BeliefKind kind,
                                     const Dialect& dialect, DiagnosticSink* diag,
                                     std::uint64_t line_number = 0);

}  // namespace nell2rdf::ingest
