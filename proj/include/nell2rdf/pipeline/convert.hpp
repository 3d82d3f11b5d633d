// End-to-end streaming driver: ontology load, belief conversion under the
// selected models, dataset metadata and run statistics.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nell2rdf/ingest/belief_line.hpp"
#include "nell2rdf/ingest/dialect.hpp"
#include "nell2rdf/prov/component.hpp"
#include "nell2rdf/rdf/term.hpp"
#include "nell2rdf/reify/reify.hpp"
#include "nell2rdf/translate/namespaces.hpp"
#include "nell2rdf/util/diagnostics.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::pipeline {

struct RunConfig {
    std::string ontology_path;
    std::string beliefs_path;
    ingest::BeliefKind kind = ingest::BeliefKind::Promoted;
    // Empty selects all five models.
    std::vector<reify::ModelId> models;
    std::string base_iri = translate::kDefaultBaseIri;
    std::string out_dir;
    bool deterministic = false;
    bool gzip = false;
    bool assert_candidates = false;
    // Also serialize the named-graphs dump as TriG (in addition to N-Quads).
    bool trig = false;
    unsigned workers = 1;
};

/// Line counts for one model dump. `statements` counts only the statement
/// encoding itself (4/2/1/2/3-or-5 per belief), `asserted` the plain base
/// copies added for promoted (or --assert-candidates) runs under
/// reification and n-ary.
struct ModelStats {
    std::uint64_t statements = 0;
    std::uint64_t asserted = 0;
    std::uint64_t metadata = 0;   // belief node + executions + tokens + payloads
    std::uint64_t auxiliary = 0;  // labels and category types
    std::uint64_t total = 0;
    std::string file;
};

struct RunStats {
    std::uint64_t rows_read = 0;  // data rows (headers and blank lines excluded)
    std::uint64_t rows_skipped = 0;
    std::uint64_t beliefs_converted = 0;
    std::uint64_t triples_emitted = 0;  // default-graph lines across all dumps
    std::uint64_t quads_emitted = 0;    // named-graph lines (ngraphs model)
    std::uint64_t ontology_triples = 0;
    std::uint64_t prov_ontology_triples = 0;
    std::array<std::uint64_t, prov::kComponentCount> executions_by_component{};
    std::uint64_t diagnostics = 0;
    std::uint64_t wall_ms = 0;
    std::map<std::string, ModelStats> per_model;  // keyed by model token
};

/// `nellrdf.promoted.reification.nt`, `nellrdf.candidates.ngraphs.nq.gz`, ...
/// The named-graphs dump always uses the quad syntax.
std::string dump_file_name(ingest::BeliefKind kind, reify::ModelId m, bool gzip);

/// VoID/DCAT description of a finished run: one dcat:Distribution per dump
/// file with its media type and model identifier.
std::vector<rdf::Triple> emit_dataset_metadata(const RunStats& stats, const RunConfig& cfg);

/// Stats serialization; wall time is omitted under the deterministic flag.
std::string stats_to_json(const RunStats& stats, bool deterministic);

/// Runs the full conversion. Row-level problems become diagnostics and skip
/// counts; only I/O failures (unreadable input, unwritable output) are
/// returned as errors.
Result<RunStats> run_convert(const RunConfig& cfg, DiagnosticSink* diag = nullptr);

}  // namespace nell2rdf::pipeline
