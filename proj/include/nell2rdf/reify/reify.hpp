// The five statement-annotation encodings.  Every model attaches its
// metadata to a single attachment term whose identifying hash is computed
// from the base statement alone, so the same belief gets equivalent (and
// mechanically comparable) metadata in every model.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nell2rdf/ingest/belief_line.hpp"
#include "nell2rdf/rdf/term.hpp"
#include "nell2rdf/translate/belief_rdf.hpp"
#include "nell2rdf/translate/namespaces.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::reify {

enum class ModelId { RdfReification, NAry, NamedGraphs, SingletonProperty, NdFluents };

inline constexpr std::size_t kModelCount = 5;
const std::array<ModelId, kModelCount>& all_models();

// CLI spellings: reification | nary | ngraphs | singleton | ndfluents.
const char* model_token(ModelId m);
std::optional<ModelId> model_from_token(std::string_view token);

rdf::Triple as_triple(const translate::BaseStatement& s);

// 32 lowercase hex chars identifying the statement: a 128-bit truncation of
// SHA-256 over its canonical N-Triples line.
std::string statement_hex(const translate::BaseStatement& s);

// <{base}belief/{hex}> — the statement's identity, independent of model.
rdf::Term mint_belief_id(const translate::BaseStatement& s, const translate::Namespaces& ns);

struct ReifiedStatement {
    translate::BaseStatement base;
    ModelId model = ModelId::RdfReification;
    std::vector<rdf::Quad> statement_triples;
    rdf::Term attachment;  // always an IRI; metadata anchors here
};

// Encodes one statement.  Candidate beliefs are not asserted as plain base
// triples unless `assert_candidates` is set; promoted beliefs are asserted
// in the RdfReification and NAry models (the other three carry the base
// statement structurally).
ReifiedStatement reify(const translate::BaseStatement& s, ModelId model,
                       ingest::BeliefKind kind, const translate::Namespaces& ns,
                       bool assert_candidates = false);

struct DereifiedStatement {
    translate::BaseStatement base;
    rdf::Term attachment;
};

struct DereifyResult {
    std::vector<DereifiedStatement> statements;
    // Everything that was not part of a statement encoding (metadata triples,
    // dataset descriptors, ...), in input order.
    std::vector<rdf::Quad> metadata;
};

// Exact inverse of reify over converter output; asserted copies of recovered
// base statements are absorbed, not reported as metadata.
Result<DereifyResult> dereify(const std::vector<rdf::Quad>& input, ModelId model);

}  // namespace nell2rdf::reify
