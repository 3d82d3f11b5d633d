// Converts a parsed belief row into its base RDF statement plus the
// auxiliary label/type triples carried by fields 7-12.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nell2rdf/ingest/belief_line.hpp"
#include "nell2rdf/rdf/term.hpp"
#include "nell2rdf/translate/namespaces.hpp"
#include "nell2rdf/translate/ontology_rules.hpp"
#include "nell2rdf/util/diagnostics.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::translate {

struct BaseStatement {
    rdf::Term subject;
    rdf::Term predicate;
    rdf::Term object;
    bool operator==(const BaseStatement&) const = default;
};

// Mints the IRI for a NELL token: a leading `concept:` marker is dropped,
// the remaining ':'-separated parts become path segments under ns.base and
// each segment is percent-encoded injectively, so distinct tokens always
// yield distinct IRIs.  "concept:city:paris" -> <{base}city/paris>.
Result<rdf::Term> mint_entity_iri(std::string_view token, const Namespaces& ns);

struct TranslatedBelief {
    BaseStatement base;
    std::vector<rdf::Triple> auxiliary;  // rdfs:label, skos:prefLabel, rdf:type
    bool generalization = false;         // belief predicate is `generalizations`
};

// The object becomes a typed literal when the ontology declared a datatype
// range for the relation, an entity IRI otherwise.  Label/type annotations
// aimed at a literal object cannot be expressed; they are dropped with a
// diagnostic.
Result<TranslatedBelief> translate_belief(const ingest::NellBelief& b, const OntologyIndex& index,
                                          const Namespaces& ns, const ingest::Dialect& dialect,
                                          DiagnosticSink* diag = nullptr,
                                          std::uint64_t line_number = 0);

}  // namespace nell2rdf::translate
