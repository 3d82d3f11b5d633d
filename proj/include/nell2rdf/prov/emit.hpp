// Emission of the provenance metadata graph: belief typing, component
// executions with their tokens and payloads, and the accompanying T-Box.
//
// Every minted metadata IRI derives from the belief's statement hash, never
// from the model-specific attachment IRI, so the five reification models
// produce identical execution/token/node identifiers for the same belief.
// Minting scheme (hex128 = first 16 bytes of SHA-256, lowercase hex):
//   execution = hex128(belief_hex "/" component "/" iteration "/" index)
//   token     = hex128(exec_hex "/token")
//   any child = hex128(parent_hex "/" role "/" ordinal)
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nell2rdf/ingest/belief_line.hpp"
#include "nell2rdf/prov/records.hpp"
#include "nell2rdf/rdf/term.hpp"
#include "nell2rdf/translate/namespaces.hpp"

namespace nell2rdf::prov {

// Vocabulary IRI for a class or property name, e.g. vocab_term(ns, "Belief").
rdf::Term vocab_term(const translate::Namespaces& ns, const char* local);

// The fixed individual representing a component.
rdf::Term component_iri(const translate::Namespaces& ns, ComponentId id);

// Types the attachment as PromotedBelief/CandidateBelief; promoted beliefs
// also carry iterationOfPromotion and probabilityOfBelief.
std::vector<rdf::Triple> emit_belief_node(const rdf::Term& attachment, ingest::BeliefKind kind,
                                          const std::optional<std::uint64_t>& iteration,
                                          const std::optional<std::string>& probability,
                                          const translate::Namespaces& ns);

// The generic execution triples (generatedBy, type, associatedWith,
// iteration, probability, atTime, source), the token, and the
// component-specific payload.  `index` is the record's position within the
// belief's field-13 list and keeps repeated executions of one component
// distinct.
std::vector<rdf::Triple> emit_execution(const rdf::Term& attachment, const ComponentExecution& e,
                                        const translate::Namespaces& ns,
                                        const std::string& belief_hex, std::size_t index);

// hasToken + typed token node with its value properties.
std::vector<rdf::Triple> emit_token(const rdf::Term& exec, const Token& t,
                                    const translate::Namespaces& ns,
                                    const std::string& exec_hex);

// The complete provenance T-Box: class hierarchy, property declarations
// with domains/ranges, direction individuals, component individuals.
std::vector<rdf::Triple> emit_ontology(const translate::Namespaces& ns);

}  // namespace nell2rdf::prov
