#pragma once

#include <array>
#include <string>
#include <string_view>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf::ingest {

/// The 16 predicates a NELL ontology dump can carry.
enum class OntologyPredicate {
    Antireflexive,
    Antisymmetric,
    Description,
    Domain,
    DomainWithinRange,
    Generalizations,
    HumanFormat,
    InstanceType,
    Inverse,
    MemberOfSets,
    MutexPredicates,
    NrOfValues,
    Populate,
    Range,
    RangeWithinDomain,
    Visible,
};

inline constexpr std::size_t kOntologyPredicateCount = 16;

/// All predicates, in enum order; handy for exhaustiveness tests.
const std::array<OntologyPredicate, kOntologyPredicateCount>& all_ontology_predicates();

const char* ontology_predicate_token(OntologyPredicate p);

struct OntologyAssertion {
    std::string subject;  // NELL token, e.g. "concept:person"
    OntologyPredicate predicate;
    std::string object;  // NELL token or scalar value
};

/// Parses one three-field ontology row.
Result<OntologyAssertion> parse_ontology_line(const std::string& line);

}  // namespace nell2rdf::ingest
