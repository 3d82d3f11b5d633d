// Translation of ontology rows into RDFS/OWL triples.  Sixteen predicate
// rules, three of them conditional; the `mutexpredicates` guard needs to
// know whether the subject is a class or a property, which only
// `memberofsets` rows reveal — hence the two-pass design: observe() every
// row first, translate afterwards against the immutable index.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nell2rdf/ingest/dialect.hpp"
#include "nell2rdf/ingest/ontology_line.hpp"
#include "nell2rdf/rdf/term.hpp"
#include "nell2rdf/translate/namespaces.hpp"
#include "nell2rdf/util/diagnostics.hpp"

namespace nell2rdf::translate {

class OntologyIndex {
public:
    // Pass 1: record memberofsets and range facts.
    void observe(const ingest::OntologyAssertion& a, const ingest::Dialect& dialect);

    bool is_class(const std::string& token) const { return classes_.count(token) != 0; }
    bool is_property(const std::string& token) const { return properties_.count(token) != 0; }

    // The relation's declared range token, if any ("city", "xsd:integer", ...).
    std::optional<std::string> range_of(const std::string& relation) const;

    // The XSD datatype IRI when the relation's range is a datatype token,
    // nullopt when it is a category (or undeclared).
    std::optional<std::string> datatype_range(const std::string& relation,
                                              const ingest::Dialect& dialect) const;

private:
    std::unordered_set<std::string> classes_;
    std::unordered_set<std::string> properties_;
    std::unordered_map<std::string, std::string> ranges_;
};

// Pass 2: emit the triples for one assertion.  Unhandled value shapes
// (non-boolean object on a boolean-valued rule, memberofsets object other
// than rtwcategory/rtwrelation, mutexpredicates subject of unknown kind)
// emit a diagnostic and no triple.
std::vector<rdf::Triple> translate_ontology_assertion(const ingest::OntologyAssertion& a,
                                                      const OntologyIndex& index,
                                                      const Namespaces& ns,
                                                      const ingest::Dialect& dialect,
                                                      DiagnosticSink* diag = nullptr,
                                                      std::uint64_t line_number = 0);

}  // namespace nell2rdf::translate
