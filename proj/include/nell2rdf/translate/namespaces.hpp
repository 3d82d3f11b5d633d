#pragma once

#include <string>
#include <utility>

namespace nell2rdf::translate {

// The two IRI namespaces everything minted by the converter lives under:
// entities directly under the base, the NELL2RDF vocabulary (custom ontology
// predicates plus the provenance terms) under a fixed suffix of it.
struct Namespaces {
    std::string base;   // ends with '/'
    std::string vocab;  // base + "prov/ontology/"

    static Namespaces from_base(std::string base_iri) {
        if (base_iri.empty() || base_iri.back() != '/') base_iri += '/';
        Namespaces ns;
        ns.vocab = base_iri + "prov/ontology/";
        ns.base = std::move(base_iri);
        return ns;
    }
};

inline constexpr const char* kDefaultBaseIri = "http://nell2rdf.example/";

}  // namespace nell2rdf::translate
