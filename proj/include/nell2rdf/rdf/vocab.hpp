#pragma once

#include <string>

#include "nell2rdf/rdf/term.hpp"

namespace nell2rdf::rdf::vocab {

// W3C namespaces
inline constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* kProv = "http://www.w3.org/ns/prov#";
inline constexpr const char* kVoid = "http://rdfs.org/ns/void#";
inline constexpr const char* kDcat = "http://www.w3.org/ns/dcat#";
inline constexpr const char* kDct = "http://purl.org/dc/terms/";

// Statement-annotation vocabularies. singletonPropertyOf lives in the RDF
// namespace, as proposed by the singleton-property authors; the fluents
// vocabulary provides contextualPartOf / contextualExtent.
inline constexpr const char* kNdFluents = "http://purl.org/NET/ndfluents#";

inline std::string rdf(const char* local) { return std::string(kRdf) + local; }
inline std::string rdfs(const char* local) { return std::string(kRdfs) + local; }
inline std::string owl(const char* local) { return std::string(kOwl) + local; }
inline std::string xsd(const char* local) { return std::string(kXsd) + local; }
inline std::string skos(const char* local) { return std::string(kSkos) + local; }
inline std::string prov(const char* local) { return std::string(kProv) + local; }
inline std::string nd(const char* local) { return std::string(kNdFluents) + local; }

inline Term rdf_type() { return Term::iri(rdf("type")); }
inline Term rdf_statement() { return Term::iri(rdf("Statement")); }
inline Term rdf_subject() { return Term::iri(rdf("subject")); }
inline Term rdf_predicate() { return Term::iri(rdf("predicate")); }
inline Term rdf_object() { return Term::iri(rdf("object")); }
inline Term rdf_first() { return Term::iri(rdf("first")); }
inline Term rdf_rest() { return Term::iri(rdf("rest")); }
inline Term rdf_nil() { return Term::iri(rdf("nil")); }
inline Term rdf_property() { return Term::iri(rdf("Property")); }
inline Term rdf_list() { return Term::iri(rdf("List")); }
inline Term rdf_lang_string() { return Term::iri(rdf("langString")); }
inline Term singleton_property_of() { return Term::iri(rdf("singletonPropertyOf")); }

inline Term rdfs_label() { return Term::iri(rdfs("label")); }
inline Term rdfs_comment() { return Term::iri(rdfs("comment")); }
inline Term rdfs_class() { return Term::iri(rdfs("Class")); }
inline Term rdfs_sub_class_of() { return Term::iri(rdfs("subClassOf")); }
inline Term rdfs_sub_property_of() { return Term::iri(rdfs("subPropertyOf")); }
inline Term rdfs_domain() { return Term::iri(rdfs("domain")); }
inline Term rdfs_range() { return Term::iri(rdfs("range")); }

inline Term owl_thing() { return Term::iri(owl("Thing")); }
inline Term owl_irreflexive_property() { return Term::iri(owl("IrreflexiveProperty")); }
inline Term owl_functional_property() { return Term::iri(owl("FunctionalProperty")); }
inline Term owl_inverse_of() { return Term::iri(owl("inverseOf")); }
inline Term owl_disjoint_with() { return Term::iri(owl("disjointWith")); }
inline Term owl_property_disjoint_with() { return Term::iri(owl("propertyDisjointWith")); }
inline Term owl_datatype_property() { return Term::iri(owl("DatatypeProperty")); }
inline Term owl_object_property() { return Term::iri(owl("ObjectProperty")); }
inline Term owl_equivalent_class() { return Term::iri(owl("equivalentClass")); }
inline Term owl_named_individual() { return Term::iri(owl("NamedIndividual")); }

inline Term skos_pref_label() { return Term::iri(skos("prefLabel")); }

inline Term nd_contextual_part_of() { return Term::iri(nd("contextualPartOf")); }
inline Term nd_contextual_extent() { return Term::iri(nd("contextualExtent")); }

inline Term xsd_string() { return Term::iri(xsd("string")); }
inline Term xsd_integer() { return Term::iri(xsd("integer")); }
inline Term xsd_decimal() { return Term::iri(xsd("decimal")); }
inline Term xsd_boolean() { return Term::iri(xsd("boolean")); }
inline Term xsd_date() { return Term::iri(xsd("date")); }
inline Term xsd_date_time() { return Term::iri(xsd("dateTime")); }
inline Term xsd_any_uri() { return Term::iri(xsd("anyURI")); }
inline Term xsd_non_negative_integer() { return Term::iri(xsd("nonNegativeInteger")); }

}  // namespace nell2rdf::rdf::vocab
