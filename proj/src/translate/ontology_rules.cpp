#include "nell2rdf/translate/ontology_rules.hpp"

#include "nell2rdf/rdf/canonical.hpp"
#include "nell2rdf/rdf/vocab.hpp"
#include "nell2rdf/translate/belief_rdf.hpp"

namespace nell2rdf::translate {

namespace v = rdf::vocab;
using ingest::OntologyAssertion;
using ingest::OntologyPredicate;
using rdf::Term;
using rdf::Triple;

void OntologyIndex::observe(const OntologyAssertion& a, const ingest::Dialect&) {
    switch (a.predicate) {
        case OntologyPredicate::MemberOfSets:
            if (a.object == "rtwcategory")
                classes_.insert(a.subject);
            else if (a.object == "rtwrelation")
                properties_.insert(a.subject);
            break;
        case OntologyPredicate::Range:
            ranges_.emplace(a.subject, a.object);
            break;
        default:
            break;
    }
}

std::optional<std::string> OntologyIndex::range_of(const std::string& relation) const {
    auto it = ranges_.find(relation);
    if (it == ranges_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> OntologyIndex::datatype_range(const std::string& relation,
                                                         const ingest::Dialect& dialect) const {
    auto range = range_of(relation);
    if (!range) return std::nullopt;
    const std::string& prefix = dialect.datatype_range_prefix;
    if (range->rfind(prefix, 0) != 0) return std::nullopt;
    return std::string(v::kXsd) + range->substr(prefix.size());
}

namespace {

void diagnose(DiagnosticSink* diag, std::uint64_t line, const std::string& message) {
    if (diag) diag->emit({kUnhandledOntologyValue, line, message});
}

// Literal(?object, xsd:boolean) rules share this shape.
void boolean_rule(std::vector<Triple>& out, const Term& subject, const std::string& property,
                  const OntologyAssertion& a, const Namespaces& ns, DiagnosticSink* diag,
                  std::uint64_t line) {
    auto value = rdf::canonical_boolean(a.object);
    if (!value.ok()) {
        diagnose(diag, line, property + " expects a boolean, got '" + a.object + "'");
        return;
    }
    out.push_back(
        {subject, Term::iri(ns.vocab + property), Term::literal(value.take(), v::xsd("boolean"))});
}

}  // namespace

std::vector<Triple> translate_ontology_assertion(const OntologyAssertion& a,
                                                 const OntologyIndex& index, const Namespaces& ns,
                                                 const ingest::Dialect& dialect,
                                                 DiagnosticSink* diag, std::uint64_t line) {
    std::vector<Triple> out;
    auto subject = mint_entity_iri(a.subject, ns);
    if (!subject.ok()) {
        diagnose(diag, line, "unusable subject token: " + subject.error().message);
        return out;
    }
    const Term& s = subject.value();
    auto object_iri = [&]() -> std::optional<Term> {
        auto o = mint_entity_iri(a.object, ns);
        if (!o.ok()) {
            diagnose(diag, line, "unusable object token: " + o.error().message);
            return std::nullopt;
        }
        return o.take();
    };

    switch (a.predicate) {
        case OntologyPredicate::Antireflexive: {
            auto value = rdf::canonical_boolean(a.object);
            if (!value.ok() || value.value() != "true") {
                diagnose(diag, line,
                         "antireflexive only translates for 'true', got '" + a.object + "'");
                break;
            }
            out.push_back({s, v::rdf_type(), v::owl_irreflexive_property()});
            break;
        }
        case OntologyPredicate::Antisymmetric:
            boolean_rule(out, s, "antisymmetric", a, ns, diag, line);
            break;
        case OntologyPredicate::Description:
            out.push_back({s, v::rdfs_comment(), Term::lang_literal(a.object, "en")});
            break;
        case OntologyPredicate::Domain: {
            if (auto o = object_iri()) out.push_back({s, v::rdfs_domain(), *o});
            break;
        }
        case OntologyPredicate::DomainWithinRange:
            boolean_rule(out, s, "domainWithinRange", a, ns, diag, line);
            break;
        case OntologyPredicate::Generalizations: {
            if (auto o = object_iri()) out.push_back({s, v::rdfs_sub_class_of(), *o});
            break;
        }
        case OntologyPredicate::HumanFormat:
            out.push_back({s, Term::iri(ns.vocab + "humanFormat"), Term::literal(a.object)});
            break;
        case OntologyPredicate::InstanceType: {
            if (auto o = object_iri()) out.push_back({s, Term::iri(ns.vocab + "instanceType"), *o});
            break;
        }
        case OntologyPredicate::Inverse: {
            if (auto o = object_iri()) out.push_back({s, v::owl_inverse_of(), *o});
            break;
        }
        case OntologyPredicate::MemberOfSets: {
            if (a.object == "rtwcategory") {
                out.push_back({s, v::rdf_type(), v::rdfs_class()});
            } else if (a.object == "rtwrelation") {
                out.push_back({s, v::rdf_type(), v::rdf_property()});
            } else if (auto o = object_iri()) {
                // Set tokens beyond the two documented ones are kept via a
                // dedicated property rather than dropped.
                out.push_back({s, Term::iri(ns.vocab + "memberOfSets"), *o});
                diagnose(diag, line, "memberofsets object '" + a.object +
                                         "' is neither rtwcategory nor rtwrelation");
            }
            break;
        }
        case OntologyPredicate::MutexPredicates: {
            bool cls = index.is_class(a.subject);
            bool prop = index.is_property(a.subject);
            if (!cls && !prop) {
                diagnose(diag, line, "mutexpredicates subject '" + a.subject +
                                         "' has no memberofsets classification");
                break;
            }
            if (auto o = object_iri()) {
                out.push_back(
                    {s, cls ? v::owl_disjoint_with() : v::owl_property_disjoint_with(), *o});
            }
            break;
        }
        case OntologyPredicate::NrOfValues: {
            // Only the "is 1" branch exists; other values carry no OWL meaning.
            if (a.object == "1")
                out.push_back({s, v::rdf_type(), v::owl_functional_property()});
            break;
        }
        case OntologyPredicate::Populate:
            boolean_rule(out, s, "populate", a, ns, diag, line);
            break;
        case OntologyPredicate::Range: {
            const std::string& prefix = dialect.datatype_range_prefix;
            if (a.object.rfind(prefix, 0) == 0) {
                out.push_back({s, v::rdfs_range(),
                               Term::iri(std::string(v::kXsd) + a.object.substr(prefix.size()))});
            } else if (auto o = object_iri()) {
                out.push_back({s, v::rdfs_range(), *o});
            }
            break;
        }
        case OntologyPredicate::RangeWithinDomain:
            boolean_rule(out, s, "rangeWithinDomain", a, ns, diag, line);
            break;
        case OntologyPredicate::Visible:
            boolean_rule(out, s, "visible", a, ns, diag, line);
            break;
    }
    return out;
}

}  // namespace nell2rdf::translate
