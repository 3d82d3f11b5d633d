#include "nell2rdf/translate/belief_rdf.hpp"

#include "nell2rdf/rdf/canonical.hpp"
#include "nell2rdf/rdf/vocab.hpp"
#include "nell2rdf/util/percent.hpp"

namespace nell2rdf::translate {

namespace v = rdf::vocab;
using rdf::Term;
using rdf::Triple;

namespace {

// NELL tokens are ':'-separated; a leading "concept" marker is structural
// and dropped.  "concept:city:paris" -> {"city", "paris"}.
std::vector<std::string_view> token_segments(std::string_view token) {
    std::vector<std::string_view> segs;
    std::size_t start = 0;
    while (start <= token.size()) {
        std::size_t colon = token.find(':', start);
        if (colon == std::string_view::npos) {
            segs.push_back(token.substr(start));
            break;
        }
        segs.push_back(token.substr(start, colon - start));
        start = colon + 1;
    }
    if (segs.size() > 1 && segs.front() == "concept") segs.erase(segs.begin());
    return segs;
}

// Canonicalizes a field-3 literal for the declared datatype; datatypes
// without a canonical form pass through unchanged.
Result<Term> typed_literal(const std::string& lexical, const std::string& datatype) {
    auto fail = [&](const Error& e) {
        return Error{Errc::InvalidLiteral,
                     "object literal does not match range " + datatype + ": " + e.message};
    };
    if (datatype == v::xsd("string")) return Term::literal(lexical);
    if (datatype == v::xsd("integer")) {
        auto c = rdf::canonical_integer(lexical);
        if (!c.ok()) return fail(c.error());
        return Term::literal(c.take(), datatype);
    }
    if (datatype == v::xsd("decimal")) {
        auto c = rdf::canonical_decimal(lexical);
        if (!c.ok()) return fail(c.error());
        return Term::literal(c.take(), datatype);
    }
    if (datatype == v::xsd("boolean")) {
        auto c = rdf::canonical_boolean(lexical);
        if (!c.ok()) return fail(c.error());
        return Term::literal(c.take(), datatype);
    }
    if (datatype == v::xsd("date")) {
        auto c = rdf::canonical_date(lexical);
        if (!c.ok()) return fail(c.error());
        return Term::literal(c.take(), datatype);
    }
    if (datatype == v::xsd("dateTime")) {
        auto c = rdf::canonical_datetime(lexical);
        if (!c.ok()) return fail(c.error());
        return Term::literal(c.take(), datatype);
    }
    return Term::literal(lexical, datatype);
}

}  // namespace

Result<Term> mint_entity_iri(std::string_view token, const Namespaces& ns) {
    if (token.empty()) return Error{Errc::EmptyToken, "empty NELL token"};
    std::string iri = ns.base;
    bool first = true;
    for (std::string_view seg : token_segments(token)) {
        if (!first) iri += '/';
        iri += percent_encode_segment(seg);
        first = false;
    }
    return Term::iri(std::move(iri));
}

Result<TranslatedBelief> translate_belief(const ingest::NellBelief& b, const OntologyIndex& index,
                                          const Namespaces& ns, const ingest::Dialect& dialect,
                                          DiagnosticSink* diag, std::uint64_t line_number) {
    TranslatedBelief t;

    auto subject = mint_entity_iri(b.entity, ns);
    if (!subject.ok()) return subject.error();
    t.base.subject = subject.take();

    auto predicate = mint_entity_iri(b.relation, ns);
    if (!predicate.ok()) return predicate.error();
    t.base.predicate = predicate.take();

    {
        auto segs = token_segments(b.relation);
        t.generalization = segs.size() == 1 && segs.front() == "generalizations";
    }

    if (auto datatype = index.datatype_range(b.relation, dialect)) {
        auto object = typed_literal(b.value, *datatype);
        if (!object.ok()) return object.error();
        t.base.object = object.take();
    } else {
        auto object = mint_entity_iri(b.value, ns);
        if (!object.ok()) return object.error();
        t.base.object = object.take();
    }

    const bool object_is_iri = t.base.object.is_iri();
    auto drop = [&](const char* what, const std::string& content) {
        if (diag)
            diag->emit({kDroppedLiteralAnnotation, line_number,
                        std::string(what) + " '" + content +
                            "' targets a literal object and cannot be attached"});
    };

    for (const std::string& label : b.entity_labels)
        t.auxiliary.push_back({t.base.subject, v::rdfs_label(), Term::literal(label)});
    for (const std::string& label : b.value_labels) {
        if (object_is_iri)
            t.auxiliary.push_back({t.base.object, v::rdfs_label(), Term::literal(label)});
        else
            drop("value label", label);
    }
    if (b.entity_best_label)
        t.auxiliary.push_back(
            {t.base.subject, v::skos_pref_label(), Term::literal(*b.entity_best_label)});
    if (b.value_best_label) {
        if (object_is_iri)
            t.auxiliary.push_back(
                {t.base.object, v::skos_pref_label(), Term::literal(*b.value_best_label)});
        else
            drop("value preferred label", *b.value_best_label);
    }
    for (const std::string& category : b.entity_categories) {
        auto c = mint_entity_iri(category, ns);
        if (!c.ok()) return c.error();
        t.auxiliary.push_back({t.base.subject, v::rdf_type(), c.take()});
    }
    for (const std::string& category : b.value_categories) {
        if (!object_is_iri) {
            drop("value category", category);
            continue;
        }
        auto c = mint_entity_iri(category, ns);
        if (!c.ok()) return c.error();
        t.auxiliary.push_back({t.base.object, v::rdf_type(), c.take()});
    }
    return t;
}

}  // namespace nell2rdf::translate
