#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf::rdf {

enum class TermKind { Iri, BlankNode, Literal };

/// An RDF term. Immutable value type; safe to copy between threads.
///
/// Literals hold a lexical form plus either a datatype IRI or a language tag
/// (never both). An empty datatype and empty language tag means a plain
/// xsd:string literal; a language tag implies rdf:langString.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;     // IRI string, blank node label, or lexical form
    std::string datatype;  // literal only; empty for plain / language-tagged
    std::string lang;      // literal only

    static Term iri(std::string v) { return Term{TermKind::Iri, std::move(v), {}, {}}; }
    static Term blank(std::string label) {
        return Term{TermKind::BlankNode, std::move(label), {}, {}};
    }
    static Term literal(std::string lexical) {
        return Term{TermKind::Literal, std::move(lexical), {}, {}};
    }
    static Term literal(std::string lexical, std::string datatype_iri) {
        return Term{TermKind::Literal, std::move(lexical), std::move(datatype_iri), {}};
    }
    static Term lang_literal(std::string lexical, std::string language) {
        return Term{TermKind::Literal, std::move(lexical), {}, std::move(language)};
    }

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_literal() const { return kind == TermKind::Literal; }
    bool is_blank() const { return kind == TermKind::BlankNode; }

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
    Term subject;    // IRI or blank node
    Term predicate;  // always an IRI
    Term object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// A triple plus an optional graph name; no graph means the default graph.
struct Quad {
    Triple triple;
    std::optional<Term> graph;

    Quad() = default;
    Quad(Triple t) : triple(std::move(t)) {}
    Quad(Triple t, Term g) : triple(std::move(t)), graph(std::move(g)) {}
    Quad(Triple t, std::optional<Term> g) : triple(std::move(t)), graph(std::move(g)) {}

    friend auto operator<=>(const Quad&, const Quad&) = default;
    friend bool operator==(const Quad&, const Quad&) = default;
};

/// Validates `s` as an absolute IRI and percent-encodes any characters an
/// IRI cannot carry. Encoding is idempotent: feeding the result back in
/// returns it unchanged.
Result<Term> mk_iri(std::string_view s);

/// True iff `s` starts with an RFC 3987 scheme followed by ':'.
bool has_iri_scheme(std::string_view s);

/// Blank node labels are restricted to [A-Za-z0-9_]+.
bool valid_blank_label(std::string_view s);

/// Language tags: [A-Za-z]+ ("-" [A-Za-z0-9]+)*.
bool valid_lang_tag(std::string_view s);

}  // namespace nell2rdf::rdf
