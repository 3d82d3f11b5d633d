#include "nell2rdf/reify/reify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nell2rdf/rdf/ntriples.hpp"
#include "nell2rdf/rdf/vocab.hpp"
#include "nell2rdf/util/hash.hpp"

namespace nell2rdf::reify {

namespace v = rdf::vocab;
using ingest::BeliefKind;
using rdf::Quad;
using rdf::Term;
using rdf::Triple;
using translate::BaseStatement;
using translate::Namespaces;

const std::array<ModelId, kModelCount>& all_models() {
    static const std::array<ModelId, kModelCount> models = {
        ModelId::RdfReification, ModelId::NAry, ModelId::NamedGraphs,
        ModelId::SingletonProperty, ModelId::NdFluents};
    return models;
}

const char* model_token(ModelId m) {
    switch (m) {
        case ModelId::RdfReification: return "reification";
        case ModelId::NAry: return "nary";
        case ModelId::NamedGraphs: return "ngraphs";
        case ModelId::SingletonProperty: return "singleton";
        case ModelId::NdFluents: return "ndfluents";
    }
    return "";
}

std::optional<ModelId> model_from_token(std::string_view token) {
    for (ModelId m : all_models())
        if (token == model_token(m)) return m;
    return std::nullopt;
}

Triple as_triple(const BaseStatement& s) { return {s.subject, s.predicate, s.object}; }

std::string statement_hex(const BaseStatement& s) {
    return hex128(rdf::statement_key(as_triple(s)));
}

Term mint_belief_id(const BaseStatement& s, const Namespaces& ns) {
    return Term::iri(ns.base + "belief/" + statement_hex(s));
}

ReifiedStatement reify(const BaseStatement& s, ModelId model, BeliefKind kind,
                       const Namespaces& ns, bool assert_candidates) {
    ReifiedStatement r;
    r.base = s;
    r.model = model;
    const std::string hex = statement_hex(s);
    const bool assert_base = kind == BeliefKind::Promoted || assert_candidates;

    switch (model) {
        case ModelId::RdfReification: {
            r.attachment = Term::iri(ns.base + "belief/" + hex);
            r.statement_triples.emplace_back(Triple{r.attachment, v::rdf_type(), v::rdf_statement()});
            r.statement_triples.emplace_back(Triple{r.attachment, v::rdf_subject(), s.subject});
            r.statement_triples.emplace_back(Triple{r.attachment, v::rdf_predicate(), s.predicate});
            r.statement_triples.emplace_back(Triple{r.attachment, v::rdf_object(), s.object});
            if (assert_base) r.statement_triples.emplace_back(as_triple(s));
            break;
        }
        case ModelId::NAry: {
            r.attachment = Term::iri(ns.base + "belief/" + hex);
            r.statement_triples.emplace_back(
                Triple{s.subject, Term::iri(s.predicate.value + "/statement"), r.attachment});
            r.statement_triples.emplace_back(
                Triple{r.attachment, Term::iri(s.predicate.value + "/value"), s.object});
            if (assert_base) r.statement_triples.emplace_back(as_triple(s));
            break;
        }
        case ModelId::NamedGraphs: {
            r.attachment = Term::iri(ns.base + "graph/" + hex);
            r.statement_triples.emplace_back(as_triple(s), r.attachment);
            break;
        }
        case ModelId::SingletonProperty: {
            r.attachment = Term::iri(s.predicate.value + "#" + hex);
            r.statement_triples.emplace_back(Triple{s.subject, r.attachment, s.object});
            r.statement_triples.emplace_back(
                Triple{r.attachment, v::singleton_property_of(), s.predicate});
            break;
        }
        case ModelId::NdFluents: {
            r.attachment = Term::iri(ns.base + "context/" + hex);
            Term subject_part = Term::iri(s.subject.value + "#" + hex);
            Term object_term = s.object;
            const bool contextual_object = s.object.is_iri();
            if (contextual_object) object_term = Term::iri(s.object.value + "#" + hex);
            r.statement_triples.emplace_back(Triple{subject_part, s.predicate, object_term});
            r.statement_triples.emplace_back(
                Triple{subject_part, v::nd_contextual_part_of(), s.subject});
            r.statement_triples.emplace_back(
                Triple{subject_part, v::nd_contextual_extent(), r.attachment});
            if (contextual_object) {
                r.statement_triples.emplace_back(
                    Triple{object_term, v::nd_contextual_part_of(), s.object});
                r.statement_triples.emplace_back(
                    Triple{object_term, v::nd_contextual_extent(), r.attachment});
            }
            break;
        }
    }
    return r;
}

namespace {

Error malformed(const std::string& message) { return {Errc::MalformedEncoding, message}; }

// RDF graphs are sets; duplicate lines collapse so every model sees the
// same picture of a corpus that repeats a belief.
std::vector<Quad> dedupe(const std::vector<Quad>& input) {
    std::vector<Quad> out;
    std::set<Quad> seen;
    out.reserve(input.size());
    for (const Quad& q : input)
        if (seen.insert(q).second) out.push_back(q);
    return out;
}

Result<DereifyResult> require_default_graph(const std::vector<Quad>& quads, ModelId model) {
    for (const Quad& q : quads)
        if (q.graph)
            return malformed(std::string(model_token(model)) +
                             " output must not contain named graphs");
    return DereifyResult{};
}

// Drops plain triples that duplicate a recovered base statement (the
// asserted copies of promoted beliefs).
void absorb_asserted(const std::vector<Quad>& rest, const std::vector<DereifiedStatement>& stmts,
                     std::vector<Quad>& metadata) {
    std::set<Triple> bases;
    for (const auto& st : stmts) bases.insert(as_triple(st.base));
    for (const Quad& q : rest)
        if (q.graph || !bases.count(q.triple)) metadata.push_back(q);
}

Result<DereifyResult> dereify_rdf_reification(const std::vector<Quad>& quads) {
    auto guard = require_default_graph(quads, ModelId::RdfReification);
    if (!guard.ok()) return guard.error();

    struct Parts {
        std::optional<Term> subject, predicate, object;
        bool typed = false;
        std::size_t pos = 0;
    };
    std::map<Term, Parts> parts;
    std::vector<Quad> rest;
    auto slot = [&](const Term& node, std::size_t pos) -> Parts& {
        auto [it, fresh] = parts.try_emplace(node);
        if (fresh) it->second.pos = pos;
        return it->second;
    };
    for (std::size_t i = 0; i < quads.size(); ++i) {
        const Triple& t = quads[i].triple;
        if (t.predicate == v::rdf_type() && t.object == v::rdf_statement()) {
            slot(t.subject, i).typed = true;
        } else if (t.predicate == v::rdf_subject()) {
            auto& p = slot(t.subject, i);
            if (p.subject) return malformed("duplicate rdf:subject on " + t.subject.value);
            p.subject = t.object;
        } else if (t.predicate == v::rdf_predicate()) {
            auto& p = slot(t.subject, i);
            if (p.predicate) return malformed("duplicate rdf:predicate on " + t.subject.value);
            p.predicate = t.object;
        } else if (t.predicate == v::rdf_object()) {
            auto& p = slot(t.subject, i);
            if (p.object) return malformed("duplicate rdf:object on " + t.subject.value);
            p.object = t.object;
        } else {
            rest.push_back(quads[i]);
        }
    }

    std::vector<const std::pair<const Term, Parts>*> ordered;
    ordered.reserve(parts.size());
    for (const auto& entry : parts) ordered.push_back(&entry);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return a->second.pos < b->second.pos; });

    DereifyResult result;
    for (const auto* entry : ordered) {
        const auto& [node, p] = *entry;
        if (!p.typed) return malformed(node.value + " has reification parts but no rdf:Statement type");
        if (!p.subject || !p.predicate || !p.object)
            return malformed(node.value + " is missing rdf:subject/predicate/object");
        result.statements.push_back({{*p.subject, *p.predicate, *p.object}, node});
    }
    absorb_asserted(rest, result.statements, result.metadata);
    return result;
}

bool strip_suffix(const std::string& iri, std::string_view suffix, std::string& out) {
    if (iri.size() <= suffix.size() || iri.compare(iri.size() - suffix.size(), suffix.size(),
                                                   suffix.data(), suffix.size()) != 0)
        return false;
    out = iri.substr(0, iri.size() - suffix.size());
    return true;
}

Result<DereifyResult> dereify_nary(const std::vector<Quad>& quads) {
    auto guard = require_default_graph(quads, ModelId::NAry);
    if (!guard.ok()) return guard.error();

    // The encoding's defining marker is the `.../statement` edge into the
    // intermediate node; a `.../value` suffix alone proves nothing, since a
    // vocabulary may legitimately own a property named `value`. Value halves
    // are therefore only claimed through a marked node, and unclaimed ones
    // stay metadata.
    struct Half {
        Term subject;
        std::string predicate;
        std::size_t pos = 0;
    };
    std::map<Term, Half> statement_half;  // keyed by intermediate node
    std::vector<Quad> rest;
    std::string stripped;
    for (std::size_t i = 0; i < quads.size(); ++i) {
        const Triple& t = quads[i].triple;
        if (strip_suffix(t.predicate.value, "/statement", stripped)) {
            if (!t.object.is_iri())
                return malformed("statement property with non-IRI object: " + t.predicate.value);
            if (!statement_half.emplace(t.object, Half{t.subject, stripped, i}).second)
                return malformed("duplicate statement half for " + t.object.value);
        } else {
            rest.push_back(quads[i]);
        }
    }

    std::vector<std::pair<std::size_t, const Term*>> ordered;
    for (const auto& [node, half] : statement_half) ordered.push_back({half.pos, &node});
    std::sort(ordered.begin(), ordered.end());

    std::map<std::pair<Term, Term>, std::vector<std::size_t>> by_subject_predicate;
    for (std::size_t i = 0; i < rest.size(); ++i)
        by_subject_predicate[{rest[i].triple.subject, rest[i].triple.predicate}].push_back(i);

    DereifyResult result;
    std::set<std::size_t> claimed;
    for (const auto& [pos, nodep] : ordered) {
        const Term& node = *nodep;
        const Half& sh = statement_half.at(node);
        auto it = by_subject_predicate.find({node, Term::iri(sh.predicate + "/value")});
        if (it == by_subject_predicate.end())
            return malformed(node.value + " has a statement half but no value half");
        if (it->second.size() > 1) return malformed("duplicate value half for " + node.value);
        const std::size_t found = it->second.front();
        claimed.insert(found);
        result.statements.push_back(
            {{sh.subject, Term::iri(sh.predicate), rest[found].triple.object}, node});
    }

    std::vector<Quad> unclaimed;
    unclaimed.reserve(rest.size() - claimed.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (!claimed.count(i)) unclaimed.push_back(rest[i]);
    absorb_asserted(unclaimed, result.statements, result.metadata);
    return result;
}

Result<DereifyResult> dereify_named_graphs(const std::vector<Quad>& quads) {
    DereifyResult result;
    for (const Quad& q : quads) {
        if (q.graph)
            result.statements.push_back({{q.triple.subject, q.triple.predicate, q.triple.object},
                                         *q.graph});
        else
            result.metadata.push_back(q);
    }
    return result;
}

Result<DereifyResult> dereify_singleton(const std::vector<Quad>& quads) {
    auto guard = require_default_graph(quads, ModelId::SingletonProperty);
    if (!guard.ok()) return guard.error();

    std::map<Term, Term> singleton_of;  // p1 -> p
    for (const Quad& q : quads) {
        const Triple& t = q.triple;
        if (t.predicate != v::singleton_property_of()) continue;
        if (!t.object.is_iri())
            return malformed("singletonPropertyOf with non-IRI object on " + t.subject.value);
        if (!singleton_of.emplace(t.subject, t.object).second)
            return malformed("duplicate singletonPropertyOf for " + t.subject.value);
    }

    DereifyResult result;
    std::map<Term, std::size_t> uses;
    for (const Quad& q : quads) {
        const Triple& t = q.triple;
        if (t.predicate == v::singleton_property_of() && singleton_of.count(t.subject)) continue;
        auto it = singleton_of.find(t.predicate);
        if (it != singleton_of.end()) {
            result.statements.push_back({{t.subject, it->second, t.object}, t.predicate});
            ++uses[t.predicate];
        } else {
            result.metadata.push_back(q);
        }
    }
    for (const auto& [p1, p] : singleton_of) {
        auto it = uses.find(p1);
        if (it == uses.end()) return malformed(p1.value + " declared singleton but never used");
        if (it->second != 1)
            return malformed(p1.value + " used by " + std::to_string(it->second) +
                             " statements; singleton properties identify exactly one");
    }
    return result;
}

Result<DereifyResult> dereify_ndfluents(const std::vector<Quad>& quads) {
    auto guard = require_default_graph(quads, ModelId::NdFluents);
    if (!guard.ok()) return guard.error();

    std::map<Term, Term> part_of, extent;
    for (const Quad& q : quads) {
        const Triple& t = q.triple;
        if (t.predicate == v::nd_contextual_part_of()) {
            if (!part_of.emplace(t.subject, t.object).second)
                return malformed("duplicate contextualPartOf on " + t.subject.value);
        } else if (t.predicate == v::nd_contextual_extent()) {
            if (!extent.emplace(t.subject, t.object).second)
                return malformed("duplicate contextualExtent on " + t.subject.value);
        }
    }
    for (const auto& [node, target] : part_of)
        if (!extent.count(node))
            return malformed(node.value + " has contextualPartOf but no contextualExtent");
    for (const auto& [node, ctx] : extent)
        if (!part_of.count(node))
            return malformed(node.value + " has contextualExtent but no contextualPartOf");

    DereifyResult result;
    std::map<Term, std::size_t> used;
    for (const Quad& q : quads) {
        const Triple& t = q.triple;
        if (t.predicate == v::nd_contextual_part_of() || t.predicate == v::nd_contextual_extent())
            continue;
        auto sit = part_of.find(t.subject);
        if (sit == part_of.end()) {
            result.metadata.push_back(q);
            continue;
        }
        const Term& context = extent.at(t.subject);
        Term object = t.object;
        if (object.is_iri()) {
            auto oit = part_of.find(object);
            if (oit == part_of.end())
                return malformed("statement object " + object.value + " is not contextualized");
            if (extent.at(object) != context)
                return malformed("subject and object of " + t.subject.value +
                                 " belong to different contexts");
            ++used[object];
            object = oit->second;
        }
        ++used[t.subject];
        result.statements.push_back({{sit->second, t.predicate, object}, context});
    }
    for (const auto& [node, target] : part_of)
        if (!used.count(node)) return malformed(node.value + " is an orphan contextual part");
    return result;
}

}  // namespace

Result<DereifyResult> dereify(const std::vector<Quad>& input, ModelId model) {
    std::vector<Quad> quads = dedupe(input);
    switch (model) {
        case ModelId::RdfReification: return dereify_rdf_reification(quads);
        case ModelId::NAry: return dereify_nary(quads);
        case ModelId::NamedGraphs: return dereify_named_graphs(quads);
        case ModelId::SingletonProperty: return dereify_singleton(quads);
        case ModelId::NdFluents: return dereify_ndfluents(quads);
    }
    return malformed("unknown model");
}

}  // namespace nell2rdf::reify
