#include "nell2rdf/prov/emit.hpp"

#include "nell2rdf/rdf/vocab.hpp"
#include "nell2rdf/util/hash.hpp"

namespace nell2rdf::prov {

namespace v = rdf::vocab;
using ingest::BeliefKind;
using rdf::Term;
using rdf::Triple;
using translate::Namespaces;

rdf::Term vocab_term(const Namespaces& ns, const char* local) {
    return Term::iri(ns.vocab + local);
}

rdf::Term component_iri(const Namespaces& ns, ComponentId id) {
    return Term::iri(ns.vocab + "component/" + std::string(component_name(id)));
}

namespace {

Term node_iri(const Namespaces& ns, const std::string& hex) {
    return Term::iri(ns.base + "node/" + hex);
}

std::string child_hex(const std::string& parent_hex, const char* role, std::size_t ordinal) {
    return hex128(parent_hex + "/" + role + "/" + std::to_string(ordinal));
}

Term integer_lit(std::uint64_t n) {
    return Term::literal(std::to_string(n), v::xsd("integer"));
}
Term nni_lit(std::uint64_t n) {
    return Term::literal(std::to_string(n), v::xsd("nonNegativeInteger"));
}
Term decimal_lit(std::string lexical) {
    return Term::literal(std::move(lexical), v::xsd("decimal"));
}

// Appends one typed child node reachable from `parent` via `property`.
Term child_node(std::vector<Triple>& out, const Namespaces& ns, const Term& parent,
                const char* property, const char* type, const std::string& hex) {
    Term node = node_iri(ns, hex);
    out.push_back({parent, vocab_term(ns, property), node});
    out.push_back({node, v::rdf_type(), vocab_term(ns, type)});
    return node;
}

void emit_payload(std::vector<Triple>& out, const Term& exec, const ComponentExecution& e,
                  const Namespaces& ns, const std::string& exec_hex) {
    auto prop = [&](const char* local) { return vocab_term(ns, local); };
    switch (e.component) {
        case ComponentId::AliasMatcher: {
            const auto& p = std::get<AliasMatcherPayload>(e.payload);
            out.push_back({exec, prop("freebaseDate"),
                           Term::literal(p.freebase_date, v::xsd("date"))});
            break;
        }
        case ComponentId::CMC: {
            const auto& p = std::get<CmcPayload>(e.payload);
            for (std::size_t i = 0; i < p.patterns.size(); ++i) {
                const MorphPattern& m = p.patterns[i];
                Term node = child_node(out, ns, exec, "morphologicalPattern",
                                       "MorphologicalPatternScoreTriple",
                                       child_hex(exec_hex, "pattern", i));
                out.push_back({node, prop("morphologicalPatternName"), Term::literal(m.name)});
                out.push_back({node, prop("morphologicalPatternValue"), Term::literal(m.value)});
                out.push_back({node, prop("morphologicalPatternScore"), decimal_lit(m.score)});
            }
            break;
        }
        case ComponentId::CPL: {
            const auto& p = std::get<CplPayload>(e.payload);
            for (std::size_t i = 0; i < p.patterns.size(); ++i) {
                const PatternOcc& o = p.patterns[i];
                Term node = child_node(out, ns, exec, "patternOccurrences",
                                       "PatternNbOfOccurrencesPair",
                                       child_hex(exec_hex, "pattern", i));
                out.push_back({node, prop("textualPattern"), Term::literal(o.pattern)});
                out.push_back({node, prop("nbOfOccurrences"), nni_lit(o.occurrences)});
            }
            break;
        }
        case ComponentId::KbManipulation: {
            const auto& p = std::get<KbManipulationPayload>(e.payload);
            out.push_back({exec, prop("oldBug"), Term::literal(p.old_bug)});
            break;
        }
        case ComponentId::LatLong: {
            const auto& p = std::get<LatLongPayload>(e.payload);
            for (std::size_t i = 0; i < p.locations.size(); ++i) {
                const GeoLocation& g = p.locations[i];
                Term node = child_node(out, ns, exec, "location", "NameLatLongTriple",
                                       child_hex(exec_hex, "location", i));
                out.push_back({node, prop("name"), Term::lang_literal(g.name, g.lang)});
                out.push_back({node, prop("latitudeValue"), decimal_lit(g.latitude)});
                out.push_back({node, prop("longitudeValue"), decimal_lit(g.longitude)});
            }
            break;
        }
        case ComponentId::LE:
            break;  // no payload triples by definition
        case ComponentId::MBL: {
            const auto& p = std::get<MblPayload>(e.payload);
            out.push_back({exec, prop("promotedEntity"), Term::literal(p.promoted_entity)});
            out.push_back(
                {exec, prop("promotedEntityCategory"), Term::literal(p.promoted_entity_category)});
            if (p.promoted_relation)
                out.push_back({exec, prop("promotedRelation"), Term::literal(*p.promoted_relation)});
            if (p.promoted_value)
                out.push_back({exec, prop("promotedValue"), Term::literal(*p.promoted_value)});
            if (p.promoted_value_category)
                out.push_back({exec, prop("promotedValueCategory"),
                               Term::literal(*p.promoted_value_category)});
            break;
        }
        case ComponentId::OE: {
            const auto& p = std::get<OePayload>(e.payload);
            for (std::size_t i = 0; i < p.pairs.size(); ++i) {
                const TextUrl& t = p.pairs[i];
                Term node = child_node(out, ns, exec, "textUrl", "TextUrlPair",
                                       child_hex(exec_hex, "textUrl", i));
                out.push_back({node, prop("text"), Term::lang_literal(t.text, t.lang)});
                out.push_back({node, prop("url"), Term::literal(t.url, v::xsd("anyURI"))});
            }
            break;
        }
        case ComponentId::OntologyModifier: {
            const auto& p = std::get<OntologyModifierPayload>(e.payload);
            out.push_back({exec, prop("ontologyModification"), Term::literal(p.modification)});
            break;
        }
        case ComponentId::PRA: {
            const auto& p = std::get<PraPayload>(e.payload);
            for (std::size_t i = 0; i < p.paths.size(); ++i) {
                const RelationPath& path = p.paths[i];
                const std::string path_hex = child_hex(exec_hex, "path", i);
                Term node = child_node(out, ns, exec, "relationPath", "Path", path_hex);
                const char* dir =
                    path.direction == RelationPath::Direction::Forward ? "forward" : "backward";
                out.push_back({node, prop("direction"), vocab_term(ns, dir)});
                out.push_back({node, prop("score"), decimal_lit(path.score)});
                // The ordered relation list as an RDF collection with minted
                // cells (no blank nodes anywhere in the output).
                Term head = node_iri(ns, child_hex(path_hex, "cell", 0));
                out.push_back({node, prop("listOfRelations"), head});
                for (std::size_t j = 0; j < path.relations.size(); ++j) {
                    Term cell = node_iri(ns, child_hex(path_hex, "cell", j));
                    out.push_back({cell, v::rdf_first(), Term::literal(path.relations[j])});
                    Term rest = j + 1 < path.relations.size()
                                    ? node_iri(ns, child_hex(path_hex, "cell", j + 1))
                                    : v::rdf_nil();
                    out.push_back({cell, v::rdf_rest(), rest});
                }
            }
            break;
        }
        case ComponentId::RL: {
            const auto& p = std::get<RlPayload>(e.payload);
            const RuleScores& rs = p.rule_scores;
            const std::string rs_hex = child_hex(exec_hex, "ruleScores", 0);
            Term scores = child_node(out, ns, exec, "ruleScores", "RuleScoresTuple", rs_hex);
            out.push_back({scores, prop("accuracy"), decimal_lit(rs.accuracy)});
            out.push_back({scores, prop("nbCorrect"), nni_lit(rs.nb_correct)});
            out.push_back({scores, prop("nbIncorrect"), nni_lit(rs.nb_incorrect)});
            out.push_back({scores, prop("nbUnknown"), nni_lit(rs.nb_unknown)});
            const std::string rule_hex = child_hex(rs_hex, "rule", 0);
            Term rule = child_node(out, ns, scores, "rule", "Rule", rule_hex);
            for (const RuleVariable& var : rs.rule.variables) {
                out.push_back({rule, prop("variable"), Term::literal(var.variable)});
                out.push_back({rule, prop("valueOfVariable"), Term::literal(var.value)});
            }
            for (std::size_t i = 0; i < rs.rule.predicates.size(); ++i) {
                const RulePredicate& pr = rs.rule.predicates[i];
                Term pred = child_node(out, ns, rule, "predicate", "Predicate",
                                       child_hex(rule_hex, "pred", i));
                out.push_back({pred, prop("predicateName"), Term::literal(pr.name)});
                out.push_back({pred, prop("firstVariable"), Term::literal(pr.first_variable)});
                out.push_back({pred, prop("secondVariable"), Term::literal(pr.second_variable)});
            }
            break;
        }
        case ComponentId::SEAL: {
            const auto& p = std::get<SealPayload>(e.payload);
            out.push_back({exec, prop("url"), Term::literal(p.url, v::xsd("anyURI"))});
            break;
        }
        case ComponentId::Semparse: {
            const auto& p = std::get<SemparsePayload>(e.payload);
            out.push_back({exec, prop("sentence"), Term::literal(p.sentence)});
            break;
        }
        case ComponentId::SpreadsheetEdits: {
            const auto& p = std::get<SpreadsheetEditsPayload>(e.payload);
            out.push_back({exec, prop("user"), Term::literal(p.user)});
            out.push_back({exec, prop("entity"), Term::literal(p.entity)});
            out.push_back({exec, prop("relation"), Term::literal(p.relation)});
            out.push_back({exec, prop("value"), Term::literal(p.value)});
            out.push_back({exec, prop("action"), Term::literal(p.action)});
            out.push_back({exec, prop("file"), Term::literal(p.file)});
            break;
        }
    }
}

}  // namespace

std::vector<Triple> emit_belief_node(const Term& attachment, BeliefKind kind,
                                     const std::optional<std::uint64_t>& iteration,
                                     const std::optional<std::string>& probability,
                                     const Namespaces& ns) {
    std::vector<Triple> out;
    const char* cls = kind == BeliefKind::Promoted ? "PromotedBelief" : "CandidateBelief";
    out.push_back({attachment, v::rdf_type(), vocab_term(ns, cls)});
    if (kind == BeliefKind::Promoted) {
        if (iteration)
            out.push_back({attachment, vocab_term(ns, "iterationOfPromotion"),
                           integer_lit(*iteration)});
        if (probability)
            out.push_back(
                {attachment, vocab_term(ns, "probabilityOfBelief"), decimal_lit(*probability)});
    }
    return out;
}

std::vector<Triple> emit_token(const Term& exec, const Token& t, const Namespaces& ns,
                               const std::string& exec_hex) {
    std::vector<Triple> out;
    Term tok = Term::iri(ns.base + "token/" + hex128(exec_hex + "/token"));
    out.push_back({exec, vocab_term(ns, "hasToken"), tok});
    if (const auto* r = std::get_if<RelationToken>(&t)) {
        out.push_back({tok, v::rdf_type(), vocab_term(ns, "RelationToken")});
        out.push_back({tok, vocab_term(ns, "tokenEntity"), Term::literal(r->entity)});
        out.push_back({tok, vocab_term(ns, "relationValue"), Term::literal(r->relation_value)});
    } else if (const auto* g = std::get_if<GeneralizationToken>(&t)) {
        out.push_back({tok, v::rdf_type(), vocab_term(ns, "GeneralizationToken")});
        out.push_back({tok, vocab_term(ns, "tokenEntity"), Term::literal(g->entity)});
        out.push_back(
            {tok, vocab_term(ns, "generalizationValue"), Term::literal(g->generalization_value)});
    } else if (const auto* geo = std::get_if<GeoToken>(&t)) {
        out.push_back({tok, v::rdf_type(), vocab_term(ns, "GeoToken")});
        out.push_back({tok, vocab_term(ns, "tokenEntity"), Term::literal(geo->entity)});
        out.push_back({tok, vocab_term(ns, "latitudeValue"), decimal_lit(geo->latitude)});
        out.push_back({tok, vocab_term(ns, "longitudeValue"), decimal_lit(geo->longitude)});
    }
    return out;
}

std::vector<Triple> emit_execution(const Term& attachment, const ComponentExecution& e,
                                   const Namespaces& ns, const std::string& belief_hex,
                                   std::size_t index) {
    std::vector<Triple> out;
    const std::string exec_hex =
        hex128(belief_hex + "/" + std::string(component_name(e.component)) + "/" +
               std::to_string(e.iteration) + "/" + std::to_string(index));
    Term exec = Term::iri(ns.base + "execution/" + exec_hex);

    out.push_back({attachment, vocab_term(ns, "generatedBy"), exec});
    out.push_back({exec, v::rdf_type(),
                   vocab_term(ns, (std::string(component_name(e.component)) + "Execution").c_str())});
    out.push_back({exec, vocab_term(ns, "associatedWith"), component_iri(ns, e.component)});
    out.push_back({exec, vocab_term(ns, "iteration"), integer_lit(e.iteration)});
    out.push_back({exec, vocab_term(ns, "probability"), decimal_lit(e.probability)});
    out.push_back({exec, vocab_term(ns, "atTime"), Term::literal(e.time, v::xsd("dateTime"))});
    out.push_back({exec, vocab_term(ns, "source"), Term::literal(e.source_raw)});

    auto token = emit_token(exec, e.token, ns, exec_hex);
    out.insert(out.end(), token.begin(), token.end());
    emit_payload(out, exec, e, ns, exec_hex);
    return out;
}

std::vector<Triple> emit_ontology(const Namespaces& ns) {
    std::vector<Triple> out;
    auto cls = [&](const char* local) { return vocab_term(ns, local); };
    auto sub_class = [&](const char* c, const Term& parent) {
        out.push_back({cls(c), v::rdf_type(), Term::iri(v::owl("Class"))});
        out.push_back({cls(c), v::rdfs_sub_class_of(), parent});
    };
    auto plain_class = [&](const char* c) {
        out.push_back({cls(c), v::rdf_type(), Term::iri(v::owl("Class"))});
    };

    // Class hierarchy.
    sub_class("Belief", Term::iri(v::prov("Entity")));
    sub_class("PromotedBelief", cls("Belief"));
    sub_class("CandidateBelief", cls("Belief"));
    sub_class("ComponentExecution", Term::iri(v::prov("Activity")));
    plain_class("ComponentIteration");
    out.push_back({cls("ComponentIteration"), v::owl_equivalent_class(), cls("ComponentExecution")});
    sub_class("Component", Term::iri(v::prov("SoftwareAgent")));
    sub_class("Token", v::owl_thing());
    sub_class("RelationToken", cls("Token"));
    sub_class("GeneralizationToken", cls("Token"));
    sub_class("GeoToken", cls("Token"));
    for (ComponentId id : all_components()) {
        std::string name = std::string(component_name(id)) + "Execution";
        sub_class(name.c_str(), cls("ComponentExecution"));
    }
    for (const char* c : {"MorphologicalPatternScoreTriple", "PatternNbOfOccurrencesPair",
                          "NameLatLongTriple", "TextUrlPair", "Path", "DirectionOfPath",
                          "RuleScoresTuple", "Rule", "Predicate"})
        plain_class(c);

    // Individuals: the two path directions and the fourteen components.
    out.push_back({cls("forward"), v::rdf_type(), cls("DirectionOfPath")});
    out.push_back({cls("backward"), v::rdf_type(), cls("DirectionOfPath")});
    for (ComponentId id : all_components())
        out.push_back({component_iri(ns, id), v::rdf_type(), cls("Component")});

    // Properties.
    auto object_prop = [&](const char* p, const std::optional<Term>& domain, const Term& range) {
        out.push_back({cls(p), v::rdf_type(), v::owl_object_property()});
        if (domain) out.push_back({cls(p), v::rdfs_domain(), *domain});
        out.push_back({cls(p), v::rdfs_range(), range});
    };
    auto data_prop = [&](const char* p, const std::optional<Term>& domain, const Term& range) {
        out.push_back({cls(p), v::rdf_type(), v::owl_datatype_property()});
        if (domain) out.push_back({cls(p), v::rdfs_domain(), *domain});
        out.push_back({cls(p), v::rdfs_range(), range});
    };

    object_prop("generatedBy", cls("Belief"), cls("ComponentExecution"));
    out.push_back({cls("generatedBy"), v::rdfs_sub_property_of(),
                   Term::iri(v::prov("wasGeneratedBy"))});
    object_prop("associatedWith", cls("ComponentExecution"), cls("Component"));
    out.push_back({cls("associatedWith"), v::rdfs_sub_property_of(),
                   Term::iri(v::prov("wasAssociatedWith"))});
    data_prop("iterationOfPromotion", cls("PromotedBelief"), v::xsd_integer());
    data_prop("probabilityOfBelief", cls("PromotedBelief"), v::xsd_decimal());
    data_prop("iteration", cls("ComponentExecution"), v::xsd_integer());
    data_prop("probability", cls("ComponentExecution"), v::xsd_decimal());
    object_prop("hasToken", cls("ComponentExecution"), cls("Token"));
    data_prop("source", cls("ComponentExecution"), v::xsd_string());
    data_prop("atTime", cls("ComponentExecution"), v::xsd_date_time());
    data_prop("tokenEntity", cls("Token"), v::xsd_string());
    data_prop("relationValue", cls("RelationToken"), v::xsd_string());
    data_prop("generalizationValue", cls("GeneralizationToken"), v::xsd_string());

    data_prop("freebaseDate", cls("AliasMatcherExecution"), v::xsd_date());
    object_prop("morphologicalPattern", cls("CMCExecution"),
                cls("MorphologicalPatternScoreTriple"));
    data_prop("morphologicalPatternName", cls("MorphologicalPatternScoreTriple"), v::xsd_string());
    data_prop("morphologicalPatternValue", cls("MorphologicalPatternScoreTriple"),
              v::xsd_string());
    data_prop("morphologicalPatternScore", cls("MorphologicalPatternScoreTriple"),
              v::xsd_decimal());
    object_prop("patternOccurrences", cls("CPLExecution"), cls("PatternNbOfOccurrencesPair"));
    data_prop("textualPattern", cls("PatternNbOfOccurrencesPair"), v::xsd_string());
    data_prop("nbOfOccurrences", cls("PatternNbOfOccurrencesPair"), v::xsd_non_negative_integer());
    data_prop("oldBug", cls("KbManipulationExecution"), v::xsd_string());
    object_prop("location", cls("LatLongExecution"), cls("NameLatLongTriple"));
    data_prop("name", cls("NameLatLongTriple"), v::rdf_lang_string());
    data_prop("latitudeValue", cls("NameLatLongTriple"), v::xsd_decimal());
    data_prop("longitudeValue", cls("NameLatLongTriple"), v::xsd_decimal());
    for (const char* p : {"promotedEntity", "promotedEntityCategory", "promotedRelation",
                          "promotedValue", "promotedValueCategory"})
        data_prop(p, cls("MBLExecution"), v::xsd_string());
    object_prop("textUrl", cls("OEExecution"), cls("TextUrlPair"));
    data_prop("text", cls("TextUrlPair"), v::rdf_lang_string());
    // `url` is shared by TextUrlPair and SEALExecution; it carries no domain.
    data_prop("url", std::nullopt, v::xsd_any_uri());
    data_prop("ontologyModification", cls("OntologyModifierExecution"), v::xsd_string());
    object_prop("relationPath", cls("PRAExecution"), cls("Path"));
    object_prop("direction", cls("Path"), cls("DirectionOfPath"));
    data_prop("score", cls("Path"), v::xsd_decimal());
    object_prop("listOfRelations", cls("Path"), v::rdf_list());
    object_prop("ruleScores", cls("RLExecution"), cls("RuleScoresTuple"));
    object_prop("rule", cls("RuleScoresTuple"), cls("Rule"));
    data_prop("accuracy", cls("RuleScoresTuple"), v::xsd_decimal());
    data_prop("nbCorrect", cls("RuleScoresTuple"), v::xsd_non_negative_integer());
    data_prop("nbIncorrect", cls("RuleScoresTuple"), v::xsd_non_negative_integer());
    data_prop("nbUnknown", cls("RuleScoresTuple"), v::xsd_non_negative_integer());
    data_prop("variable", cls("Rule"), v::xsd_string());
    data_prop("valueOfVariable", cls("Rule"), v::xsd_string());
    object_prop("predicate", cls("Rule"), cls("Predicate"));
    data_prop("predicateName", cls("Predicate"), v::xsd_string());
    data_prop("firstVariable", cls("Predicate"), v::xsd_string());
    data_prop("secondVariable", cls("Predicate"), v::xsd_string());
    data_prop("sentence", cls("SemparseExecution"), v::xsd_string());
    for (const char* p : {"user", "entity", "relation", "value", "action", "file"})
        data_prop(p, cls("SpreadsheetEditsExecution"), v::xsd_string());

    return out;
}

}  // namespace nell2rdf::prov
