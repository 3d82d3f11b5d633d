// Typed view of one field-13 record: which component ran, when, with what
// confidence, which token it inferred, and its component-specific payload.
// Numeric values are kept as canonical lexical forms (see rdf/canonical.hpp)
// so they can be re-serialized without drift.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nell2rdf/prov/component.hpp"

namespace nell2rdf::prov {

// --- tokens -----------------------------------------------------------

struct RelationToken {
    std::string entity;
    std::string relation_value;
    bool operator==(const RelationToken&) const = default;
};

struct GeneralizationToken {
    std::string entity;
    std::string generalization_value;
    bool operator==(const GeneralizationToken&) const = default;
};

struct GeoToken {
    std::string entity;
    std::string latitude;   // canonical decimal, [-90, 90]
    std::string longitude;  // canonical decimal, [-180, 180]
    bool operator==(const GeoToken&) const = default;
};

using Token = std::variant<RelationToken, GeneralizationToken, GeoToken>;

// --- payload building blocks ------------------------------------------

struct MorphPattern {
    std::string name;   // e.g. "prefix", "suffix"
    std::string value;
    std::string score;  // canonical decimal
    bool operator==(const MorphPattern&) const = default;
};

struct PatternOcc {
    std::string pattern;
    std::uint64_t occurrences = 0;  // >= 1
    bool operator==(const PatternOcc&) const = default;
};

struct GeoLocation {
    std::string name;
    std::string lang;  // BCP-47 tag of the name
    std::string latitude;
    std::string longitude;
    bool operator==(const GeoLocation&) const = default;
};

struct TextUrl {
    std::string text;
    std::string lang;
    std::string url;  // absolute IRI
    bool operator==(const TextUrl&) const = default;
};

struct RelationPath {
    enum class Direction { Forward, Backward };
    Direction direction = Direction::Forward;
    std::string score;                   // canonical decimal
    std::vector<std::string> relations;  // ordered, length >= 1
    bool operator==(const RelationPath&) const = default;
};

struct RuleVariable {
    std::string variable;
    std::string value;
    bool operator==(const RuleVariable&) const = default;
};

struct RulePredicate {
    std::string name;
    std::string first_variable;
    std::string second_variable;
    bool operator==(const RulePredicate&) const = default;
};

struct HornRule {
    std::vector<RuleVariable> variables;
    std::vector<RulePredicate> predicates;
    // Variables referenced by predicates but absent from `variables`.
    std::vector<std::string> free_variables;
    bool operator==(const HornRule&) const = default;
};

struct RuleScores {
    HornRule rule;
    std::string accuracy;  // canonical decimal in [0,1]
    std::uint64_t nb_correct = 0;
    std::uint64_t nb_incorrect = 0;
    std::uint64_t nb_unknown = 0;
    bool operator==(const RuleScores&) const = default;
};

// --- per-component payloads -------------------------------------------

struct AliasMatcherPayload {
    std::string freebase_date;  // canonical xsd:date
    bool operator==(const AliasMatcherPayload&) const = default;
};
struct CmcPayload {
    std::vector<MorphPattern> patterns;
    bool operator==(const CmcPayload&) const = default;
};
struct CplPayload {
    std::vector<PatternOcc> patterns;
    bool operator==(const CplPayload&) const = default;
};
struct KbManipulationPayload {
    std::string old_bug;
    bool operator==(const KbManipulationPayload&) const = default;
};
struct LatLongPayload {
    std::vector<GeoLocation> locations;
    bool operator==(const LatLongPayload&) const = default;
};
struct LePayload {
    bool operator==(const LePayload&) const = default;
};
struct MblPayload {
    std::string promoted_entity;
    std::string promoted_entity_category;
    std::optional<std::string> promoted_relation;
    std::optional<std::string> promoted_value;
    std::optional<std::string> promoted_value_category;
    bool operator==(const MblPayload&) const = default;
};
struct OePayload {
    std::vector<TextUrl> pairs;
    bool operator==(const OePayload&) const = default;
};
struct OntologyModifierPayload {
    enum class Kind { Category, Relation };
    std::string modification;
    Kind kind = Kind::Category;
    bool operator==(const OntologyModifierPayload&) const = default;
};
struct PraPayload {
    std::vector<RelationPath> paths;
    bool operator==(const PraPayload&) const = default;
};
struct RlPayload {
    RuleScores rule_scores;
    bool operator==(const RlPayload&) const = default;
};
struct SealPayload {
    std::string url;
    bool operator==(const SealPayload&) const = default;
};
struct SemparsePayload {
    std::string sentence;
    bool operator==(const SemparsePayload&) const = default;
};
struct SpreadsheetEditsPayload {
    std::string user;
    std::string entity;
    std::string relation;
    std::string value;
    std::string action;
    std::string file;
    bool operator==(const SpreadsheetEditsPayload&) const = default;
};

using ComponentPayload =
    std::variant<AliasMatcherPayload, CmcPayload, CplPayload, KbManipulationPayload,
                 LatLongPayload, LePayload, MblPayload, OePayload, OntologyModifierPayload,
                 PraPayload, RlPayload, SealPayload, SemparsePayload, SpreadsheetEditsPayload>;

// --- a parsed record ---------------------------------------------------

struct ComponentExecution {
    ComponentId component = ComponentId::LE;
    std::string original_name;  // as written in field 13 (may be an alias)
    std::uint64_t iteration = 0;
    std::string probability;  // canonical decimal in [0,1]
    std::string time;         // canonical xsd:dateTime, UTC
    std::string source_raw;   // the record's source payload, unescaped
    Token token;
    ComponentPayload payload;
    bool operator==(const ComponentExecution&) const = default;
};

}  // namespace nell2rdf::prov
