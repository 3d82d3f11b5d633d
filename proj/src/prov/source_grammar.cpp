#include "nell2rdf/prov/source_grammar.hpp"

#include <cstdlib>
#include <iterator>
#include <utility>

#include "nell2rdf/rdf/canonical.hpp"
#include "nell2rdf/rdf/term.hpp"

namespace nell2rdf::prov {
namespace {

// Cursor over a record list or payload string.  The grammar has no
// insignificant whitespace, so every consumed byte is meaningful.
class Cur {
public:
    explicit Cur(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }
    void advance() {
        if (pos_ < s_.size()) ++pos_;
    }
    std::string slice(std::size_t from, std::size_t to) const {
        return std::string(s_.substr(from, to - from));
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool eat_lit(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }

    Error err(const std::string& expected) const {
        return {Errc::GrammarError, "expected " + expected, pos_};
    }

    // Consumes up to (not including) the first stop character.
    std::string bare_until(std::string_view stops) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string_view::npos) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    // Consumes a double-quoted string; the only escapes are \" and \\.
    Result<std::string> quoted() {
        if (!eat('"')) return err("'\"'");
        std::string out;
        while (pos_ < s_.size()) {
            char c = s_[pos_++];
            if (c == '"') return out;
            if (c == '\\') {
                if (pos_ >= s_.size()) break;
                char esc = s_[pos_++];
                if (esc == '"' || esc == '\\') {
                    out += esc;
                } else {
                    --pos_;
                    return err("'\\\"' or '\\\\' escape");
                }
            } else {
                out += c;
            }
        }
        return err("closing '\"'");
    }

    // Consumes a quoted string with a mandatory @lang suffix.
    Result<std::pair<std::string, std::string>> quoted_lang() {
        auto text = quoted();
        if (!text.ok()) return text.error();
        if (!eat('@')) return err("'@' language tag");
        std::string lang = bare_until(",;)");
        if (!rdf::valid_lang_tag(lang)) return err("BCP-47 language tag");
        return std::make_pair(text.take(), std::move(lang));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

struct RawRecord {
    std::string name;
    std::string iteration_raw;
    std::string prob_raw;
    std::string time_raw;
    std::string token_raw;  // parenthesized form, parens included
    std::string source;     // unescaped payload
    std::size_t offset = 0;
};

// Scans a parenthesized group, quote- and escape-aware, parens included.
Result<std::string> read_paren_group(Cur& c) {
    std::size_t start = c.pos();
    if (!c.eat('(')) return c.err("'('");
    bool in_quote = false, escaped = false;
    while (!c.done()) {
        char ch = c.peek();
        if (in_quote) {
            if (escaped)
                escaped = false;
            else if (ch == '\\')
                escaped = true;
            else if (ch == '"')
                in_quote = false;
        } else if (ch == '"') {
            in_quote = true;
        } else if (ch == ')') {
            c.advance();
            return c.slice(start, c.pos());
        }
        c.advance();
    }
    return c.err("')'");
}

Result<RawRecord> read_record(Cur& c) {
    RawRecord r;
    r.offset = c.pos();
    r.name = c.bare_until(",]");
    if (r.name.empty()) return c.err("component name");
    if (!c.eat(',') || !c.eat_lit("iteration=")) return c.err("',iteration='");
    r.iteration_raw = c.bare_until(",");
    if (!c.eat(',') || !c.eat_lit("prob=")) return c.err("',prob='");
    r.prob_raw = c.bare_until(",");
    if (!c.eat(',') || !c.eat_lit("time=")) return c.err("',time='");
    r.time_raw = c.bare_until(",");
    if (!c.eat(',') || !c.eat_lit("token=")) return c.err("',token='");
    auto tok = read_paren_group(c);
    if (!tok.ok()) return tok.error();
    r.token_raw = tok.take();
    if (!c.eat(',') || !c.eat_lit("source=")) return c.err("',source='");
    auto src = c.quoted();
    if (!src.ok()) return src.error();
    r.source = src.take();
    return r;
}

Result<std::vector<RawRecord>> read_records(std::string_view field13) {
    std::vector<RawRecord> out;
    if (field13.empty()) return out;
    Cur c(field13);
    if (!c.eat('[')) return c.err("'['");
    if (!c.eat(']')) {
        while (true) {
            auto rec = read_record(c);
            if (!rec.ok()) return rec.error();
            out.push_back(rec.take());
            if (c.eat(',')) continue;
            if (c.eat(']')) break;
            return c.err("',' or ']'");
        }
    }
    if (!c.done()) return c.err("end of input");
    return out;
}

// --- shared payload helpers ---------------------------------------------

Result<std::string> payload_decimal(Cur& c, std::string_view stops) {
    std::size_t at = c.pos();
    auto v = rdf::canonical_decimal(c.bare_until(stops));
    if (!v.ok()) return Error{Errc::GrammarError, "expected decimal: " + v.error().message, at};
    return v;
}

Result<std::string> payload_decimal_in(Cur& c, std::string_view stops, double lo, double hi) {
    std::size_t at = c.pos();
    auto v = rdf::canonical_decimal_in(c.bare_until(stops), lo, hi);
    if (!v.ok()) return Error{Errc::GrammarError, "expected decimal: " + v.error().message, at};
    return v;
}

Result<std::uint64_t> payload_integer(Cur& c, std::string_view stops) {
    std::size_t at = c.pos();
    auto v = rdf::canonical_integer(c.bare_until(stops));
    if (!v.ok() || (!v.value().empty() && v.value()[0] == '-'))
        return Error{Errc::GrammarError, "expected non-negative integer", at};
    return static_cast<std::uint64_t>(std::strtoull(v.value().c_str(), nullptr, 10));
}

Result<std::string> payload_absolute_url(Cur& c) {
    std::size_t at = c.pos();
    auto url = c.quoted();
    if (!url.ok()) return url.error();
    if (!rdf::has_iri_scheme(url.value()))
        return Error{Errc::GrammarError, "expected absolute URL", at};
    return url;
}

// --- per-component payload sub-grammars ----------------------------------

Result<ComponentPayload> parse_alias_matcher(Cur& c) {
    if (!c.eat_lit("freebaseDate=")) return c.err("'freebaseDate='");
    std::size_t at = c.pos();
    auto date = rdf::canonical_date(c.bare_until(";"));
    if (!date.ok()) return Error{Errc::GrammarError, "expected date: " + date.error().message, at};
    return ComponentPayload{AliasMatcherPayload{date.take()}};
}

Result<ComponentPayload> parse_cmc(Cur& c) {
    CmcPayload p;
    do {
        if (!c.eat_lit("pattern(")) return c.err("'pattern('");
        MorphPattern m;
        m.name = c.bare_until(",");
        if (m.name.empty()) return c.err("pattern name");
        if (!c.eat(',')) return c.err("','");
        auto value = c.quoted();
        if (!value.ok()) return value.error();
        m.value = value.take();
        if (!c.eat(',')) return c.err("','");
        auto score = payload_decimal(c, ")");
        if (!score.ok()) return score.error();
        m.score = score.take();
        if (!c.eat(')')) return c.err("')'");
        p.patterns.push_back(std::move(m));
    } while (c.eat(';'));
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_cpl(Cur& c) {
    CplPayload p;
    do {
        if (!c.eat_lit("pattern(")) return c.err("'pattern('");
        PatternOcc o;
        auto text = c.quoted();
        if (!text.ok()) return text.error();
        o.pattern = text.take();
        if (!c.eat(',')) return c.err("','");
        auto n = payload_integer(c, ")");
        if (!n.ok()) return n.error();
        if (n.value() < 1) return Error{Errc::GrammarError, "occurrence count must be >= 1", c.pos()};
        o.occurrences = n.value();
        if (!c.eat(')')) return c.err("')'");
        p.patterns.push_back(std::move(o));
    } while (c.eat(';'));
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_kb_manipulation(Cur& c) {
    if (!c.eat_lit("oldBug=")) return c.err("'oldBug='");
    auto bug = c.quoted();
    if (!bug.ok()) return bug.error();
    return ComponentPayload{KbManipulationPayload{bug.take()}};
}

Result<ComponentPayload> parse_lat_long(Cur& c) {
    LatLongPayload p;
    do {
        if (!c.eat_lit("location(")) return c.err("'location('");
        GeoLocation g;
        auto name = c.quoted_lang();
        if (!name.ok()) return name.error();
        g.name = name.value().first;
        g.lang = name.value().second;
        if (!c.eat(',')) return c.err("','");
        auto lat = payload_decimal_in(c, ",", -90.0, 90.0);
        if (!lat.ok()) return lat.error();
        g.latitude = lat.take();
        if (!c.eat(',')) return c.err("','");
        auto lon = payload_decimal_in(c, ")", -180.0, 180.0);
        if (!lon.ok()) return lon.error();
        g.longitude = lon.take();
        if (!c.eat(')')) return c.err("')'");
        p.locations.push_back(std::move(g));
    } while (c.eat(';'));
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_mbl(Cur& c) {
    MblPayload p;
    bool have_entity = false, have_category = false;
    do {
        std::string key = c.bare_until("=");
        if (!c.eat('=')) return c.err("'='");
        auto value = c.quoted();
        if (!value.ok()) return value.error();
        if (key == "promotedEntity") {
            p.promoted_entity = value.take();
            have_entity = true;
        } else if (key == "promotedEntityCategory") {
            p.promoted_entity_category = value.take();
            have_category = true;
        } else if (key == "promotedRelation") {
            p.promoted_relation = value.take();
        } else if (key == "promotedValue") {
            p.promoted_value = value.take();
        } else if (key == "promotedValueCategory") {
            p.promoted_value_category = value.take();
        } else {
            return Error{Errc::GrammarError, "unknown MBL key '" + key + "'", c.pos()};
        }
    } while (c.eat(';'));
    if (!have_entity) return c.err("'promotedEntity='");
    if (!have_category) return c.err("'promotedEntityCategory='");
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_oe(Cur& c) {
    OePayload p;
    do {
        if (!c.eat_lit("textUrl(")) return c.err("'textUrl('");
        TextUrl t;
        auto text = c.quoted_lang();
        if (!text.ok()) return text.error();
        t.text = text.value().first;
        t.lang = text.value().second;
        if (!c.eat(',')) return c.err("','");
        auto url = payload_absolute_url(c);
        if (!url.ok()) return url.error();
        t.url = url.take();
        if (!c.eat(')')) return c.err("')'");
        p.pairs.push_back(std::move(t));
    } while (c.eat(';'));
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_ontology_modifier(Cur& c) {
    OntologyModifierPayload p;
    if (!c.eat_lit("modification=")) return c.err("'modification='");
    auto mod = c.quoted();
    if (!mod.ok()) return mod.error();
    p.modification = mod.take();
    if (!c.eat(';') || !c.eat_lit("kind=")) return c.err("';kind='");
    std::string kind = c.bare_until(";");
    if (kind == "Category")
        p.kind = OntologyModifierPayload::Kind::Category;
    else if (kind == "Relation")
        p.kind = OntologyModifierPayload::Kind::Relation;
    else
        return Error{Errc::GrammarError, "expected 'Category' or 'Relation'", c.pos()};
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_pra(Cur& c) {
    PraPayload p;
    do {
        if (!c.eat_lit("path(")) return c.err("'path('");
        RelationPath path;
        std::string dir = c.bare_until(",");
        if (dir == "forward")
            path.direction = RelationPath::Direction::Forward;
        else if (dir == "backward")
            path.direction = RelationPath::Direction::Backward;
        else
            return c.err("'forward' or 'backward'");
        if (!c.eat(',')) return c.err("','");
        auto score = payload_decimal(c, ",");
        if (!score.ok()) return score.error();
        path.score = score.take();
        if (!c.eat(',') || !c.eat('[')) return c.err("',['");
        do {
            auto rel = c.quoted();
            if (!rel.ok()) return rel.error();
            path.relations.push_back(rel.take());
        } while (c.eat(','));
        if (!c.eat(']') || !c.eat(')')) return c.err("'])'");
        p.paths.push_back(std::move(path));
    } while (c.eat(';'));
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_rl(Cur& c) {
    RlPayload p;
    if (!c.eat_lit("rule([")) return c.err("'rule(['");
    if (!c.eat(']')) {
        do {
            if (!c.eat_lit("var(")) return c.err("'var('");
            RuleVariable v;
            auto var = c.quoted();
            if (!var.ok()) return var.error();
            v.variable = var.take();
            if (!c.eat(',')) return c.err("','");
            auto value = c.quoted();
            if (!value.ok()) return value.error();
            v.value = value.take();
            if (!c.eat(')')) return c.err("')'");
            p.rule_scores.rule.variables.push_back(std::move(v));
        } while (c.eat(','));
        if (!c.eat(']')) return c.err("']'");
    }
    if (!c.eat(',') || !c.eat('[')) return c.err("',['");
    do {
        if (!c.eat_lit("pred(")) return c.err("'pred('");
        RulePredicate pr;
        auto name = c.quoted();
        if (!name.ok()) return name.error();
        pr.name = name.take();
        if (!c.eat(',')) return c.err("','");
        auto v1 = c.quoted();
        if (!v1.ok()) return v1.error();
        pr.first_variable = v1.take();
        if (!c.eat(',')) return c.err("','");
        auto v2 = c.quoted();
        if (!v2.ok()) return v2.error();
        pr.second_variable = v2.take();
        if (!c.eat(')')) return c.err("')'");
        p.rule_scores.rule.predicates.push_back(std::move(pr));
    } while (c.eat(','));
    if (!c.eat(']')) return c.err("']'");
    if (!c.eat(',')) return c.err("','");
    auto acc = payload_decimal_in(c, ",", 0.0, 1.0);
    if (!acc.ok()) return acc.error();
    p.rule_scores.accuracy = acc.take();
    if (!c.eat(',')) return c.err("','");
    auto correct = payload_integer(c, ",");
    if (!correct.ok()) return correct.error();
    p.rule_scores.nb_correct = correct.value();
    if (!c.eat(',')) return c.err("','");
    auto incorrect = payload_integer(c, ",");
    if (!incorrect.ok()) return incorrect.error();
    p.rule_scores.nb_incorrect = incorrect.value();
    if (!c.eat(',')) return c.err("','");
    auto unknown = payload_integer(c, ")");
    if (!unknown.ok()) return unknown.error();
    p.rule_scores.nb_unknown = unknown.value();
    if (!c.eat(')')) return c.err("')'");
    // Flag predicate variables that the variables list does not bind.
    HornRule& rule = p.rule_scores.rule;
    for (const RulePredicate& pr : rule.predicates) {
        for (const std::string& used : {pr.first_variable, pr.second_variable}) {
            bool bound = false;
            for (const RuleVariable& v : rule.variables)
                if (v.variable == used) bound = true;
            for (const std::string& f : rule.free_variables)
                if (f == used) bound = true;
            if (!bound) rule.free_variables.push_back(used);
        }
    }
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_seal(Cur& c) {
    if (!c.eat_lit("url=")) return c.err("'url='");
    auto url = payload_absolute_url(c);
    if (!url.ok()) return url.error();
    return ComponentPayload{SealPayload{url.take()}};
}

Result<ComponentPayload> parse_semparse(Cur& c) {
    if (!c.eat_lit("sentence=")) return c.err("'sentence='");
    auto s = c.quoted();
    if (!s.ok()) return s.error();
    return ComponentPayload{SemparsePayload{s.take()}};
}

Result<ComponentPayload> parse_spreadsheet_edits(Cur& c) {
    SpreadsheetEditsPayload p;
    struct Slot {
        const char* key;
        std::string* dst;
    };
    const Slot slots[] = {{"user=", &p.user},         {"entity=", &p.entity},
                          {"relation=", &p.relation}, {"value=", &p.value},
                          {"action=", &p.action},     {"file=", &p.file}};
    for (std::size_t i = 0; i < std::size(slots); ++i) {
        if (i && !c.eat(';')) return c.err("';'");
        if (!c.eat_lit(slots[i].key))
            return c.err(std::string("'") + slots[i].key + "'");
        auto value = c.quoted();
        if (!value.ok()) return value.error();
        *slots[i].dst = value.take();
    }
    return ComponentPayload{std::move(p)};
}

Result<ComponentPayload> parse_payload(ComponentId id, const std::string& source) {
    if (id == ComponentId::LE) {
        if (!source.empty())
            return Error{Errc::GrammarError, "LE records carry no source payload", 0};
        return ComponentPayload{LePayload{}};
    }
    Cur c(source);
    Result<ComponentPayload> payload = [&]() -> Result<ComponentPayload> {
        switch (id) {
            case ComponentId::AliasMatcher: return parse_alias_matcher(c);
            case ComponentId::CMC: return parse_cmc(c);
            case ComponentId::CPL: return parse_cpl(c);
            case ComponentId::KbManipulation: return parse_kb_manipulation(c);
            case ComponentId::LatLong: return parse_lat_long(c);
            case ComponentId::MBL: return parse_mbl(c);
            case ComponentId::OE: return parse_oe(c);
            case ComponentId::OntologyModifier: return parse_ontology_modifier(c);
            case ComponentId::PRA: return parse_pra(c);
            case ComponentId::RL: return parse_rl(c);
            case ComponentId::SEAL: return parse_seal(c);
            case ComponentId::Semparse: return parse_semparse(c);
            case ComponentId::SpreadsheetEdits: return parse_spreadsheet_edits(c);
            case ComponentId::LE: break;  // handled above
        }
        return Error{Errc::GrammarError, "unhandled component payload", 0};
    }();
    if (!payload.ok()) return payload.error();
    if (!c.done()) return c.err("end of payload");
    return payload;
}

}  // namespace

Result<std::size_t> count_source_records(const std::string& field13) {
    auto records = read_records(field13);
    if (!records.ok()) return records.error();
    return records.value().size();
}

Result<Token> parse_token(std::string_view parenthesized, ComponentId component,
                          bool generalization) {
    auto shape_error = [&](const Error& e) {
        return Error{Errc::TokenShapeError, "token: " + e.message, e.offset};
    };
    Cur c(parenthesized);
    if (!c.eat('(')) return shape_error(c.err("'('"));
    auto entity = c.quoted();
    if (!entity.ok()) return shape_error(entity.error());
    if (!c.eat(',')) return shape_error(c.err("','"));
    if (component == ComponentId::LatLong) {
        auto lat = payload_decimal_in(c, ",", -90.0, 90.0);
        if (!lat.ok()) return shape_error(lat.error());
        if (!c.eat(',')) return shape_error(c.err("','"));
        auto lon = payload_decimal_in(c, ")", -180.0, 180.0);
        if (!lon.ok()) return shape_error(lon.error());
        if (!c.eat(')') || !c.done()) return shape_error(c.err("')'"));
        return Token{GeoToken{entity.take(), lat.take(), lon.take()}};
    }
    auto value = c.quoted();
    if (!value.ok()) return shape_error(value.error());
    if (!c.eat(')') || !c.done()) return shape_error(c.err("')'"));
    if (generalization) return Token{GeneralizationToken{entity.take(), value.take()}};
    return Token{RelationToken{entity.take(), value.take()}};
}

Result<std::vector<ComponentExecution>> parse_candidate_source(
    const std::string& field13, const std::vector<std::uint64_t>& iterations,
    const std::vector<std::string>& probabilities, const ParseSourceOptions& opts) {
    auto records = read_records(field13);
    if (!records.ok()) return records.error();
    const std::vector<RawRecord>& raw = records.value();

    if ((!iterations.empty() || !probabilities.empty()) &&
        (iterations.size() != raw.size() || probabilities.size() != raw.size())) {
        return Error{Errc::IterationProbabilityArityMismatch,
                     "fields 4/5 list " + std::to_string(iterations.size()) + "/" +
                         std::to_string(probabilities.size()) + " entries for " +
                         std::to_string(raw.size()) + " source records"};
    }

    std::vector<ComponentExecution> out;
    out.reserve(raw.size());
    for (const RawRecord& r : raw) {
        auto id = normalize_component(r.name);
        if (!id) {
            if (opts.diagnostics)
                opts.diagnostics->emit({kUnknownComponent, opts.line_number,
                                        "unknown component '" + r.name + "', record skipped"});
            continue;
        }
        ComponentExecution e;
        e.component = *id;
        e.original_name = r.name;

        auto iter = rdf::canonical_integer(r.iteration_raw);
        if (!iter.ok() || (!iter.value().empty() && iter.value()[0] == '-'))
            return Error{Errc::GrammarError, "expected non-negative iteration", r.offset};
        e.iteration = static_cast<std::uint64_t>(std::strtoull(iter.value().c_str(), nullptr, 10));

        auto prob = rdf::canonical_decimal_in(r.prob_raw, 0.0, 1.0);
        if (!prob.ok())
            return Error{Errc::GrammarError, "record probability: " + prob.error().message,
                         r.offset};
        e.probability = prob.take();

        auto time = rdf::canonical_datetime(r.time_raw);
        if (!time.ok())
            return Error{Errc::GrammarError, "record time: " + time.error().message, r.offset};
        e.time = time.take();
        e.source_raw = r.source;

        auto token = parse_token(r.token_raw, e.component, opts.generalization_belief);
        if (!token.ok()) return token.error();
        e.token = token.take();

        auto payload = parse_payload(e.component, r.source);
        if (!payload.ok()) {
            Error err = payload.error();
            err.message = std::string(component_name(e.component)) + " payload: " + err.message;
            return err;
        }
        e.payload = payload.take();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace nell2rdf::prov
