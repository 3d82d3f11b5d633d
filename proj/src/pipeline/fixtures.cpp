#include "nell2rdf/pipeline/fixtures.hpp"

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nell2rdf/ingest/dialect.hpp"
#include "nell2rdf/prov/component.hpp"
#include "nell2rdf/util/sink.hpp"

namespace nell2rdf::pipeline {

namespace {

using prov::ComponentId;

// What a fixture relation links. `datatype` is the xsd suffix of the
// declared range ("integer", ...) or null for an entity-valued relation.
struct RelSpec {
    const char* token;
    const char* subject_cat;
    const char* object_cat;
    const char* datatype;
};

constexpr RelSpec kRelations[] = {
    {"concept:worksfor", "person", "company", nullptr},
    {"concept:companyemploys", "company", "person", nullptr},
    {"concept:citycapitalofcountry", "city", "country", nullptr},
    {"concept:athleteplayssport", "athlete", "sport", nullptr},
    {"concept:citypopulation", "city", nullptr, "integer"},
    {"concept:wasbornondate", "person", nullptr, "date"},
    {"concept:nicknamed", "person", nullptr, "string"},
    {"concept:haslatitude", "city", nullptr, "decimal"},
    {"concept:isactive", "company", nullptr, "boolean"},
    {"concept:lastmodified", "company", nullptr, "dateTime"},
};
constexpr std::size_t kRelCount = sizeof(kRelations) / sizeof(kRelations[0]);

const std::vector<std::string>& name_pool(const std::string& cat) {
    static const std::vector<std::string> person = {"alice_smith", "john_doe", "maría_gómez",
                                                    "山田太郎", "jean-pierre_leroy"};
    static const std::vector<std::string> city = {"paris", "saint_étienne", "münchen", "東京",
                                                  "new_york"};
    static const std::vector<std::string> country = {"france", "germany", "japan", "usa"};
    static const std::vector<std::string> company = {"acme", "globex", "crédit_agricole",
                                                     "initech"};
    static const std::vector<std::string> sport = {"tennis", "football", "kendō"};
    if (cat == "city") return city;
    if (cat == "country") return country;
    if (cat == "company") return company;
    if (cat == "sport") return sport;
    return person;  // person, politician, athlete
}

std::string humanize(std::string name) {
    for (char& c : name)
        if (c == '_') c = ' ';
    return name;
}

// Backslash-escapes a string for the grammar's quoted form (\" and \\).
std::string escape_q(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + escape_q(s) + "\""; }

std::string fmt(const char* format, auto... args) {
    char buf[128];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const char* kOntologyRows[] = {
    // Categories.
    "concept:agent\tmemberofsets\trtwcategory",
    "concept:person\tmemberofsets\trtwcategory",
    "concept:politician\tmemberofsets\trtwcategory",
    "concept:athlete\tmemberofsets\trtwcategory",
    "concept:city\tmemberofsets\trtwcategory",
    "concept:country\tmemberofsets\trtwcategory",
    "concept:company\tmemberofsets\trtwcategory",
    "concept:sport\tmemberofsets\trtwcategory",
    "concept:person\tgeneralizations\tconcept:agent",
    "concept:politician\tgeneralizations\tconcept:person",
    "concept:athlete\tgeneralizations\tconcept:person",
    "concept:person\tdescription\tA human being, sometimes \"famous\"",
    "concept:city\tdescription\tCities such as Saint-Étienne or 東京",
    "concept:person\tpopulate\ttrue",
    "concept:person\tvisible\ttrue",
    "concept:person\tinstancetype\tconcept:agent",
    "concept:person\tmutexpredicates\tconcept:city",
    "concept:city\tmutexpredicates\tconcept:person",
    // Entity-valued relations.
    "concept:worksfor\tmemberofsets\trtwrelation",
    "concept:worksfor\tdomain\tconcept:person",
    "concept:worksfor\trange\tconcept:company",
    "concept:worksfor\tantireflexive\ttrue",
    "concept:worksfor\tantisymmetric\ttrue",
    "concept:worksfor\tnrofvalues\t1",
    "concept:worksfor\thumanformat\targ1 works for arg2",
    "concept:worksfor\tinverse\tconcept:companyemploys",
    "concept:worksfor\tvisible\ttrue",
    "concept:worksfor\tpopulate\ttrue",
    "concept:worksfor\tdomainwithinrange\tfalse",
    "concept:worksfor\trangewithindomain\tfalse",
    "concept:worksfor\tmutexpredicates\tconcept:athleteplayssport",
    "concept:worksfor\tdescription\tEmployment: a person works for a company",
    "concept:companyemploys\tmemberofsets\trtwrelation",
    "concept:companyemploys\tdomain\tconcept:company",
    "concept:companyemploys\trange\tconcept:person",
    "concept:companyemploys\tinverse\tconcept:worksfor",
    "concept:citycapitalofcountry\tmemberofsets\trtwrelation",
    "concept:citycapitalofcountry\tdomain\tconcept:city",
    "concept:citycapitalofcountry\trange\tconcept:country",
    "concept:citycapitalofcountry\tnrofvalues\t1",
    "concept:citycapitalofcountry\tantisymmetric\ttrue",
    "concept:athleteplayssport\tmemberofsets\trtwrelation",
    "concept:athleteplayssport\tdomain\tconcept:athlete",
    "concept:athleteplayssport\trange\tconcept:sport",
    "concept:athleteplayssport\tnrofvalues\tany",
    // Literal-valued relations.
    "concept:citypopulation\tmemberofsets\trtwrelation",
    "concept:citypopulation\tdomain\tconcept:city",
    "concept:citypopulation\trange\txsd:integer",
    "concept:wasbornondate\tmemberofsets\trtwrelation",
    "concept:wasbornondate\tdomain\tconcept:person",
    "concept:wasbornondate\trange\txsd:date",
    "concept:nicknamed\tmemberofsets\trtwrelation",
    "concept:nicknamed\tdomain\tconcept:person",
    "concept:nicknamed\trange\txsd:string",
    "concept:nicknamed\thumanformat\targ1 is nicknamed \"arg2\"",
    "concept:haslatitude\tmemberofsets\trtwrelation",
    "concept:haslatitude\tdomain\tconcept:city",
    "concept:haslatitude\trange\txsd:decimal",
    "concept:isactive\tmemberofsets\trtwrelation",
    "concept:isactive\tdomain\tconcept:company",
    "concept:isactive\trange\txsd:boolean",
    "concept:lastmodified\tmemberofsets\trtwrelation",
    "concept:lastmodified\tdomain\tconcept:company",
    "concept:lastmodified\trange\txsd:dateTime",
};

// Alternates the documented alias spellings so normalization stays covered.
std::string spell_component(ComponentId id, std::uint64_t salt) {
    switch (id) {
        case ComponentId::CPL:
            return salt % 3 == 0 ? "CPL1" : salt % 3 == 1 ? "CPL2" : "CPL";
        case ComponentId::SEAL: return salt % 2 ? "CSEAL" : "SEAL";
        case ComponentId::CMC: return salt % 2 ? "CML" : "CMC";
        case ComponentId::MBL:
            switch (salt % 4) {
                case 0: return "ErrorBasedIntegrator";
                case 1: return "Knowledge Integrator";
                case 2: return "EntityResolverCleanup";
                default: return "MBL";
            }
        default: return std::string(prov::component_name(id));
    }
}

struct Row {
    std::string entity;
    std::string relation;
    std::string value;
    bool literal_value = false;
    std::string entity_cat;  // "person"
    std::string value_cat;   // set for entity-valued relations
};

std::string payload_for(ComponentId id, const Row& row, std::uint64_t i, std::uint64_t r) {
    switch (id) {
        case ComponentId::AliasMatcher:
            return fmt("freebaseDate=%04d-%02d-%02d", 1990 + int(i % 30), 1 + int(i % 12),
                       1 + int(r % 28));
        case ComponentId::CMC:
            return "pattern(morphological," + quoted(fmt("suffix:-%s", i % 2 ? "ist" : "ism")) +
                   fmt(",%d.%02d)", int(i % 3), int(r % 100)) + ";pattern(orthographic," +
                   quoted("CAP word") + fmt(",%d.5)", int(r % 2));
        case ComponentId::CPL:
            return "pattern(" + quoted("arg1 works for arg2") + fmt(",%d)", 1 + int(i % 9)) +
                   ";pattern(" + quoted("arg2 employer of arg1") + fmt(",%d)", 1 + int(r % 4));
        case ComponentId::KbManipulation:
            return "oldBug=" + quoted("merged duplicate of " + row.entity);
        case ComponentId::LatLong:
            return "location(" + quoted("Saint-Étienne") + "@fr" +
                   fmt(",%d.%02d,%d.%02d)", int(i % 89), int(r % 100), int(r % 179), int(i % 100));
        case ComponentId::LE:
            return "";
        case ComponentId::MBL: {
            std::string p = "promotedEntity=" + quoted(row.entity) +
                            ";promotedEntityCategory=" + quoted(row.entity_cat);
            if (i % 2 == 0) p += ";promotedRelation=" + quoted(row.relation);
            if (i % 3 == 0) {
                p += ";promotedValue=" + quoted(row.value);
                if (!row.value_cat.empty())
                    p += ";promotedValueCategory=" + quoted(row.value_cat);
            }
            return p;
        }
        case ComponentId::OE:
            return "textUrl(" + quoted(humanize(row.entity) + " … " + humanize(row.value)) +
                   "@en," + quoted(fmt("http://news.example.org/%04d/article", int(i % 2000))) +
                   ")";
        case ComponentId::OntologyModifier:
            return "modification=" + quoted("added " + row.entity_cat) +
                   (i % 2 ? ";kind=Relation" : ";kind=Category");
        case ComponentId::PRA:
            return fmt("path(forward,0.%03d,[", int(i % 1000)) + quoted("worksfor") + "," +
                   quoted("companyemploys") + "])" +
                   fmt(";path(backward,0.%02d,[", int(r % 100)) + quoted("athleteplayssport") +
                   "])";
        case ComponentId::RL: {
            std::string vars =
                i % 4 == 0 ? std::string("") : "var(" + quoted("?x") + "," + quoted(row.entity) + ")";
            return "rule([" + vars + "],[pred(" + quoted("worksfor") + "," + quoted("?x") + "," +
                   quoted("?y") + "),pred(" + quoted("companyemploys") + "," + quoted("?y") + "," +
                   quoted("?x") + ")]" +
                   fmt(",0.%03d,%d,%d,%d)", int(r % 1000), int(i % 40), int(r % 7), int(i % 5));
        }
        case ComponentId::SEAL:
            return "url=" + quoted(fmt("http://lists.example.org/wrapper/%05d", int(i % 100000)));
        case ComponentId::Semparse:
            return "sentence=" +
                   quoted(humanize(row.entity) + " relates to " + humanize(row.value) + ".");
        case ComponentId::SpreadsheetEdits:
            return "user=" + quoted(fmt("editor%02d", int(r % 20))) + ";entity=" +
                   quoted(row.entity) + ";relation=" + quoted(row.relation) + ";value=" +
                   quoted(row.value) + ";action=" + quoted(i % 5 ? "add" : "delete") + ";file=" +
                   quoted(fmt("batch-%03d.tsv", int(i % 500)));
    }
    return "";
}

struct RecordOut {
    std::string text;
    std::uint64_t iteration = 0;
    std::string probability;
};

RecordOut make_record(ComponentId id, const Row& row, std::uint64_t i, std::uint64_t r,
                      bool generalization, std::mt19937_64& rng) {
    RecordOut out;
    out.iteration = 1 + (rng() % 1100);
    out.probability = fmt("0.%03d", int(rng() % 1000));
    const std::uint64_t salt = rng();

    std::string time;
    if (salt % 5 == 0) {
        // Offset form; the converter normalizes it to UTC.
        time = fmt("2015-%02d-%02d 0%d:%02d:%02d+02:00", 1 + int(i % 12), 1 + int(r % 28),
                   int(salt % 10), int(i % 60), int(r % 60));
    } else {
        time = fmt("2014-%02d-%02dT%02d:%02d:%02dZ", 1 + int(r % 12), 1 + int(i % 28),
                   int(salt % 24), int(r % 60), int(i % 60));
    }

    std::string token;
    if (id == ComponentId::LatLong) {
        token = quoted(row.entity) + fmt(",%d.%03d,-%d.%03d", int(i % 89), int(salt % 1000),
                                         int(r % 179), int(i % 1000));
    } else {
        (void)generalization;  // same surface shape; the caller's flag decides the type
        token = quoted(row.entity) + "," + quoted(row.value);
    }

    out.text = spell_component(id, salt) + ",iteration=" + std::to_string(out.iteration) +
               ",prob=" + out.probability + ",time=" + time + ",token=(" + token + "),source=" +
               quoted(payload_for(id, row, i, r));
    return out;
}

Result<bool> write_file(const std::string& path, const std::string& content) {
    auto sink = open_sink(path, false);
    if (!sink.ok()) return sink.error();
    sink.value()->write(content);
    return sink.value()->close();
}

}  // namespace

Result<FixturePaths> generate_fixtures(const FixtureConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        return Error{Errc::IoError,
                     "cannot create output directory " + cfg.out_dir + ": " + ec.message()};

    FixturePaths paths;
    paths.ontology = cfg.out_dir + "/fixture.ontology.tsv";
    paths.promoted = cfg.out_dir + "/fixture.promoted.tsv";
    paths.candidates = cfg.out_dir + "/fixture.candidates.tsv";

    {
        std::string content;
        for (const char* row : kOntologyRows) {
            content += row;
            content += '\n';
        }
        auto written = write_file(paths.ontology, content);
        if (!written.ok()) return written.error();
    }

    const std::string header =
        "Entity\tRelation\tValue\tIteration of Promotion\tProbability\tSource"
        "\tEntity literalStrings\tValue literalStrings\tBest Entity literalString"
        "\tBest Value literalString\tCategories for Entity\tCategories for Value"
        "\tCandidate Source\n";
    auto promoted_sink = open_sink(paths.promoted, false);
    if (!promoted_sink.ok()) return promoted_sink.error();
    auto candidates_sink = open_sink(paths.candidates, false);
    if (!candidates_sink.ok()) return candidates_sink.error();
    // Streamed out row by row; million-row fixtures must not live in memory.
    std::string promoted = header;
    std::string candidates = header;
    auto flush = [&](bool force) {
        if (!force && promoted.size() < (1u << 20)) return;
        promoted_sink.value()->write(promoted);
        candidates_sink.value()->write(candidates);
        promoted.clear();
        candidates.clear();
    };

    std::mt19937_64 rng(cfg.seed);
    const auto& components = prov::all_components();

    for (std::uint64_t i = 0; i < cfg.beliefs; ++i) {
        Row row;
        const bool generalization = i % 9 == 7;
        const RelSpec* rel = nullptr;
        if (generalization) {
            row.entity_cat = i % 2 ? "politician" : "athlete";
            row.relation = "generalizations";
            row.value = "concept:" + row.entity_cat;
            row.value_cat = row.entity_cat;
        } else {
            // The first pass over the table is forced so every relation —
            // and with it every datatype rule — shows up even in tiny runs.
            rel = &kRelations[i < kRelCount ? i : rng() % kRelCount];
            row.entity_cat = rel->subject_cat;
            row.relation = rel->token;
        }
        const auto& pool = name_pool(row.entity_cat);
        row.entity = "concept:" + row.entity_cat + ":" + pool[rng() % pool.size()] + "_" +
                     std::to_string(i);

        if (rel) {
            if (rel->datatype) {
                row.literal_value = true;
                const std::string dt = rel->datatype;
                if (dt == "integer") {
                    row.value = std::to_string(1000 + i * 7);
                } else if (dt == "date") {
                    row.value = fmt("%04d-%02d-%02d", 1920 + int(i % 100), 1 + int(i % 12),
                                    1 + int(i % 28));
                } else if (dt == "string") {
                    row.value = i % 3 ? fmt("the %03d-th", int(i % 1000))
                                      : std::string("aka \"the great\"");
                } else if (dt == "decimal") {
                    // Trailing zeros on purpose: canonicalization is part of
                    // what the fixture exercises.
                    row.value = fmt("%d.%02d0", int(i % 90), int(i % 100));
                } else if (dt == "boolean") {
                    row.value = i % 2 ? "true" : "false";
                } else {  // dateTime
                    row.value = fmt("2016-%02d-%02dT%02d:%02d:%02dZ", 1 + int(i % 12),
                                    1 + int(i % 28), int(i % 24), int(i % 60), int((i * 3) % 60));
                }
            } else {
                row.value_cat = rel->object_cat;
                const auto& vpool = name_pool(row.value_cat);
                row.value = "concept:" + row.value_cat + ":" + vpool[rng() % vpool.size()];
            }
        }

        // Fields 7-12.
        std::vector<std::string> entity_labels = {humanize(row.entity.substr(
            row.entity.rfind(':') + 1))};
        if (i % 4 == 0) entity_labels.push_back("Smith, \"Ally\" " + std::to_string(i));
        std::vector<std::string> value_labels;
        std::string value_best;
        std::string value_cats;
        if (!row.literal_value && !row.value_cat.empty() && !generalization) {
            value_labels.push_back(humanize(row.value.substr(row.value.rfind(':') + 1)));
            if (i % 6 != 5) value_best = value_labels[0];
            value_cats = "concept:" + row.value_cat;
            if (row.value_cat == "politician" || row.value_cat == "athlete")
                value_cats += " concept:person";
        }
        std::string entity_best = i % 6 == 5 ? std::string() : entity_labels[0];
        std::string entity_cats = "concept:" + row.entity_cat;
        if (row.entity_cat == "politician" || row.entity_cat == "athlete")
            entity_cats += " concept:person";

        // Field 13 plus the per-record number lists.
        const std::uint64_t nrecords = 1 + rng() % 3;
        std::string field13 = "[";
        std::string iterations, probabilities, summary;
        for (std::uint64_t r = 0; r < nrecords; ++r) {
            const ComponentId id = components[(i + r) % components.size()];
            RecordOut rec = make_record(id, row, i, r, generalization, rng);
            if (r) {
                field13 += ',';
                iterations += ',';
                probabilities += ',';
                summary += ',';
            }
            field13 += rec.text;
            iterations += std::to_string(rec.iteration);
            probabilities += rec.probability;
            summary += std::string(prov::component_name(id));
        }
        field13 += ']';

        auto tsv = [&](const std::string& f4, const std::string& f5) {
            std::string line = row.entity;
            line += '\t';
            line += row.relation;
            line += '\t';
            line += row.value;
            line += '\t';
            line += f4;
            line += '\t';
            line += f5;
            line += '\t';
            line += summary;
            line += '\t';
            line += ingest::join_label_list(entity_labels, ',');
            line += '\t';
            line += ingest::join_label_list(value_labels, ',');
            line += '\t';
            line += entity_best;
            line += '\t';
            line += value_best;
            line += '\t';
            line += entity_cats;
            line += '\t';
            line += value_cats;
            line += '\t';
            line += field13;
            line += '\n';
            return line;
        };

        // Every seventh row sits below the promotion threshold.
        const std::string promo_prob =
            i % 7 == 3 ? fmt("0.8%02d", int(i % 100)) : fmt("0.9%02d", int(i % 100));
        promoted += tsv(std::to_string(1 + i % 1100), promo_prob);
        candidates += tsv(iterations, probabilities);
        flush(false);
    }

    flush(true);
    auto closed = promoted_sink.value()->close();
    if (!closed.ok()) return closed.error();
    closed = candidates_sink.value()->close();
    if (!closed.ok()) return closed.error();
    return paths;
}

}  // namespace nell2rdf::pipeline
