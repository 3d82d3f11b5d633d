#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nell2rdf/pipeline/convert.hpp"
#include "nell2rdf/pipeline/fixtures.hpp"
#include "nell2rdf/pipeline/verify.hpp"
#include "nell2rdf/rdf/ntriples.hpp"
#include "nell2rdf/rdf/parser.hpp"
#include "nell2rdf/util/diagnostics.hpp"
#include "nell2rdf/util/gzline.hpp"

using namespace nell2rdf;
using namespace nell2rdf::pipeline;
using ingest::BeliefKind;
using reify::ModelId;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "nell2rdf-test-XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string sub(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Reads lines through the transparent-gzip reader, so .gz and plain files
// can be compared directly.
std::vector<std::string> read_lines(const std::string& path) {
    LineReader in;
    REQUIRE(in.open(path).ok());
    std::vector<std::string> lines;
    std::string line;
    while (in.next(line)) lines.push_back(line);
    REQUIRE(in.io_error().empty());
    return lines;
}

FixturePaths gen(const std::string& dir, std::uint64_t beliefs, std::uint64_t seed = 7) {
    FixtureConfig fc;
    fc.beliefs = beliefs;
    fc.seed = seed;
    fc.out_dir = dir;
    auto r = generate_fixtures(fc);
    REQUIRE(r.ok());
    return r.value();
}

RunStats convert(const RunConfig& cfg, DiagnosticSink* diag = nullptr) {
    auto r = run_convert(cfg, diag);
    REQUIRE(r.ok());
    return r.value();
}

const char* const kModelTokens[] = {"reification", "nary", "ngraphs", "singleton", "ndfluents"};

}  // namespace

TEST_CASE("dump file names encode kind, model and syntax") {
    CHECK(dump_file_name(BeliefKind::Promoted, ModelId::RdfReification, false) ==
          "nellrdf.promoted.reification.nt");
    CHECK(dump_file_name(BeliefKind::Promoted, ModelId::SingletonProperty, true) ==
          "nellrdf.promoted.singleton.nt.gz");
    // The named-graphs dump needs quads even for promoted beliefs.
    CHECK(dump_file_name(BeliefKind::Promoted, ModelId::NamedGraphs, false) ==
          "nellrdf.promoted.ngraphs.nq");
    CHECK(dump_file_name(BeliefKind::Candidate, ModelId::NAry, true) ==
          "nellrdf.candidates.nary.nq.gz");
    CHECK(dump_file_name(BeliefKind::Candidate, ModelId::NdFluents, false) ==
          "nellrdf.candidates.ndfluents.nq");
}

TEST_CASE("the fixture generator is deterministic per seed") {
    TempDir tmp;
    auto a = gen(tmp.sub("a"), 50, 3);
    auto b = gen(tmp.sub("b"), 50, 3);
    CHECK(slurp(a.ontology) == slurp(b.ontology));
    CHECK(slurp(a.promoted) == slurp(b.promoted));
    CHECK(slurp(a.candidates) == slurp(b.candidates));

    auto c = gen(tmp.sub("c"), 50, 4);
    CHECK(slurp(a.promoted) != slurp(c.promoted));

    auto lines = read_lines(a.promoted);
    REQUIRE(lines.size() == 51);  // header + one row per belief
    CHECK(lines[0].rfind("Entity\tRelation", 0) == 0);

    // Same seed, longer run: the first rows are a strict prefix. This is
    // what lets tests diff corpora of different sizes.
    auto d = gen(tmp.sub("d"), 60, 3);
    auto longer = read_lines(d.promoted);
    REQUIRE(longer.size() == 61);
    for (std::size_t i = 0; i < lines.size(); ++i) CHECK(longer[i] == lines[i]);
}

TEST_CASE("promoted conversion: counters, files and per-model laws") {
    TempDir tmp;
    const std::uint64_t n = 120;
    auto fx = gen(tmp.sub("fx"), n);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.promoted;
    cfg.kind = BeliefKind::Promoted;
    cfg.out_dir = tmp.sub("out");
    cfg.deterministic = true;
    cfg.trig = true;
    CollectingDiagnostics diag;
    RunStats stats = convert(cfg, &diag);

    CHECK(stats.rows_read == n);
    CHECK(stats.rows_skipped == 0);
    CHECK(stats.beliefs_converted == n);
    CHECK(stats.rows_read == stats.beliefs_converted + stats.rows_skipped);
    CHECK(stats.quads_emitted == n);  // one named-graph quad per belief

    REQUIRE(stats.per_model.size() == 5);
    for (const char* token : kModelTokens) REQUIRE(stats.per_model.count(token) == 1);

    const ModelStats& reif = stats.per_model.at("reification");
    const ModelStats& nary = stats.per_model.at("nary");
    const ModelStats& ngraphs = stats.per_model.at("ngraphs");
    const ModelStats& singleton = stats.per_model.at("singleton");
    const ModelStats& ndfluents = stats.per_model.at("ndfluents");
    CHECK(reif.statements == 4 * n);
    CHECK(reif.asserted == n);
    CHECK(nary.statements == 2 * n);
    CHECK(nary.asserted == n);
    CHECK(ngraphs.statements == n);
    CHECK(ngraphs.asserted == 0);
    CHECK(singleton.statements == 2 * n);
    CHECK(singleton.asserted == 0);
    // 5 triples per entity-valued belief, 3 per literal-valued one.
    CHECK(ndfluents.statements >= 3 * n);
    CHECK(ndfluents.statements <= 5 * n);
    CHECK(ndfluents.statements % 2 == n % 2);  // 3a+5b with a+b = n
    CHECK(ndfluents.asserted == 0);

    // Metadata and auxiliary volume is model-independent.
    for (const char* token : kModelTokens) {
        const ModelStats& ms = stats.per_model.at(token);
        CHECK(ms.metadata == reif.metadata);
        CHECK(ms.auxiliary == reif.auxiliary);
        CHECK(ms.total == ms.statements + ms.asserted + ms.metadata + ms.auxiliary);
        // The dump holds exactly the counted lines.
        auto lines = read_lines((fs::path(cfg.out_dir) / ms.file).string());
        CHECK(lines.size() == ms.total);
    }
    CHECK(ngraphs.total <= reif.total);

    std::uint64_t dump_lines = 0;
    for (const char* token : kModelTokens) dump_lines += stats.per_model.at(token).total;
    CHECK(dump_lines == stats.triples_emitted + stats.quads_emitted);

    // Every component fires in a 120-row corpus, at 1-3 records per row.
    std::uint64_t execs = 0;
    for (std::uint64_t c : stats.executions_by_component) {
        CHECK(c > 0);
        execs += c;
    }
    CHECK(execs >= n);
    CHECK(execs <= 3 * n);

    // Every seventh fixture row sits below the promotion threshold.
    std::uint64_t expected_warnings = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (i % 7 == 3) ++expected_warnings;
    CHECK(diag.count(kPromotionThresholdWarning) == expected_warnings);
    CHECK(stats.diagnostics == diag.items().size());

    // Side files: ontology, provenance schema, dataset metadata, stats.
    CHECK(read_lines(cfg.out_dir + "/nellrdf.ontology.nt").size() == stats.ontology_triples);
    CHECK(read_lines(cfg.out_dir + "/nellrdf.prov-ontology.nt").size() ==
          stats.prov_ontology_triples);
    CHECK(read_lines(cfg.out_dir + "/nellrdf.metadata.nt").size() ==
          emit_dataset_metadata(stats, cfg).size());

    auto j = nlohmann::json::parse(slurp(cfg.out_dir + "/stats.json"));
    CHECK(j["rows_read"] == n);
    CHECK(j["beliefs_converted"] == n);
    CHECK(!j.contains("wall_ms"));  // deterministic runs omit timing
    CHECK(j["models"]["ngraphs"]["file"] == "nellrdf.promoted.ngraphs.nq");
    CHECK(j["executions_by_component"].size() == prov::kComponentCount);
    CHECK(j["executions_by_component"].contains("SpreadsheetEdits"));

    const std::string with_timing = stats_to_json(stats, false);
    CHECK(nlohmann::json::parse(with_timing).contains("wall_ms"));
}

TEST_CASE("reruns and worker counts do not change the output bytes") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 1200);  // several scheduler batches

    auto run = [&](const char* dir, unsigned workers) {
        RunConfig cfg;
        cfg.ontology_path = fx.ontology;
        cfg.beliefs_path = fx.promoted;
        cfg.kind = BeliefKind::Promoted;
        cfg.out_dir = tmp.sub(dir);
        cfg.deterministic = true;
        cfg.workers = workers;
        convert(cfg);
        return cfg.out_dir;
    };
    const std::string a = run("a", 1);
    const std::string b = run("b", 1);
    const std::string c = run("c", 4);

    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const std::string name = entry.path().filename().string();
        CAPTURE(name);
        const std::string bytes = slurp(entry.path().string());
        CHECK(bytes == slurp(b + "/" + name));
        CHECK(bytes == slurp(c + "/" + name));
        ++compared;
    }
    CHECK(compared == 5 + 4);  // five dumps + ontology, prov-ontology, metadata, stats
}

TEST_CASE("candidate runs write quad dumps; assertion is opt-in") {
    TempDir tmp;
    const std::uint64_t n = 120;
    auto fx = gen(tmp.sub("fx"), n);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.candidates;
    cfg.kind = BeliefKind::Candidate;
    cfg.out_dir = tmp.sub("plain");
    cfg.deterministic = true;
    RunStats stats = convert(cfg);

    CHECK(stats.beliefs_converted == n);
    for (const auto& [token, ms] : stats.per_model) {
        CAPTURE(token);
        CHECK(ms.file.size() > 3);
        CHECK(ms.file.compare(ms.file.size() - 3, 3, ".nq") == 0);
        CHECK(ms.asserted == 0);
    }

    cfg.out_dir = tmp.sub("asserted");
    cfg.assert_candidates = true;
    RunStats asserted = convert(cfg);
    CHECK(asserted.per_model.at("reification").asserted == n);
    CHECK(asserted.per_model.at("nary").asserted == n);
    CHECK(asserted.per_model.at("ngraphs").asserted == 0);
    CHECK(asserted.per_model.at("singleton").asserted == 0);
    CHECK(asserted.per_model.at("ndfluents").asserted == 0);
}

TEST_CASE("the TriG rendering carries exactly the named-graphs quads") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 60);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.promoted;
    cfg.kind = BeliefKind::Promoted;
    cfg.models = {ModelId::NamedGraphs};
    cfg.out_dir = tmp.sub("out");
    cfg.deterministic = true;
    cfg.trig = true;
    convert(cfg);

    auto parse_all = [&](const std::string& path, rdf::SyntaxFormat fmt) {
        rdf::DocumentReader reader(fmt);
        std::vector<std::string> canon;
        for (const std::string& line : read_lines(path)) {
            auto q = reader.read_line(line);
            REQUIRE(q.ok());
            if (!q.value()) continue;
            std::string out;
            rdf::append_quad_line(out, *q.value());
            canon.push_back(std::move(out));
        }
        REQUIRE(reader.balanced());
        std::sort(canon.begin(), canon.end());
        return canon;
    };
    auto nq = parse_all(cfg.out_dir + "/nellrdf.promoted.ngraphs.nq", rdf::SyntaxFormat::NQuads);
    auto trig =
        parse_all(cfg.out_dir + "/nellrdf.promoted.ngraphs.trig", rdf::SyntaxFormat::Trig);
    CHECK(nq.size() > 60);
    CHECK(nq == trig);
}

TEST_CASE("gzip dumps decompress to the plain-run bytes") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 60);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.promoted;
    cfg.kind = BeliefKind::Promoted;
    cfg.out_dir = tmp.sub("plain");
    cfg.deterministic = true;
    RunStats plain = convert(cfg);

    cfg.out_dir = tmp.sub("gz");
    cfg.gzip = true;
    RunStats zipped = convert(cfg);

    for (const auto& [token, ms] : zipped.per_model) {
        CAPTURE(token);
        REQUIRE(ms.file.compare(ms.file.size() - 3, 3, ".gz") == 0);
        CHECK(read_lines(tmp.sub("gz") + "/" + ms.file) ==
              read_lines(tmp.sub("plain") + "/" + plain.per_model.at(token).file));
    }
    // Side files stay uncompressed even under --gzip.
    CHECK(fs::exists(tmp.sub("gz") + "/nellrdf.ontology.nt"));
    CHECK(fs::exists(tmp.sub("gz") + "/nellrdf.metadata.nt"));
    CHECK(fs::exists(tmp.sub("gz") + "/stats.json"));
}

TEST_CASE("I/O problems abort the run; malformed rows only skip") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 20);

    RunConfig cfg;
    cfg.ontology_path = tmp.sub("missing.tsv");
    cfg.beliefs_path = fx.promoted;
    cfg.out_dir = tmp.sub("out1");
    auto r = run_convert(cfg);
    REQUIRE(!r.ok());
    CHECK(r.error().code == Errc::IoError);

    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = tmp.sub("missing.tsv");
    cfg.out_dir = tmp.sub("out2");
    CHECK(!run_convert(cfg).ok());

    // A beliefs file with one wrong-arity row and one junk envelope: both
    // rows are skipped with diagnostics, everything else converts.
    const std::string edited = tmp.sub("edited.tsv");
    fs::copy_file(fx.promoted, edited);
    {
        std::ofstream app(edited, std::ios::app);
        app << "one\ttwo\tthree\n";
        app << "\n";  // blank lines are not rows
        std::string good = read_lines(fx.promoted)[1];
        app << good.substr(0, good.rfind('\t') + 1) << "[garbage\n";
    }
    cfg.beliefs_path = edited;
    cfg.out_dir = tmp.sub("out3");
    cfg.deterministic = true;
    CollectingDiagnostics diag;
    RunStats stats = convert(cfg, &diag);
    CHECK(stats.rows_read == 22);
    CHECK(stats.rows_skipped == 2);
    CHECK(stats.beliefs_converted == 20);
    CHECK(diag.count(kMalformedRow) == 2);
    bool line_attributed = false;
    for (const auto& d : diag.items())
        if (d.kind == kMalformedRow && d.line == 22) line_attributed = true;
    CHECK(line_attributed);
}

TEST_CASE("dataset metadata describes the run and each distribution") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 30);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.promoted;
    cfg.kind = BeliefKind::Promoted;
    cfg.out_dir = tmp.sub("out");
    cfg.deterministic = true;
    RunStats stats = convert(cfg);

    auto triples = emit_dataset_metadata(stats, cfg);
    const std::string ds = "http://nell2rdf.example/dataset/promoted";
    std::map<std::string, std::string> media;  // distribution IRI -> media type
    std::uint64_t declared_total = 0;
    std::size_t distributions = 0;
    for (const rdf::Triple& t : triples) {
        if (t.predicate.value == "http://www.w3.org/ns/dcat#distribution") {
            CHECK(t.subject.value == ds);
            ++distributions;
        }
        if (t.predicate.value == "http://www.w3.org/ns/dcat#mediaType")
            media[t.subject.value] = t.object.value;
        if (t.subject.value == ds && t.predicate.value == "http://rdfs.org/ns/void#triples")
            declared_total = std::stoull(t.object.value);
    }
    CHECK(distributions == 5);
    CHECK(media.at(ds + "/distribution/ngraphs") == "application/n-quads");
    CHECK(media.at(ds + "/distribution/reification") == "application/n-triples");
    CHECK(declared_total == stats.triples_emitted + stats.quads_emitted +
                                stats.ontology_triples + stats.prov_ontology_triples);

    // Media type detection sees through the .gz suffix.
    cfg.out_dir = tmp.sub("gz");
    cfg.gzip = true;
    RunStats zstats = convert(cfg);
    auto ztriples = emit_dataset_metadata(zstats, cfg);
    bool found = false;
    for (const rdf::Triple& t : ztriples)
        if (t.subject.value == ds + "/distribution/singleton" &&
            t.predicate.value == "http://www.w3.org/ns/dcat#mediaType") {
            CHECK(t.object.value == "application/n-triples");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("verify: all five dumps of one corpus are equivalent") {
    TempDir tmp;
    auto fx = gen(tmp.sub("fx"), 80);

    RunConfig cfg;
    cfg.ontology_path = fx.ontology;
    cfg.beliefs_path = fx.promoted;
    cfg.kind = BeliefKind::Promoted;
    cfg.out_dir = tmp.sub("out");
    cfg.deterministic = true;
    cfg.trig = true;
    RunStats stats = convert(cfg);

    std::vector<VerifyInput> inputs;
    for (ModelId m : reify::all_models())
        inputs.push_back({m, cfg.out_dir + "/" + stats.per_model.at(reify::model_token(m)).file});
    // The TriG rendering must agree with its own N-Quads dump too.
    inputs.push_back({ModelId::NamedGraphs, cfg.out_dir + "/nellrdf.promoted.ngraphs.trig"});

    auto report = verify_cross_model(inputs);
    REQUIRE(report.ok());
    CHECK(report.value().equivalent);
    REQUIRE(report.value().summaries.size() == 6);
    for (const VerifySummary& s : report.value().summaries) {
        CAPTURE(s.path);
        CHECK(s.statements == 80);
        CHECK(s.metadata == report.value().summaries[0].metadata);
    }
    CHECK(format_report(report.value()).find("PASS") != std::string::npos);
}

TEST_CASE("verify: a missing belief is pinpointed; broken input is an error") {
    TempDir tmp;
    auto big = gen(tmp.sub("big"), 40, 11);
    auto small = gen(tmp.sub("small"), 39, 11);  // same seed: strict prefix

    auto convert_one = [&](const FixturePaths& fx, ModelId m, const char* dir) {
        RunConfig cfg;
        cfg.ontology_path = fx.ontology;
        cfg.beliefs_path = fx.promoted;
        cfg.kind = BeliefKind::Promoted;
        cfg.models = {m};
        cfg.out_dir = tmp.sub(dir);
        cfg.deterministic = true;
        RunStats stats = convert(cfg);
        return cfg.out_dir + "/" + stats.per_model.at(reify::model_token(m)).file;
    };
    const std::string full = convert_one(big, ModelId::RdfReification, "full");
    const std::string partial = convert_one(small, ModelId::NAry, "partial");

    auto report = verify_cross_model({{ModelId::RdfReification, full}, {ModelId::NAry, partial}});
    REQUIRE(report.ok());
    CHECK(!report.value().equivalent);
    CHECK(report.value().divergence.find("only in reification") != std::string::npos);
    CHECK(report.value().summaries[0].statements == 40);
    CHECK(report.value().summaries[1].statements == 39);
    CHECK(format_report(report.value()).find("FAIL") != std::string::npos);

    CHECK(!verify_cross_model({}).ok());
    CHECK(!verify_cross_model({{ModelId::NAry, tmp.sub("absent.nt")}}).ok());

    const std::string junk = tmp.sub("junk.nt");
    std::ofstream(junk) << "not a triple\n";
    auto bad = verify_cross_model({{ModelId::RdfReification, junk}});
    REQUIRE(!bad.ok());
    CHECK(bad.error().message.find("junk.nt:1") != std::string::npos);
}
