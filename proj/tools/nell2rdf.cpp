// Command-line front end: convert, verify, gen-fixtures.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nell2rdf/pipeline/convert.hpp"
#include "nell2rdf/pipeline/fixtures.hpp"
#include "nell2rdf/pipeline/verify.hpp"
#include "nell2rdf/util/diagnostics.hpp"

namespace {

constexpr const char* kModelChoices[] = {"reification", "nary", "ngraphs",
                                         "singleton", "ndfluents", "all"};

int fail(const nell2rdf::Error& e) {
    std::cerr << "error: " << nell2rdf::errc_name(e.code) << ": " << e.message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NELL belief dumps to RDF, five statement-annotation models"};
    app.require_subcommand(1);

    // --- convert ---
    nell2rdf::pipeline::RunConfig cfg;
    std::string kind = "promoted";
    std::string model = "all";
    auto* convert = app.add_subcommand("convert", "Convert ontology + belief dump to RDF");
    convert->add_option("--ontology", cfg.ontology_path, "Ontology TSV (optionally .gz)")
        ->required();
    convert->add_option("--beliefs", cfg.beliefs_path, "Belief TSV (optionally .gz)")->required();
    convert->add_option("--kind", kind, "Belief dump kind")
        ->check(CLI::IsMember({"promoted", "candidate"}))
        ->capture_default_str();
    convert->add_option("--model", model, "Annotation model, or 'all'")
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kModelChoices),
                                                       std::end(kModelChoices))))
        ->capture_default_str();
    convert
        ->add_option("--base-iri", cfg.base_iri, "Base IRI for minted resources")
        ->envname("NELL2RDF_BASE_IRI")
        ->capture_default_str();
    convert->add_option("--out", cfg.out_dir, "Output directory")->required();
    convert->add_flag("--deterministic", cfg.deterministic,
                      "Byte-identical reruns (stats omit wall time)");
    convert->add_flag("--gzip", cfg.gzip, "Gzip the model dumps");
    convert->add_flag("--assert-candidates", cfg.assert_candidates,
                      "Assert candidate base triples under reification and n-ary");
    convert->add_flag("--trig", cfg.trig, "Also write the named-graphs dump as TriG");
    convert->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();

    // --- verify ---
    std::vector<std::string> specs;
    auto* verify = app.add_subcommand("verify", "Check that model dumps are equivalent");
    verify->add_option("--model", specs, "MODEL:FILE pair (repeatable)")
        ->required()
        ->expected(-1);

    // --- gen-fixtures ---
    nell2rdf::pipeline::FixtureConfig fixture;
    auto* gen = app.add_subcommand("gen-fixtures", "Write a deterministic fixture corpus");
    gen->add_option("--beliefs", fixture.beliefs, "Number of belief rows")->capture_default_str();
    gen->add_option("--seed", fixture.seed, "RNG seed")->capture_default_str();
    gen->add_option("--out", fixture.out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (convert->parsed()) {
        cfg.kind = kind == "candidate" ? nell2rdf::ingest::BeliefKind::Candidate
                                       : nell2rdf::ingest::BeliefKind::Promoted;
        if (model != "all") cfg.models = {*nell2rdf::reify::model_from_token(model)};
        nell2rdf::JsonLinesDiagnostics diag(std::cerr);
        auto stats = nell2rdf::pipeline::run_convert(cfg, &diag);
        if (!stats.ok()) return fail(stats.error());
        const auto& s = stats.value();
        std::cerr << "converted " << s.beliefs_converted << " beliefs, skipped "
                  << s.rows_skipped << " rows, " << s.triples_emitted << " triples + "
                  << s.quads_emitted << " quads -> " << cfg.out_dir << "\n";
        return 0;
    }

    if (verify->parsed()) {
        std::vector<nell2rdf::pipeline::VerifyInput> inputs;
        for (const std::string& spec : specs) {
            const std::size_t colon = spec.find(':');
            auto m = colon == std::string::npos
                         ? std::nullopt
                         : nell2rdf::reify::model_from_token(spec.substr(0, colon));
            if (!m) {
                std::cerr << "error: --model expects MODEL:FILE, got '" << spec << "'\n";
                return 2;
            }
            inputs.push_back({*m, spec.substr(colon + 1)});
        }
        auto report = nell2rdf::pipeline::verify_cross_model(inputs);
        if (!report.ok()) return fail(report.error());
        std::cout << nell2rdf::pipeline::format_report(report.value());
        return report.value().equivalent ? 0 : 1;
    }

    auto paths = nell2rdf::pipeline::generate_fixtures(fixture);
    if (!paths.ok()) return fail(paths.error());
    std::cerr << "wrote " << paths.value().ontology << ", " << paths.value().promoted << ", "
              << paths.value().candidates << "\n";
    return 0;
}
