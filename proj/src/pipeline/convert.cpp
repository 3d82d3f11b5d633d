#include "nell2rdf/pipeline/convert.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include <json.hpp>

#include "nell2rdf/prov/emit.hpp"
#include "nell2rdf/prov/source_grammar.hpp"
#include "nell2rdf/rdf/ntriples.hpp"
#include "nell2rdf/rdf/vocab.hpp"
#include "nell2rdf/translate/belief_rdf.hpp"
#include "nell2rdf/translate/ontology_rules.hpp"
#include "nell2rdf/util/gzline.hpp"
#include "nell2rdf/util/sink.hpp"

namespace nell2rdf::pipeline {

namespace v = rdf::vocab;
using ingest::BeliefKind;
using reify::ModelId;

namespace {

// The dump names use the plural for candidates ("nellrdf.candidates...").
const char* dump_kind_token(BeliefKind k) {
    return k == BeliefKind::Promoted ? "promoted" : "candidates";
}

std::string media_type_of(std::string file) {
    if (file.size() > 3 && file.compare(file.size() - 3, 3, ".gz") == 0)
        file.resize(file.size() - 3);
    if (file.size() > 3 && file.compare(file.size() - 3, 3, ".nq") == 0)
        return "application/n-quads";
    if (file.size() > 5 && file.compare(file.size() - 5, 5, ".trig") == 0)
        return "application/trig";
    return "application/n-triples";
}

Error io_error(const std::string& what) { return Error{Errc::IoError, what}; }

/// Counts every diagnostic into the run stats before forwarding it.
class ForwardingDiagnostics final : public DiagnosticSink {
  public:
    ForwardingDiagnostics(RunStats& stats, DiagnosticSink* next) : stats_(stats), next_(next) {}
    void emit(Diagnostic d) override {
        ++stats_.diagnostics;
        if (next_) next_->emit(std::move(d));
    }

  private:
    RunStats& stats_;
    DiagnosticSink* next_;
};

struct PerModelDelta {
    std::uint64_t statements = 0;
    std::uint64_t asserted = 0;
    std::uint64_t metadata = 0;
    std::uint64_t auxiliary = 0;
};

struct Delta {
    std::uint64_t rows = 0;
    std::uint64_t skipped = 0;
    std::uint64_t converted = 0;
    std::uint64_t triples = 0;
    std::uint64_t quads = 0;
    std::array<std::uint64_t, prov::kComponentCount> exec{};
    std::vector<PerModelDelta> model;
};

struct Batch {
    std::uint64_t seq = 0;
    std::vector<std::pair<std::string, std::uint64_t>> rows;  // line, line number
};

struct BatchResult {
    std::vector<std::string> chunks;  // serialized lines, aligned with selected models
    std::string trig;
    Delta delta;
    std::vector<Diagnostic> diags;
};

struct Context {
    const RunConfig* cfg = nullptr;
    translate::Namespaces ns;
    ingest::Dialect dialect;
    translate::OntologyIndex index;
    std::vector<ModelId> models;
    bool want_trig = false;
};

void process_row(const Context& ctx, const std::string& line, std::uint64_t line_no,
                 BatchResult& out) {
    ++out.delta.rows;
    CollectingDiagnostics local;
    auto flush_diags = [&] {
        for (Diagnostic& d : local.items()) out.diags.push_back(std::move(d));
    };
    auto skip = [&](const Error& e) {
        local.emit({kMalformedRow, line_no, std::string(errc_name(e.code)) + ": " + e.message});
        ++out.delta.skipped;
        flush_diags();
    };

    auto parsed = ingest::parse_belief_line(line, ctx.cfg->kind, ctx.dialect, &local, line_no);
    if (!parsed.ok()) return skip(parsed.error());
    const ingest::NellBelief& b = parsed.value();

    auto translated =
        translate::translate_belief(b, ctx.index, ctx.ns, ctx.dialect, &local, line_no);
    if (!translated.ok()) return skip(translated.error());
    const translate::TranslatedBelief& tb = translated.value();

    prov::ParseSourceOptions opts;
    opts.generalization_belief = tb.generalization;
    opts.diagnostics = &local;
    opts.line_number = line_no;
    const bool candidate = ctx.cfg->kind == BeliefKind::Candidate;
    static const std::vector<std::uint64_t> kNoIterations;
    static const std::vector<std::string> kNoProbabilities;
    auto executions = prov::parse_candidate_source(
        b.candidate_source, candidate ? b.component_iterations : kNoIterations,
        candidate ? b.component_probabilities : kNoProbabilities, opts);
    if (!executions.ok()) return skip(executions.error());

    ++out.delta.converted;
    const std::string belief_hex = reify::statement_hex(tb.base);
    std::optional<std::uint64_t> promotion_iteration;
    std::optional<std::string> promotion_probability;
    if (ctx.cfg->kind == BeliefKind::Promoted) {
        promotion_iteration = b.promotion_iteration;
        promotion_probability = b.promotion_probability;
    }

    for (std::size_t mi = 0; mi < ctx.models.size(); ++mi) {
        const ModelId m = ctx.models[mi];
        const reify::ReifiedStatement rs =
            reify::reify(tb.base, m, ctx.cfg->kind, ctx.ns, ctx.cfg->assert_candidates);
        std::string& chunk = out.chunks[mi];
        PerModelDelta& pm = out.delta.model[mi];

        const bool asserted =
            (ctx.cfg->kind == BeliefKind::Promoted || ctx.cfg->assert_candidates) &&
            (m == ModelId::RdfReification || m == ModelId::NAry);
        pm.statements += rs.statement_triples.size() - (asserted ? 1 : 0);
        pm.asserted += asserted ? 1 : 0;
        for (const rdf::Quad& q : rs.statement_triples) {
            rdf::append_quad_line(chunk, q);
            if (q.graph)
                ++out.delta.quads;
            else
                ++out.delta.triples;
        }

        std::vector<rdf::Triple> metadata = prov::emit_belief_node(
            rs.attachment, ctx.cfg->kind, promotion_iteration, promotion_probability, ctx.ns);
        for (std::size_t i = 0; i < executions.value().size(); ++i) {
            std::vector<rdf::Triple> more =
                prov::emit_execution(rs.attachment, executions.value()[i], ctx.ns, belief_hex, i);
            metadata.insert(metadata.end(), std::make_move_iterator(more.begin()),
                            std::make_move_iterator(more.end()));
        }
        pm.metadata += metadata.size();
        pm.auxiliary += tb.auxiliary.size();
        out.delta.triples += metadata.size() + tb.auxiliary.size();
        for (const rdf::Triple& t : metadata) rdf::append_triple_line(chunk, t);
        for (const rdf::Triple& t : tb.auxiliary) rdf::append_triple_line(chunk, t);

        if (ctx.want_trig && m == ModelId::NamedGraphs) {
            rdf::TrigWriter w;
            for (const rdf::Quad& q : rs.statement_triples) w.append(out.trig, q);
            for (const rdf::Triple& t : metadata) w.append(out.trig, rdf::Quad{t});
            for (const rdf::Triple& t : tb.auxiliary) w.append(out.trig, rdf::Quad{t});
            w.finish(out.trig);
        }
    }

    // Component counters are per belief row, not per model.
    for (const prov::ComponentExecution& e : executions.value())
        ++out.delta.exec[static_cast<std::size_t>(e.component)];
    flush_diags();
}

BatchResult run_batch(const Context& ctx, const Batch& b) {
    BatchResult r;
    r.chunks.resize(ctx.models.size());
    r.delta.model.resize(ctx.models.size());
    for (const auto& [line, line_no] : b.rows) process_row(ctx, line, line_no, r);
    return r;
}

}  // namespace

std::string dump_file_name(BeliefKind kind, ModelId m, bool gzip) {
    std::string name = "nellrdf.";
    name += dump_kind_token(kind);
    name += '.';
    name += reify::model_token(m);
    // The named-graphs encoding carries a graph term, so its dump needs the
    // quad syntax even for promoted runs.
    const bool quads = kind == BeliefKind::Candidate || m == ModelId::NamedGraphs;
    name += quads ? ".nq" : ".nt";
    if (gzip) name += ".gz";
    return name;
}

std::vector<rdf::Triple> emit_dataset_metadata(const RunStats& stats, const RunConfig& cfg) {
    translate::Namespaces ns = translate::Namespaces::from_base(
        cfg.base_iri.empty() ? translate::kDefaultBaseIri : cfg.base_iri);
    auto dct = [](const char* local) { return rdf::Term::iri(std::string(v::kDct) + local); };
    auto dcat = [](const char* local) { return rdf::Term::iri(std::string(v::kDcat) + local); };
    auto voc = [](const char* local) { return rdf::Term::iri(std::string(v::kVoid) + local); };
    auto count = [](std::uint64_t n) {
        return rdf::Term::literal(std::to_string(n), v::xsd("integer"));
    };

    std::vector<rdf::Triple> out;
    const rdf::Term ds = rdf::Term::iri(ns.base + "dataset/" + dump_kind_token(cfg.kind));
    out.push_back({ds, v::rdf_type(), voc("Dataset")});
    out.push_back({ds, v::rdf_type(), dcat("Dataset")});
    out.push_back({ds, dct("title"),
                   rdf::Term::lang_literal(std::string("NELL ") + dump_kind_token(cfg.kind) +
                                               " beliefs as RDF",
                                           "en")});
    const std::uint64_t total = stats.triples_emitted + stats.quads_emitted +
                                stats.ontology_triples + stats.prov_ontology_triples;
    out.push_back({ds, voc("triples"), count(total)});
    out.push_back({ds, voc("entities"), count(stats.beliefs_converted)});

    for (const auto& [token, ms] : stats.per_model) {
        const rdf::Term dist = rdf::Term::iri(ds.value + "/distribution/" + token);
        out.push_back({ds, dcat("distribution"), dist});
        out.push_back({dist, v::rdf_type(), dcat("Distribution")});
        out.push_back({dist, dct("identifier"), rdf::Term::literal(token)});
        out.push_back({dist, dct("title"), rdf::Term::literal(ms.file)});
        out.push_back({dist, dcat("mediaType"), rdf::Term::literal(media_type_of(ms.file))});
        out.push_back({dist, voc("triples"), count(ms.total)});
    }
    return out;
}

std::string stats_to_json(const RunStats& stats, bool deterministic) {
    nlohmann::ordered_json j;
    j["rows_read"] = stats.rows_read;
    j["rows_skipped"] = stats.rows_skipped;
    j["beliefs_converted"] = stats.beliefs_converted;
    j["triples_emitted"] = stats.triples_emitted;
    j["quads_emitted"] = stats.quads_emitted;
    j["ontology_triples"] = stats.ontology_triples;
    j["prov_ontology_triples"] = stats.prov_ontology_triples;
    nlohmann::ordered_json by_component;
    for (prov::ComponentId id : prov::all_components())
        by_component[std::string(prov::component_name(id))] =
            stats.executions_by_component[static_cast<std::size_t>(id)];
    j["executions_by_component"] = std::move(by_component);
    j["diagnostics"] = stats.diagnostics;
    nlohmann::ordered_json models;
    for (const auto& [token, ms] : stats.per_model) {
        nlohmann::ordered_json m;
        m["file"] = ms.file;
        m["statements"] = ms.statements;
        m["asserted"] = ms.asserted;
        m["metadata"] = ms.metadata;
        m["auxiliary"] = ms.auxiliary;
        m["total"] = ms.total;
        models[token] = std::move(m);
    }
    j["models"] = std::move(models);
    if (!deterministic) j["wall_ms"] = stats.wall_ms;
    return j.dump(2) + "\n";
}

Result<RunStats> run_convert(const RunConfig& cfg, DiagnosticSink* diag) {
    const auto started = std::chrono::steady_clock::now();
    RunStats stats;
    ForwardingDiagnostics fdiag(stats, diag);

    Context ctx;
    ctx.cfg = &cfg;
    ctx.ns = translate::Namespaces::from_base(cfg.base_iri.empty() ? translate::kDefaultBaseIri
                                                                   : cfg.base_iri);
    ctx.models = cfg.models;
    if (ctx.models.empty())
        ctx.models.assign(reify::all_models().begin(), reify::all_models().end());
    for (ModelId m : ctx.models)
        if (cfg.trig && m == ModelId::NamedGraphs) ctx.want_trig = true;

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) return io_error("cannot create output directory " + cfg.out_dir + ": " + ec.message());
    const std::string out_prefix = cfg.out_dir + "/";

    // Ontology pass 1: parse everything and build the index (memberofsets and
    // range facts must be complete before any row is translated).
    std::vector<ingest::OntologyAssertion> assertions;
    std::vector<std::uint64_t> assertion_lines;
    {
        LineReader in;
        auto opened = in.open(cfg.ontology_path);
        if (!opened.ok()) return opened.error();
        std::string line;
        while (in.next(line)) {
            if (line.empty() || ingest::is_header_line(line, ctx.dialect)) continue;
            auto a = ingest::parse_ontology_line(line);
            if (!a.ok()) {
                fdiag.emit({kMalformedRow, in.lines_read(),
                            std::string(errc_name(a.error().code)) + ": " + a.error().message});
                continue;
            }
            ctx.index.observe(a.value(), ctx.dialect);
            assertion_lines.push_back(in.lines_read());
            assertions.push_back(a.take());
        }
        if (!in.io_error().empty())
            return io_error("reading " + cfg.ontology_path + ": " + in.io_error());
    }

    // Ontology pass 2: translate against the complete index.
    {
        auto sink = open_sink(out_prefix + "nellrdf.ontology.nt", false);
        if (!sink.ok()) return sink.error();
        std::string buf;
        for (std::size_t i = 0; i < assertions.size(); ++i) {
            std::vector<rdf::Triple> triples = translate::translate_ontology_assertion(
                assertions[i], ctx.index, ctx.ns, ctx.dialect, &fdiag, assertion_lines[i]);
            stats.ontology_triples += triples.size();
            for (const rdf::Triple& t : triples) rdf::append_triple_line(buf, t);
            if (buf.size() >= 1 << 16) {
                sink.value()->write(buf);
                buf.clear();
            }
        }
        sink.value()->write(buf);
        auto closed = sink.value()->close();
        if (!closed.ok()) return closed.error();
    }

    {
        auto sink = open_sink(out_prefix + "nellrdf.prov-ontology.nt", false);
        if (!sink.ok()) return sink.error();
        std::string buf;
        for (const rdf::Triple& t : prov::emit_ontology(ctx.ns)) {
            ++stats.prov_ontology_triples;
            rdf::append_triple_line(buf, t);
        }
        sink.value()->write(buf);
        auto closed = sink.value()->close();
        if (!closed.ok()) return closed.error();
    }

    // One dump per selected model, plus the optional TriG rendering of the
    // named-graphs dump.
    std::vector<std::unique_ptr<OutputSink>> sinks;
    std::vector<ModelStats*> model_stats;
    for (ModelId m : ctx.models) {
        const std::string file = dump_file_name(cfg.kind, m, cfg.gzip);
        auto sink = open_sink(out_prefix + file, cfg.gzip);
        if (!sink.ok()) return sink.error();
        sinks.push_back(sink.take());
        ModelStats& ms = stats.per_model[reify::model_token(m)];
        ms.file = file;
        model_stats.push_back(&ms);
    }
    std::unique_ptr<OutputSink> trig_sink;
    if (ctx.want_trig) {
        std::string file = std::string("nellrdf.") + dump_kind_token(cfg.kind) + ".ngraphs.trig";
        if (cfg.gzip) file += ".gz";
        auto sink = open_sink(out_prefix + file, cfg.gzip);
        if (!sink.ok()) return sink.error();
        trig_sink = sink.take();
    }

    auto apply = [&](BatchResult& r) {
        for (std::size_t i = 0; i < sinks.size(); ++i)
            if (!r.chunks[i].empty()) sinks[i]->write(r.chunks[i]);
        if (trig_sink && !r.trig.empty()) trig_sink->write(r.trig);
        stats.rows_read += r.delta.rows;
        stats.rows_skipped += r.delta.skipped;
        stats.beliefs_converted += r.delta.converted;
        stats.triples_emitted += r.delta.triples;
        stats.quads_emitted += r.delta.quads;
        for (std::size_t i = 0; i < prov::kComponentCount; ++i)
            stats.executions_by_component[i] += r.delta.exec[i];
        for (std::size_t i = 0; i < model_stats.size(); ++i) {
            model_stats[i]->statements += r.delta.model[i].statements;
            model_stats[i]->asserted += r.delta.model[i].asserted;
            model_stats[i]->metadata += r.delta.model[i].metadata;
            model_stats[i]->auxiliary += r.delta.model[i].auxiliary;
        }
        for (Diagnostic& d : r.diags) fdiag.emit(std::move(d));
    };

    LineReader in;
    auto opened = in.open(cfg.beliefs_path);
    if (!opened.ok()) return opened.error();

    const unsigned workers = cfg.workers > 1 ? cfg.workers : 0;
    constexpr std::size_t kBatchRows = 512;

    if (workers == 0) {
        Batch batch;
        std::string line;
        while (in.next(line)) {
            if (line.empty() || ingest::is_header_line(line, ctx.dialect)) continue;
            batch.rows.emplace_back(line, in.lines_read());
            if (batch.rows.size() >= kBatchRows) {
                BatchResult r = run_batch(ctx, batch);
                apply(r);
                batch.rows.clear();
            }
        }
        if (!batch.rows.empty()) {
            BatchResult r = run_batch(ctx, batch);
            apply(r);
        }
    } else {
        // Bounded fan-out: the main thread reads, submits batches and writes
        // finished ones back in sequence order; workers only transform.
        std::mutex mu;
        std::condition_variable cv_work;   // workers: a batch is available
        std::condition_variable cv_state;  // main: queue shrank or a batch finished
        std::deque<Batch> pending;
        std::map<std::uint64_t, BatchResult> finished;
        bool eof = false;
        std::uint64_t next_apply = 0;
        const std::size_t max_inflight = static_cast<std::size_t>(workers) * 3;

        auto worker_fn = [&]() {
            for (;;) {
                Batch b;
                {
                    std::unique_lock<std::mutex> lk(mu);
                    cv_work.wait(lk, [&] { return eof || !pending.empty(); });
                    if (pending.empty()) return;
                    b = std::move(pending.front());
                    pending.pop_front();
                    cv_state.notify_all();
                }
                BatchResult r = run_batch(ctx, b);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    finished.emplace(b.seq, std::move(r));
                }
                cv_state.notify_all();
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker_fn);

        // Writes every finished batch that is next in sequence; expects `lk`
        // to hold `mu` and returns with it re-acquired.
        auto drain_ready = [&](std::unique_lock<std::mutex>& lk) {
            for (;;) {
                auto it = finished.find(next_apply);
                if (it == finished.end()) return;
                BatchResult r = std::move(it->second);
                finished.erase(it);
                ++next_apply;
                lk.unlock();
                apply(r);
                lk.lock();
            }
        };

        std::uint64_t seq = 0;
        auto submit = [&](Batch&& b) {
            b.seq = seq++;
            std::unique_lock<std::mutex> lk(mu);
            for (;;) {
                drain_ready(lk);
                if (pending.size() < max_inflight && finished.size() < max_inflight) break;
                cv_state.wait(lk);
            }
            pending.push_back(std::move(b));
            cv_work.notify_one();
        };

        Batch batch;
        std::string line;
        while (in.next(line)) {
            if (line.empty() || ingest::is_header_line(line, ctx.dialect)) continue;
            batch.rows.emplace_back(line, in.lines_read());
            if (batch.rows.size() >= kBatchRows) {
                submit(std::move(batch));
                batch = Batch{};
            }
        }
        if (!batch.rows.empty()) submit(std::move(batch));

        {
            std::lock_guard<std::mutex> lk(mu);
            eof = true;
        }
        cv_work.notify_all();
        {
            std::unique_lock<std::mutex> lk(mu);
            while (next_apply < seq) {
                drain_ready(lk);
                if (next_apply < seq) cv_state.wait(lk);
            }
        }
        for (std::thread& t : threads) t.join();
    }
    if (!in.io_error().empty()) return io_error("reading " + cfg.beliefs_path + ": " + in.io_error());

    for (auto& sink : sinks) {
        auto closed = sink->close();
        if (!closed.ok()) return closed.error();
    }
    if (trig_sink) {
        auto closed = trig_sink->close();
        if (!closed.ok()) return closed.error();
    }
    for (auto& [token, ms] : stats.per_model)
        ms.total = ms.statements + ms.asserted + ms.metadata + ms.auxiliary;

    {
        auto sink = open_sink(out_prefix + "nellrdf.metadata.nt", false);
        if (!sink.ok()) return sink.error();
        std::string buf;
        for (const rdf::Triple& t : emit_dataset_metadata(stats, cfg))
            rdf::append_triple_line(buf, t);
        sink.value()->write(buf);
        auto closed = sink.value()->close();
        if (!closed.ok()) return closed.error();
    }

    stats.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                   std::chrono::steady_clock::now() - started)
                                                   .count());
    {
        auto sink = open_sink(out_prefix + "stats.json", false);
        if (!sink.ok()) return sink.error();
        sink.value()->write(stats_to_json(stats, cfg.deterministic));
        auto closed = sink.value()->close();
        if (!closed.ok()) return closed.error();
    }
    return stats;
}

}  // namespace nell2rdf::pipeline
