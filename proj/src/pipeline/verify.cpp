#include "nell2rdf/pipeline/verify.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "nell2rdf/rdf/ntriples.hpp"
#include "nell2rdf/rdf/parser.hpp"
#include "nell2rdf/util/gzline.hpp"

namespace nell2rdf::pipeline {

namespace {

rdf::SyntaxFormat format_of(std::string path) {
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0)
        path.resize(path.size() - 3);
    if (path.size() > 5 && path.compare(path.size() - 5, 5, ".trig") == 0)
        return rdf::SyntaxFormat::Trig;
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".nq") == 0)
        return rdf::SyntaxFormat::NQuads;
    return rdf::SyntaxFormat::NTriples;
}

/// The model-independent canonical form of one dump: sorted statement keys
/// and sorted metadata lines with every attachment IRI rewritten to a
/// urn:stmt: placeholder, so the five attachment flavours compare equal.
struct Canonical {
    std::vector<std::string> statements;
    std::vector<std::string> metadata;
};

Result<Canonical> canonicalize(const VerifyInput& input) {
    std::vector<rdf::Quad> quads;
    {
        LineReader in;
        auto opened = in.open(input.path);
        if (!opened.ok()) return opened.error();
        rdf::DocumentReader reader(format_of(input.path));
        std::string line;
        while (in.next(line)) {
            auto q = reader.read_line(line);
            if (!q.ok()) {
                Error e = q.error();
                e.message = input.path + ":" + std::to_string(in.lines_read()) + ": " + e.message;
                return e;
            }
            if (q.value()) quads.push_back(std::move(*q.value()));
        }
        if (!in.io_error().empty())
            return Error{Errc::IoError, input.path + ": " + in.io_error()};
        if (!reader.balanced())
            return Error{Errc::MalformedEncoding, input.path + ": unterminated graph block"};
    }

    auto dereified = reify::dereify(quads, input.model);
    if (!dereified.ok()) {
        Error e = dereified.error();
        e.message = input.path + ": " + e.message;
        return e;
    }
    const reify::DereifyResult& r = dereified.value();

    Canonical c;
    std::map<std::string, std::string> placeholder;  // attachment IRI -> urn:stmt:hex
    c.statements.reserve(r.statements.size());
    for (const reify::DereifiedStatement& s : r.statements) {
        const std::string hex = reify::statement_hex(s.base);
        c.statements.push_back(rdf::statement_key(reify::as_triple(s.base)));
        placeholder.emplace(s.attachment.value, "urn:stmt:" + hex);
    }

    auto rewrite = [&](rdf::Term t) {
        if (t.is_iri()) {
            auto it = placeholder.find(t.value);
            if (it != placeholder.end()) return rdf::Term::iri(it->second);
        }
        return t;
    };
    c.metadata.reserve(r.metadata.size());
    for (const rdf::Quad& q : r.metadata) {
        rdf::Quad m;
        m.triple.subject = rewrite(q.triple.subject);
        m.triple.predicate = rewrite(q.triple.predicate);
        m.triple.object = rewrite(q.triple.object);
        if (q.graph) m.graph = rewrite(*q.graph);
        std::string line;
        rdf::append_quad_line(line, m);
        if (!line.empty() && line.back() == '\n') line.pop_back();
        c.metadata.push_back(std::move(line));
    }

    std::sort(c.statements.begin(), c.statements.end());
    std::sort(c.metadata.begin(), c.metadata.end());
    return c;
}

// First element of the sorted symmetric difference, attributed to its side.
std::string first_difference(const std::vector<std::string>& a, const std::string& label_a,
                             const std::vector<std::string>& b, const std::string& label_b,
                             const char* what) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            return std::string(what) + " only in " + label_a + ": " + a[i];
        } else {
            return std::string(what) + " only in " + label_b + ": " + b[j];
        }
    }
    if (i < a.size()) return std::string(what) + " only in " + label_a + ": " + a[i];
    if (j < b.size()) return std::string(what) + " only in " + label_b + ": " + b[j];
    return {};
}

}  // namespace

Result<VerifyReport> verify_cross_model(const std::vector<VerifyInput>& inputs) {
    if (inputs.empty()) return Error{Errc::MalformedEncoding, "no inputs to verify"};

    VerifyReport report;
    std::vector<Canonical> canon;
    canon.reserve(inputs.size());
    for (const VerifyInput& input : inputs) {
        auto c = canonicalize(input);
        if (!c.ok()) return c.error();
        VerifySummary s;
        s.model = input.model;
        s.path = input.path;
        s.statements = c.value().statements.size();
        s.metadata = c.value().metadata.size();
        report.summaries.push_back(std::move(s));
        canon.push_back(c.take());
    }

    report.equivalent = true;
    const std::string label0 = reify::model_token(inputs[0].model);
    for (std::size_t i = 1; i < canon.size(); ++i) {
        const std::string label = reify::model_token(inputs[i].model);
        if (canon[i].statements != canon[0].statements) {
            report.equivalent = false;
            report.divergence = first_difference(canon[0].statements, label0,
                                                 canon[i].statements, label, "statement");
            return report;
        }
        if (canon[i].metadata != canon[0].metadata) {
            report.equivalent = false;
            report.divergence =
                first_difference(canon[0].metadata, label0, canon[i].metadata, label, "metadata");
            return report;
        }
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::string out;
    for (const VerifySummary& s : report.summaries) {
        out += reify::model_token(s.model);
        out += ": ";
        out += std::to_string(s.statements);
        out += " statements, ";
        out += std::to_string(s.metadata);
        out += " metadata lines (";
        out += s.path;
        out += ")\n";
    }
    if (report.equivalent) {
        out += "PASS: all models dereify to the same canonical dataset\n";
    } else {
        out += "FAIL: " + report.divergence + "\n";
    }
    return out;
}

}  // namespace nell2rdf::pipeline
