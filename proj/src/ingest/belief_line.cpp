#include "nell2rdf/ingest/belief_line.hpp"

#include <cstdlib>

#include "nell2rdf/prov/source_grammar.hpp"
#include "nell2rdf/rdf/canonical.hpp"

namespace nell2rdf::ingest {

const char* belief_kind_name(BeliefKind k) {
    return k == BeliefKind::Promoted ? "promoted" : "candidate";
}

std::vector<std::string> split_plain_list(const std::string& field, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= field.size()) {
        std::size_t end = field.find(sep, start);
        if (end == std::string::npos) end = field.size();
        if (end > start) out.emplace_back(field.substr(start, end - start));
        if (end == field.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> split_label_list(const std::string& field, char sep) {
    std::vector<std::string> out;
    if (field.empty()) return out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < field.size(); ++i) {
        char c = field[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < field.size() && field[i + 1] == '"') {
                    cur += '"';  // doubled quote
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string join_label_list(const std::vector<std::string>& labels, char sep) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += sep;
        const std::string& l = labels[i];
        if (l.find(sep) != std::string::npos || (!l.empty() && l.front() == '"')) {
            out += '"';
            for (char c : l) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
        } else {
            out += l;
        }
    }
    return out;
}

bool is_header_line(const std::string& line, const Dialect& dialect) {
    return line.rfind(dialect.header_prefix, 0) == 0;
}

namespace {

Result<std::uint64_t> parse_iteration(const std::string& s) {
    auto canon = rdf::canonical_integer(s);
    if (!canon.ok() || (!canon.value().empty() && canon.value()[0] == '-'))
        return Error{Errc::NonIntegerIteration, "iteration is not a non-negative integer: '" + s + "'"};
    return static_cast<std::uint64_t>(std::strtoull(canon.value().c_str(), nullptr, 10));
}

Result<std::string> parse_probability(const std::string& s) {
    auto canon = rdf::canonical_decimal_in(s, 0.0, 1.0);
    if (!canon.ok()) {
        Error e = canon.error();
        e.code = Errc::ProbabilityOutOfRange;
        return e;
    }
    return canon;
}

}  // namespace

Result<NellBelief> parse_belief_line(const std::string& line, BeliefKind kind,
                                     const Dialect& dialect, DiagnosticSink* diag,
                                     std::uint64_t line_number) {
    std::vector<std::string> fields;
    fields.reserve(13);
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (fields.size() != 13)
        return Error{Errc::WrongFieldCount,
                     "expected 13 tab-separated fields, got " + std::to_string(fields.size())};

    NellBelief b;
    b.kind = kind;
    b.entity = std::move(fields[0]);
    b.relation = std::move(fields[1]);
    b.value = std::move(fields[2]);
    b.iterations_raw = fields[3];
    b.probability_raw = fields[4];
    b.source_summary = std::move(fields[5]);
    b.entity_labels = split_label_list(fields[6], dialect.label_sep);
    b.value_labels = split_label_list(fields[7], dialect.label_sep);
    if (!fields[8].empty()) b.entity_best_label = std::move(fields[8]);
    if (!fields[9].empty()) b.value_best_label = std::move(fields[9]);
    b.entity_categories = split_plain_list(fields[10], dialect.category_sep);
    b.value_categories = split_plain_list(fields[11], dialect.category_sep);
    b.candidate_source = std::move(fields[12]);

    if (kind == BeliefKind::Promoted) {
        auto iter = parse_iteration(b.iterations_raw);
        if (!iter.ok()) return iter.error();
        b.promotion_iteration = iter.value();
        auto prob = parse_probability(b.probability_raw);
        if (!prob.ok()) return prob.error();
        b.promotion_probability = prob.take();
        // Promotion requires a confidence of at least 0.9; lower scores are
        // kept but flagged.
        if (std::strtod(b.promotion_probability.c_str(), nullptr) < 0.9 && diag) {
            diag->emit({kPromotionThresholdWarning, line_number,
                        "promoted belief '" + b.entity + " " + b.relation + " " + b.value +
                            "' has probability " + b.promotion_probability + " < 0.9"});
        }
    } else {
        for (const auto& part : split_plain_list(b.iterations_raw, dialect.number_list_sep)) {
            auto iter = parse_iteration(part);
            if (!iter.ok()) return iter.error();
            b.component_iterations.push_back(iter.value());
        }
        for (const auto& part : split_plain_list(b.probability_raw, dialect.number_list_sep)) {
            auto prob = parse_probability(part);
            if (!prob.ok()) return prob.error();
            b.component_probabilities.push_back(prob.take());
        }
        auto records = prov::count_source_records(b.candidate_source);
        if (!records.ok()) return records.error();
        if (b.component_iterations.size() != b.component_probabilities.size() ||
            b.component_iterations.size() != records.value()) {
            return Error{Errc::IterationProbabilityArityMismatch,
                         "fields 4/5/13 disagree: " + std::to_string(b.component_iterations.size()) +
                             " iterations, " + std::to_string(b.component_probabilities.size()) +
                             " probabilities, " + std::to_string(records.value()) + " records"};
        }
    }
    return b;
}

}  // namespace nell2rdf::ingest
