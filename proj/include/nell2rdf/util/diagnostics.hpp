#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace nell2rdf {

// Diagnostic kinds referenced by tests. Row-level problems never abort a run;
// they are reported through one of these and the row (or record) is skipped.
inline constexpr const char* kPromotionThresholdWarning = "PromotionThresholdWarning";
inline constexpr const char* kUnknownComponent = "UnknownComponent";
inline constexpr const char* kMalformedRow = "MalformedRow";
inline constexpr const char* kUnhandledOntologyValue = "UnhandledOntologyValue";
inline constexpr const char* kDroppedLiteralAnnotation = "DroppedLiteralAnnotation";

struct Diagnostic {
    std::string kind;
    std::uint64_t line = 0;  // 1-based input line, 0 when not row-scoped
    std::string message;
};

class DiagnosticSink {
  public:
    virtual ~DiagnosticSink() = default;
    virtual void emit(Diagnostic d) = 0;
};

/// Buffers diagnostics; used by tests and by the worker pipeline (each batch
/// collects locally, the writer flushes in row order).
class CollectingDiagnostics final : public DiagnosticSink {
  public:
    void emit(Diagnostic d) override { items_.push_back(std::move(d)); }

    const std::vector<Diagnostic>& items() const { return items_; }
    std::vector<Diagnostic>& items() { return items_; }

    std::size_t count(const std::string& kind) const {
        std::size_t n = 0;
        for (const auto& d : items_)
            if (d.kind == kind) ++n;
        return n;
    }
    void clear() { items_.clear(); }

  private:
    std::vector<Diagnostic> items_;
};

/// Streams diagnostics as JSON lines ({"line":N,"kind":"...","message":"..."})
/// and keeps per-kind counters for the run stats.
class JsonLinesDiagnostics final : public DiagnosticSink {
  public:
    explicit JsonLinesDiagnostics(std::ostream& out) : out_(out) {}

    void emit(Diagnostic d) override {
        ++total_;
        ++by_kind_[d.kind];
        out_ << "{\"line\":" << d.line << ",\"kind\":\"" << json_escape(d.kind)
             << "\",\"message\":\"" << json_escape(d.message) << "\"}\n";
    }

    static std::string json_escape(const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (unsigned char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (c < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04X", c);
                        out += buf;
                    } else {
                        out += static_cast<char>(c);
                    }
            }
        }
        return out;
    }

    std::uint64_t total() const { return total_; }
    const std::map<std::string, std::uint64_t>& by_kind() const { return by_kind_; }

  private:
    std::ostream& out_;
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> by_kind_;
};

/// Counts only; used where the diagnostics text itself is not needed
/// (e.g. the large streaming runs).
class CountingDiagnostics final : public DiagnosticSink {
  public:
    void emit(Diagnostic d) override {
        ++total_;
        ++by_kind_[d.kind];
    }
    std::uint64_t total() const { return total_; }
    const std::map<std::string, std::uint64_t>& by_kind() const { return by_kind_; }

  private:
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> by_kind_;
};

}  // namespace nell2rdf
