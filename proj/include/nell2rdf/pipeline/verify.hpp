// Cross-model equivalence oracle: dereifies each dump, canonicalizes the
// recovered statements and metadata, and checks that every model describes
// the same dataset.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nell2rdf/reify/reify.hpp"
#include "nell2rdf/util/result.hpp"

namespace nell2rdf::pipeline {

struct VerifyInput {
    reify::ModelId model = reify::ModelId::RdfReification;
    std::string path;  // .nt/.nq/.trig, optionally .gz
};

struct VerifySummary {
    reify::ModelId model = reify::ModelId::RdfReification;
    std::string path;
    std::uint64_t statements = 0;
    std::uint64_t metadata = 0;
};

struct VerifyReport {
    bool equivalent = false;
    std::vector<VerifySummary> summaries;
    // First canonical line present in one model but not another; empty when
    // equivalent.
    std::string divergence;
};

/// Input files must parse and dereify cleanly; those failures are returned
/// as errors with file/line context. Divergent-but-wellformed dumps yield a
/// report with equivalent=false.
Result<VerifyReport> verify_cross_model(const std::vector<VerifyInput>& inputs);

/// Human-readable rendering: one line per model plus the verdict.
std::string format_report(const VerifyReport& report);

}  // namespace nell2rdf::pipeline
