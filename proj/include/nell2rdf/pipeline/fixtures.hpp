// Deterministic fixture-corpus generator: a small ontology exercising all
// sixteen predicate rules and belief dumps exercising all fourteen
// components, so desk-scale tests never need a real NELL dump.
#pragma once

#include <cstdint>
#include <string>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf::pipeline {

struct FixtureConfig {
    std::uint64_t beliefs = 1000;
    std::uint64_t seed = 1;
    std::string out_dir;
};

struct FixturePaths {
    std::string ontology;    // fixture.ontology.tsv
    std::string promoted;    // fixture.promoted.tsv
    std::string candidates;  // fixture.candidates.tsv
};

/// Writes the three fixture files. Same config, same bytes: the generator
/// draws nothing from the environment and uses no library distributions
/// (their output is implementation-defined).
Result<FixturePaths> generate_fixtures(const FixtureConfig& cfg);

}  // namespace nell2rdf::pipeline
