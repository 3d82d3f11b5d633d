// Registry of the NELL subsystems that produce beliefs.  Field 13 of a
// belief row names the component that ran; historical dumps use a handful
// of alternate spellings which normalize_component maps onto the canonical
// identifier while preserving the original string for provenance.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace nell2rdf::prov {

enum class ComponentId {
    AliasMatcher,
    CMC,
    CPL,
    KbManipulation,
    LatLong,
    LE,
    MBL,
    OE,
    OntologyModifier,
    PRA,
    RL,
    SEAL,
    Semparse,
    SpreadsheetEdits,
};

inline constexpr std::size_t kComponentCount = 14;

const std::array<ComponentId, kComponentCount>& all_components();

// Canonical name as used in minted IRIs and class names, e.g. "AliasMatcher".
std::string_view component_name(ComponentId id);

// Maps a field-13 component name (canonical or alias) to its identifier.
// Returns nullopt for names not in the registry.
std::optional<ComponentId> normalize_component(std::string_view name);

}  // namespace nell2rdf::prov
