#include "nell2rdf/prov/component.hpp"

namespace nell2rdf::prov {

const std::array<ComponentId, kComponentCount>& all_components() {
    static const std::array<ComponentId, kComponentCount> ids = {
        ComponentId::AliasMatcher, ComponentId::CMC,
        ComponentId::CPL,          ComponentId::KbManipulation,
        ComponentId::LatLong,      ComponentId::LE,
        ComponentId::MBL,          ComponentId::OE,
        ComponentId::OntologyModifier, ComponentId::PRA,
        ComponentId::RL,           ComponentId::SEAL,
        ComponentId::Semparse,     ComponentId::SpreadsheetEdits,
    };
    return ids;
}

std::string_view component_name(ComponentId id) {
    switch (id) {
        case ComponentId::AliasMatcher: return "AliasMatcher";
        case ComponentId::CMC: return "CMC";
        case ComponentId::CPL: return "CPL";
        case ComponentId::KbManipulation: return "KbManipulation";
        case ComponentId::LatLong: return "LatLong";
        case ComponentId::LE: return "LE";
        case ComponentId::MBL: return "MBL";
        case ComponentId::OE: return "OE";
        case ComponentId::OntologyModifier: return "OntologyModifier";
        case ComponentId::PRA: return "PRA";
        case ComponentId::RL: return "RL";
        case ComponentId::SEAL: return "SEAL";
        case ComponentId::Semparse: return "Semparse";
        case ComponentId::SpreadsheetEdits: return "SpreadsheetEdits";
    }
    return "";
}

std::optional<ComponentId> normalize_component(std::string_view name) {
    for (ComponentId id : all_components())
        if (name == component_name(id)) return id;
    // Alternate spellings seen in historical dumps.
    if (name == "CPL1" || name == "CPL2") return ComponentId::CPL;
    if (name == "CSEAL") return ComponentId::SEAL;
    if (name == "CML") return ComponentId::CMC;
    if (name == "ErrorBasedIntegrator" || name == "Knowledge Integrator" ||
        name == "EntityResolverCleanup")
        return ComponentId::MBL;
    return std::nullopt;
}

}  // namespace nell2rdf::prov
