#include "nell2rdf/ingest/ontology_line.hpp"

#include <vector>

namespace nell2rdf::ingest {

const std::array<OntologyPredicate, kOntologyPredicateCount>& all_ontology_predicates() {
    static const std::array<OntologyPredicate, kOntologyPredicateCount> all = {
        OntologyPredicate::Antireflexive,     OntologyPredicate::Antisymmetric,
        OntologyPredicate::Description,       OntologyPredicate::Domain,
        OntologyPredicate::DomainWithinRange, OntologyPredicate::Generalizations,
        OntologyPredicate::HumanFormat,       OntologyPredicate::InstanceType,
        OntologyPredicate::Inverse,           OntologyPredicate::MemberOfSets,
        OntologyPredicate::MutexPredicates,   OntologyPredicate::NrOfValues,
        OntologyPredicate::Populate,          OntologyPredicate::Range,
        OntologyPredicate::RangeWithinDomain, OntologyPredicate::Visible,
    };
    return all;
}

const char* ontology_predicate_token(OntologyPredicate p) {
    switch (p) {
        case OntologyPredicate::Antireflexive: return "antireflexive";
        case OntologyPredicate::Antisymmetric: return "antisymmetric";
        case OntologyPredicate::Description: return "description";
        case OntologyPredicate::Domain: return "domain";
        case OntologyPredicate::DomainWithinRange: return "domainwithinrange";
        case OntologyPredicate::Generalizations: return "generalizations";
        case OntologyPredicate::HumanFormat: return "humanformat";
        case OntologyPredicate::InstanceType: return "instancetype";
        case OntologyPredicate::Inverse: return "inverse";
        case OntologyPredicate::MemberOfSets: return "memberofsets";
        case OntologyPredicate::MutexPredicates: return "mutexpredicates";
        case OntologyPredicate::NrOfValues: return "nrofvalues";
        case OntologyPredicate::Populate: return "populate";
        case OntologyPredicate::Range: return "range";
        case OntologyPredicate::RangeWithinDomain: return "rangewithindomain";
        case OntologyPredicate::Visible: return "visible";
    }
    return "?";
}

Result<OntologyAssertion> parse_ontology_line(const std::string& line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.emplace_back(line.data() + start, line.size() - start);
            break;
        }
        fields.emplace_back(line.data() + start, tab - start);
        start = tab + 1;
    }
    if (fields.size() != 3)
        return Error{Errc::WrongFieldCount,
                     "expected 3 tab-separated fields, got " + std::to_string(fields.size())};

    for (OntologyPredicate p : all_ontology_predicates()) {
        if (fields[1] == ontology_predicate_token(p)) {
            return OntologyAssertion{std::string(fields[0]), p, std::string(fields[2])};
        }
    }
    return Error{Errc::UnknownPredicate, "unknown ontology predicate: " + std::string(fields[1])};
}

}  // namespace nell2rdf::ingest
