#pragma once

#include <string>
#include <vector>

namespace nell2rdf::ingest {

/// Intra-field syntax of the belief dumps. The column layout (13 tab-separated
/// fields) is fixed; how lists are packed *inside* a field is a dialect
/// concern, isolated here so a different dump dialect can be swapped in
/// without touching the parsers' callers. The defaults describe the fixture
/// dialect shipped with the repo (see docs/dialect.md).
struct Dialect {
    /// Separator for the category-token lists in fields 11 and 12.
    char category_sep = ' ';
    /// Separator for the label lists in fields 7 and 8. Labels containing the
    /// separator are wrapped in double quotes; literal quotes are doubled
    /// (CSV-style).
    char label_sep = ',';
    /// Separator for the per-component iteration/probability lists in fields
    /// 4 and 5 of candidate rows.
    char number_list_sep = ',';
    /// Belief-file header lines start with this prefix and are skipped.
    std::string header_prefix = "Entity\tRelation";
    /// Ontology range tokens with this prefix name XML Schema datatypes
    /// (e.g. "xsd:decimal"); all other range tokens name categories.
    std::string datatype_range_prefix = "xsd:";
};

/// Splits a label list on `sep`, honoring CSV-style quoting.
std::vector<std::string> split_label_list(const std::string& field, char sep);

/// Joins labels back; quotes entries that need it. Inverse of
/// split_label_list for every accepted field.
std::string join_label_list(const std::vector<std::string>& labels, char sep);

/// Splits on a bare separator, no quoting (category and number lists).
std::vector<std::string> split_plain_list(const std::string& field, char sep);

}  // namespace nell2rdf::ingest
