#pragma once

#include <string>
#include <string_view>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf::rdf {

// Canonical lexical forms for the datatypes the converter emits. The point is
// byte-stable output: any accepted spelling of the same value maps to exactly
// one rendering.

/// xsd:integer — optional sign, no leading zeros, "-" only when negative.
Result<std::string> canonical_integer(std::string_view s);

/// xsd:decimal — mandatory decimal point with at least one digit on each
/// side, no redundant zeros ("1" -> "1.0", ".5" -> "0.5", "1.50" -> "1.5").
Result<std::string> canonical_decimal(std::string_view s);

/// xsd:boolean — "true" / "false" ("1"/"0" accepted on input).
Result<std::string> canonical_boolean(std::string_view s);

/// xsd:date — YYYY-MM-DD, range-checked.
Result<std::string> canonical_date(std::string_view s);

/// xsd:dateTime — accepts 'T' or ' ' separators, optional fractional seconds
/// and an optional zone (Z or ±hh:mm). Times without a zone are read as UTC.
/// Canonical form is YYYY-MM-DDTHH:MM:SS[.fff]Z in UTC.
Result<std::string> canonical_datetime(std::string_view s);

/// Parses a decimal and checks it lies in [lo, hi]; used for probabilities
/// and geographic coordinates. Returns the canonical decimal form.
Result<std::string> canonical_decimal_in(std::string_view s, double lo, double hi);

}  // namespace nell2rdf::rdf
