#pragma once

#include <string>
#include <string_view>

namespace nell2rdf {

/// Lowercase hex of the first 16 bytes of SHA-256 over `data` (32 chars).
/// All minted resource identifiers in the converter go through this, which
/// makes every output IRI a pure function of its content.
std::string hex128(std::string_view data);

}  // namespace nell2rdf
