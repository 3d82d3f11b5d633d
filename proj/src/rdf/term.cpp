#include "nell2rdf/rdf/term.hpp"

#include <cctype>

#include "nell2rdf/util/percent.hpp"

namespace nell2rdf::rdf {

bool has_iri_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

bool valid_blank_label(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

bool valid_lang_tag(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return false;
    while (i < s.size()) {
        if (s[i] != '-') return false;
        ++i;
        std::size_t start = i;
        while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return false;
    }
    return true;
}

Result<Term> mk_iri(std::string_view s) {
    if (s.empty()) return Error{Errc::InvalidIri, "empty IRI"};
    if (!has_iri_scheme(s))
        return Error{Errc::InvalidIri, "not an absolute IRI: " + std::string(s)};
    return Term::iri(percent_encode_iri(s));
}

}  // namespace nell2rdf::rdf
