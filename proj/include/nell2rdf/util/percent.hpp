#pragma once

#include <string>
#include <string_view>

namespace nell2rdf {

inline bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Characters that may not appear raw inside an IRI. Everything >= 0x80 is
// kept as-is: IRIs are Unicode and the serializers write UTF-8 directly.
inline bool iri_char_disallowed(unsigned char c) {
    if (c <= 0x20 || c == 0x7F) return true;
    switch (c) {
        case '<':
        case '>':
        case '"':
        case '{':
        case '}':
        case '|':
        case '^':
        case '`':
        case '\\': return true;
        default: return false;
    }
}

inline void append_pct(std::string& out, unsigned char c) {
    static constexpr char hexdig[] = "0123456789ABCDEF";
    out += '%';
    out += hexdig[c >> 4];
    out += hexdig[c & 0xF];
}

/// Percent-encodes the characters an IRI cannot carry. Existing valid %XX
/// escapes are preserved, so the function is idempotent.
inline std::string percent_encode_iri(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (c == '%') {
            if (i + 2 < in.size() && is_hex_digit(in[i + 1]) && is_hex_digit(in[i + 2])) {
                out += '%';
            } else {
                append_pct(out, c);
            }
        } else if (iri_char_disallowed(c)) {
            append_pct(out, c);
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

/// Encoding used for minted path segments. Unlike percent_encode_iri this
/// always encodes '%' (and the path delimiters '/', '#', '?', ':'), making the
/// segment encoding injective: two distinct segments never collide.
inline std::string percent_encode_segment(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (iri_char_disallowed(c) || c == '%' || c == '/' || c == '#' || c == '?' || c == ':') {
            append_pct(out, c);
        } else {
            out += ch;
        }
    }
    return out;
}

}  // namespace nell2rdf
