#include "nell2rdf/rdf/parser.hpp"

#include <cctype>
#include <cstdint>

namespace nell2rdf::rdf {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
};

Error syntax_error(const Cursor& c, const char* what) {
    return Error{Errc::MalformedEncoding,
                 std::string(what) + " at column " + std::to_string(c.pos + 1), c.pos};
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Result<std::string> read_quoted(Cursor& c) {
    // c.peek() == '"'
    ++c.pos;
    std::string out;
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == '"') {
            ++c.pos;
            return out;
        }
        if (ch == '\\') {
            ++c.pos;
            if (c.eof()) return syntax_error(c, "dangling escape");
            char e = c.peek();
            ++c.pos;
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 't': out += '\t'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'u':
                case 'U': {
                    int n = e == 'u' ? 4 : 8;
                    std::uint32_t cp = 0;
                    for (int i = 0; i < n; ++i) {
                        if (c.eof()) return syntax_error(c, "truncated \\u escape");
                        int v = hex_val(c.peek());
                        if (v < 0) return syntax_error(c, "bad hex digit in escape");
                        cp = cp * 16 + static_cast<std::uint32_t>(v);
                        ++c.pos;
                    }
                    append_utf8(out, cp);
                    break;
                }
                default: return syntax_error(c, "unknown escape");
            }
            continue;
        }
        out += ch;
        ++c.pos;
    }
    return syntax_error(c, "unterminated string");
}

Result<Term> read_term(Cursor& c) {
    c.skip_ws();
    if (c.eof()) return syntax_error(c, "expected term");
    char ch = c.peek();
    if (ch == '<') {
        ++c.pos;
        std::string iri;
        while (!c.eof() && c.peek() != '>') {
            iri += c.peek();
            ++c.pos;
        }
        if (c.eof()) return syntax_error(c, "unterminated IRI");
        ++c.pos;
        return Term::iri(std::move(iri));
    }
    if (ch == '_') {
        ++c.pos;
        if (c.eof() || c.peek() != ':') return syntax_error(c, "malformed blank node");
        ++c.pos;
        std::string label;
        while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
            label += c.peek();
            ++c.pos;
        }
        if (label.empty()) return syntax_error(c, "empty blank node label");
        return Term::blank(std::move(label));
    }
    if (ch == '"') {
        auto lex = read_quoted(c);
        if (!lex.ok()) return lex.error();
        if (!c.eof() && c.peek() == '@') {
            ++c.pos;
            std::string lang;
            while (!c.eof() &&
                   (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '-')) {
                lang += c.peek();
                ++c.pos;
            }
            if (!valid_lang_tag(lang)) return syntax_error(c, "bad language tag");
            return Term::lang_literal(lex.take(), std::move(lang));
        }
        if (c.pos + 1 < c.s.size() && c.peek() == '^' && c.s[c.pos + 1] == '^') {
            c.pos += 2;
            if (c.eof() || c.peek() != '<') return syntax_error(c, "expected datatype IRI");
            auto dt = read_term(c);
            if (!dt.ok()) return dt.error();
            return Term::literal(lex.take(), dt.value().value);
        }
        return Term::literal(lex.take());
    }
    return syntax_error(c, "unexpected character");
}

}  // namespace

Result<std::optional<Quad>> DocumentReader::read_line(std::string_view line) {
    Cursor c{line};
    c.skip_ws();
    if (c.eof() || c.peek() == '#') return std::optional<Quad>{};

    if (format_ == SyntaxFormat::Trig) {
        if (c.peek() == '}') {
            if (!in_block_) return Error{Errc::MalformedEncoding, "unmatched '}'"};
            in_block_ = false;
            ++c.pos;
            c.skip_ws();
            if (!c.eof()) return Error{Errc::MalformedEncoding, "trailing bytes after '}'"};
            return std::optional<Quad>{};
        }
    }

    auto s = read_term(c);
    if (!s.ok()) return s.error();

    if (format_ == SyntaxFormat::Trig) {
        // A graph-block opener is `<g> {`; decide after the first term so a
        // '{' inside a literal cannot be mistaken for one.
        Cursor probe = c;
        probe.skip_ws();
        if (!probe.eof() && probe.peek() == '{') {
            if (in_block_) return Error{Errc::MalformedEncoding, "nested graph block"};
            if (!s.value().is_iri()) return Error{Errc::MalformedEncoding, "graph name must be IRI"};
            ++probe.pos;
            probe.skip_ws();
            if (!probe.eof()) return Error{Errc::MalformedEncoding, "trailing bytes after '{'"};
            in_block_ = true;
            block_graph_ = s.take();
            return std::optional<Quad>{};
        }
    }
    auto p = read_term(c);
    if (!p.ok()) return p.error();
    if (!p.value().is_iri()) return Error{Errc::MalformedEncoding, "predicate must be IRI"};
    auto o = read_term(c);
    if (!o.ok()) return o.error();

    std::optional<Term> graph;
    c.skip_ws();
    if (format_ == SyntaxFormat::NQuads && !c.eof() && c.peek() != '.') {
        auto g = read_term(c);
        if (!g.ok()) return g.error();
        if (!g.value().is_iri()) return Error{Errc::MalformedEncoding, "graph name must be IRI"};
        graph = g.take();
        c.skip_ws();
    }
    if (format_ == SyntaxFormat::Trig && in_block_) graph = block_graph_;

    if (c.eof() || c.peek() != '.') return syntax_error(c, "expected '.'");
    ++c.pos;
    c.skip_ws();
    if (!c.eof()) return syntax_error(c, "trailing bytes after '.'");

    if (s.value().is_literal()) return Error{Errc::MalformedEncoding, "literal subject"};
    return std::optional<Quad>(
        Quad{Triple{s.take(), p.take(), o.take()}, std::move(graph)});
}

Result<std::vector<Quad>> parse_document(std::string_view text, SyntaxFormat format) {
    DocumentReader reader(format);
    std::vector<Quad> quads;
    std::size_t start = 0;
    std::size_t lineno = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = end == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, end - start);
        ++lineno;
        if (!line.empty()) {
            auto q = reader.read_line(line);
            if (!q.ok()) {
                Error e = q.error();
                e.message = "line " + std::to_string(lineno) + ": " + e.message;
                return e;
            }
            if (q.value()) quads.push_back(std::move(*q.value()));
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (!reader.balanced()) return Error{Errc::MalformedEncoding, "unterminated graph block"};
    return quads;
}

}  // namespace nell2rdf::rdf
