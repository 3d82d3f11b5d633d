#include "nell2rdf/rdf/ntriples.hpp"

#include <cstdio>

namespace nell2rdf::rdf {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
}

}  // namespace

void append_term(std::string& out, const Term& t) {
    switch (t.kind) {
        case TermKind::Iri:
            out += '<';
            out += t.value;
            out += '>';
            break;
        case TermKind::BlankNode:
            out += "_:";
            out += t.value;
            break;
        case TermKind::Literal:
            out += '"';
            append_escaped(out, t.value);
            out += '"';
            if (!t.lang.empty()) {
                out += '@';
                out += t.lang;
            } else if (!t.datatype.empty()) {
                out += "^^<";
                out += t.datatype;
                out += '>';
            }
            break;
    }
}

void append_triple_line(std::string& out, const Triple& t) {
    append_term(out, t.subject);
    out += ' ';
    append_term(out, t.predicate);
    out += ' ';
    append_term(out, t.object);
    out += " .\n";
}

void append_quad_line(std::string& out, const Quad& q) {
    append_term(out, q.triple.subject);
    out += ' ';
    append_term(out, q.triple.predicate);
    out += ' ';
    append_term(out, q.triple.object);
    if (q.graph) {
        out += ' ';
        append_term(out, *q.graph);
    }
    out += " .\n";
}

std::string statement_key(const Triple& t) {
    std::string out;
    append_triple_line(out, t);
    out.pop_back();  // drop the newline; hashing covers "<s> <p> <o> ."
    return out;
}

void TrigWriter::append(std::string& out, const Quad& q) {
    if (q.graph) {
        if (in_block_ && current_graph_ != *q.graph) {
            out += "}\n";
            in_block_ = false;
        }
        if (!in_block_) {
            append_term(out, *q.graph);
            out += " {\n";
            in_block_ = true;
            current_graph_ = *q.graph;
        }
    } else if (in_block_) {
        out += "}\n";
        in_block_ = false;
    }
    append_triple_line(out, q.triple);
}

void TrigWriter::finish(std::string& out) {
    if (in_block_) {
        out += "}\n";
        in_block_ = false;
    }
}

}  // namespace nell2rdf::rdf
