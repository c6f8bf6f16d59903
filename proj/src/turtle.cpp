#include "ocedforge/turtle.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace ocedforge {

namespace {

void append_utf8(std::string& out, std::uint32_t code) {
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xC0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3F));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xE0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
    }
}

enum class Tok {
    Eof,
    Dot,
    Semicolon,
    Comma,
    IriRef,      // value = IRI characters (escapes resolved)
    PName,       // value = raw prefixed name
    Blank,       // value = label
    String,      // value = unescaped contents
    LangTag,     // value = tag
    Caret2,      // ^^
    A,
    Boolean,     // value = "true"/"false"
    Integer,
    Decimal,
    Double,
    AtPrefix,
    SparqlPrefix,
};

struct Token {
    Tok kind = Tok::Eof;
    std::string value;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    Lexer(std::string_view text, std::string source)
        : text_(text), source_(std::move(source)) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (eof()) return t;

        char c = peek();
        switch (c) {
            case '.':
                if (std::isdigit(static_cast<unsigned char>(peek(1)))) return lex_number(t);
                get();
                t.kind = Tok::Dot;
                return t;
            case ';': get(); t.kind = Tok::Semicolon; return t;
            case ',': get(); t.kind = Tok::Comma; return t;
            case '<': return lex_iriref(t);
            case '"': return lex_string(t);
            case '\'':
                fail(t, "single-quoted strings are not supported");
            case '_': return lex_blank(t);
            case '@': return lex_at(t);
            case '(':
            case ')':
                fail(t, "unsupported construct: collection '( )'");
            case '[':
            case ']':
                fail(t, "unsupported construct: anonymous property list '[ ]'");
            case '^':
                get();
                if (peek() == '^') {
                    get();
                    t.kind = Tok::Caret2;
                    return t;
                }
                fail(t, "expected '^^'");
            default:
                break;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return lex_number(t);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == ':')
            return lex_name(t);
        fail(t, std::string("unexpected character '") + c + "'");
    }

    const std::string& source() const { return source_; }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(msg, at.line, at.col, source_);
    }
    [[noreturn]] void fail_here(const std::string& msg) const {
        throw ParseError(msg, line_, col_, source_);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                break;
            }
        }
    }

    std::uint32_t lex_hex(int n) {
        std::uint32_t v = 0;
        for (int i = 0; i < n; ++i) {
            if (eof()) fail_here("truncated unicode escape");
            char c = get();
            v <<= 4;
            if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
            else fail_here("invalid unicode escape digit");
        }
        return v;
    }

    Token& lex_iriref(Token& t) {
        get();  // '<'
        std::string v;
        while (true) {
            if (eof()) fail(t, "unterminated IRI");
            char c = get();
            if (c == '>') break;
            if (c == '\n' || c == ' ' || c == '\t' || c == '"' || c == '<')
                fail(t, "invalid character inside IRI");
            if (c == '\\') {
                char e = eof() ? '\0' : get();
                if (e == 'u') append_utf8(v, lex_hex(4));
                else if (e == 'U') append_utf8(v, lex_hex(8));
                else fail_here("invalid escape in IRI");
            } else {
                v += c;
            }
        }
        t.kind = Tok::IriRef;
        t.value = std::move(v);
        return t;
    }

    void lex_escape(std::string& v) {
        char e = eof() ? '\0' : get();
        switch (e) {
            case 't': v += '\t'; break;
            case 'b': v += '\b'; break;
            case 'n': v += '\n'; break;
            case 'r': v += '\r'; break;
            case 'f': v += '\f'; break;
            case '"': v += '"'; break;
            case '\'': v += '\''; break;
            case '\\': v += '\\'; break;
            case 'u': append_utf8(v, lex_hex(4)); break;
            case 'U': append_utf8(v, lex_hex(8)); break;
            default: fail_here("invalid string escape");
        }
    }

    Token& lex_string(Token& t) {
        get();  // first '"'
        std::string v;
        bool long_form = false;
        if (peek() == '"' && peek(1) == '"') {
            get();
            get();
            long_form = true;
        } else if (peek() == '"') {
            // empty short string
            get();
            t.kind = Tok::String;
            return t;
        }
        while (true) {
            if (eof()) fail(t, "unterminated string literal");
            char c = get();
            if (c == '\\') {
                lex_escape(v);
                continue;
            }
            if (long_form) {
                if (c == '"' && peek() == '"' && peek(1) == '"') {
                    get();
                    get();
                    break;
                }
                v += c;
            } else {
                if (c == '"') break;
                if (c == '\n') fail(t, "newline in short string literal");
                v += c;
            }
        }
        t.kind = Tok::String;
        t.value = std::move(v);
        return t;
    }

    Token& lex_blank(Token& t) {
        get();  // '_'
        if (peek() != ':') fail(t, "expected ':' after '_' in blank node");
        get();
        std::string label;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            label += get();
        if (label.empty()) fail(t, "empty blank node label");
        t.kind = Tok::Blank;
        t.value = std::move(label);
        return t;
    }

    Token& lex_at(Token& t) {
        get();  // '@'
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
            word += get();
        if (word == "prefix") {
            t.kind = Tok::AtPrefix;
            return t;
        }
        if (word == "base") fail(t, "unsupported construct: base directive");
        // language tag: alpha block then alnum blocks
        if (word.empty()) fail(t, "empty language tag");
        t.kind = Tok::LangTag;
        t.value = std::move(word);
        return t;
    }

    Token& lex_number(Token& t) {
        std::string v;
        if (peek() == '+' || peek() == '-') v += get();
        bool digits_before = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v += get();
            digits_before = true;
        }
        bool is_decimal = false;
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            v += get();
            while (std::isdigit(static_cast<unsigned char>(peek()))) v += get();
            is_decimal = true;
        } else if (peek() == '.' && !digits_before) {
            fail(t, "malformed number");
        }
        if (!digits_before && !is_decimal) fail(t, "malformed number");
        if (peek() == 'e' || peek() == 'E') {
            v += get();
            if (peek() == '+' || peek() == '-') v += get();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail(t, "malformed double exponent");
            while (std::isdigit(static_cast<unsigned char>(peek()))) v += get();
            t.kind = Tok::Double;
        } else {
            t.kind = is_decimal ? Tok::Decimal : Tok::Integer;
        }
        t.value = std::move(v);
        return t;
    }

    // Prefixed names, 'a', booleans, and the SPARQL PREFIX keyword.
    Token& lex_name(Token& t) {
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                          peek() == '-'))
            word += get();
        if (peek() == ':') {
            get();
            std::string local;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                              peek() == '_' || peek() == '-' || peek() == '.'))
                local += get();
            // trailing dots close the statement, they are not part of the name
            std::size_t trimmed = 0;
            while (!local.empty() && local.back() == '.') {
                local.pop_back();
                ++trimmed;
            }
            pos_ -= trimmed;
            col_ -= trimmed;
            t.kind = Tok::PName;
            t.value = word + ":" + local;
            return t;
        }
        if (word == "a") {
            t.kind = Tok::A;
            return t;
        }
        if (word == "true" || word == "false") {
            t.kind = Tok::Boolean;
            t.value = std::move(word);
            return t;
        }
        std::string upper;
        for (char c : word) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (upper == "PREFIX") {
            t.kind = Tok::SparqlPrefix;
            return t;
        }
        if (upper == "BASE") fail(t, "unsupported construct: base directive");
        fail(t, "unexpected token '" + word + "'");
    }

    std::string_view text_;
    std::string source_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, std::string source)
        : lexer_(text, std::move(source)) {
        advance();
    }

    TurtleDocument run() {
        while (cur_.kind != Tok::Eof) {
            if (cur_.kind == Tok::AtPrefix) {
                directive(true);
            } else if (cur_.kind == Tok::SparqlPrefix) {
                directive(false);
            } else {
                triples();
                expect(Tok::Dot, "expected '.' after statement");
            }
        }
        return std::move(doc_);
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Tok kind, const std::string& msg) {
        if (cur_.kind != kind) fail(msg);
        advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur_.line, cur_.col, lexer_.source());
    }

    void directive(bool at_form) {
        advance();
        if (cur_.kind != Tok::PName) fail("expected prefix name in prefix directive");
        std::string raw = cur_.value;
        auto colon = raw.find(':');
        if (colon == std::string::npos || colon + 1 != raw.size())
            fail("prefix directive expects 'prefix:' form");
        std::string prefix = raw.substr(0, colon);
        advance();
        if (cur_.kind != Tok::IriRef) fail("expected <IRI> in prefix directive");
        Iri ns{cur_.value};
        if (!is_valid_iri(ns.value)) fail("invalid namespace IRI '" + ns.value + "'");
        advance();
        if (at_form) expect(Tok::Dot, "expected '.' after @prefix directive");
        doc_.prefixes.register_prefix(std::move(prefix), std::move(ns));
    }

    Iri expand_pname(const Token& t) {
        try {
            return doc_.prefixes.expand(t.value);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), t.line, t.col, lexer_.source());
        }
    }

    Resource subject() {
        switch (cur_.kind) {
            case Tok::IriRef: {
                Iri iri{cur_.value};
                if (!is_valid_iri(iri.value)) fail("invalid IRI '" + iri.value + "'");
                advance();
                return iri;
            }
            case Tok::PName: {
                Iri iri = expand_pname(cur_);
                advance();
                return iri;
            }
            case Tok::Blank: {
                BlankNode b{cur_.value};
                advance();
                return b;
            }
            default:
                fail("expected subject (IRI, prefixed name, or blank node)");
        }
    }

    Iri predicate() {
        switch (cur_.kind) {
            case Tok::A: {
                advance();
                return rdf::type();
            }
            case Tok::IriRef: {
                Iri iri{cur_.value};
                if (!is_valid_iri(iri.value)) fail("invalid IRI '" + iri.value + "'");
                advance();
                return iri;
            }
            case Tok::PName: {
                Iri iri = expand_pname(cur_);
                advance();
                return iri;
            }
            default:
                fail("expected predicate (IRI, prefixed name, or 'a')");
        }
    }

    Term object() {
        switch (cur_.kind) {
            case Tok::IriRef:
            case Tok::PName:
            case Tok::Blank:
                return to_term(subject());
            case Tok::String: {
                std::string lex = cur_.value;
                advance();
                if (cur_.kind == Tok::Caret2) {
                    advance();
                    Iri dt;
                    if (cur_.kind == Tok::IriRef) dt = Iri{cur_.value};
                    else if (cur_.kind == Tok::PName) dt = expand_pname(cur_);
                    else fail("expected datatype IRI after '^^'");
                    advance();
                    return Literal{std::move(lex), std::move(dt)};
                }
                if (cur_.kind == Tok::LangTag) {
                    std::string tag = cur_.value;
                    advance();
                    return Literal::lang(std::move(lex), std::move(tag));
                }
                return Literal{std::move(lex)};
            }
            case Tok::Integer: {
                Literal lit{cur_.value, xsd::integer_()};
                advance();
                return lit;
            }
            case Tok::Decimal: {
                Literal lit{cur_.value, xsd::decimal_()};
                advance();
                return lit;
            }
            case Tok::Double: {
                Literal lit{cur_.value, xsd::double_()};
                advance();
                return lit;
            }
            case Tok::Boolean: {
                Literal lit{cur_.value, xsd::boolean_()};
                advance();
                return lit;
            }
            default:
                fail("expected object (IRI, prefixed name, blank node, or literal)");
        }
    }

    void triples() {
        Resource subj = subject();
        while (true) {
            Iri pred = predicate();
            while (true) {
                Token at = cur_;
                Term obj = object();
                try {
                    doc_.graph.insert(Triple{subj, pred, obj});
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), at.line, at.col, lexer_.source());
                }
                if (cur_.kind == Tok::Comma) {
                    advance();
                    continue;
                }
                break;
            }
            if (cur_.kind == Tok::Semicolon) {
                advance();
                // tolerate trailing ';' before '.'
                if (cur_.kind == Tok::Dot) break;
                continue;
            }
            break;
        }
    }

    Lexer lexer_;
    Token cur_;
    TurtleDocument doc_;
};

bool matches_integer(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool matches_decimal(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    auto dot = s.find('.', i);
    if (dot == std::string_view::npos || dot + 1 >= s.size()) return false;
    for (std::size_t k = i; k < dot; ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    for (std::size_t k = dot + 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

bool matches_double(std::string_view s) {
    auto e = s.find_first_of("eE");
    if (e == std::string_view::npos || e == 0 || e + 1 >= s.size()) return false;
    std::string_view mantissa = s.substr(0, e);
    std::string_view exp = s.substr(e + 1);
    if (!matches_integer(exp)) return false;
    return matches_integer(mantissa) || matches_decimal(mantissa);
}

std::string render_turtle_term(const Term& term, const PrefixMap& pm) {
    if (const auto* iri = std::get_if<Iri>(&term)) {
        if (auto curie = pm.compress(*iri)) return *curie;
        return to_ntriples(*iri);
    }
    if (const auto* b = std::get_if<BlankNode>(&term)) return "_:" + b->label;
    const auto& lit = std::get<Literal>(term);
    if (!lit.language.empty())
        return "\"" + escape_turtle_string(lit.lexical) + "\"@" + lit.language;
    if (lit.datatype == xsd::string_())
        return "\"" + escape_turtle_string(lit.lexical) + "\"";
    if (lit.datatype == xsd::integer_() && matches_integer(lit.lexical)) return lit.lexical;
    if (lit.datatype == xsd::decimal_() && matches_decimal(lit.lexical)) return lit.lexical;
    if (lit.datatype == xsd::double_() && matches_double(lit.lexical)) return lit.lexical;
    if (lit.datatype == xsd::boolean_() && (lit.lexical == "true" || lit.lexical == "false"))
        return lit.lexical;
    std::string dt;
    if (auto curie = pm.compress(lit.datatype)) dt = *curie;
    else dt = to_ntriples(lit.datatype);
    return "\"" + escape_turtle_string(lit.lexical) + "\"^^" + dt;
}

}  // namespace

TurtleDocument parse_turtle(std::string_view text, std::string source) {
    Parser parser(text, std::move(source));
    return parser.run();
}

TurtleDocument parse_turtle(std::istream& in, std::string source) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return parse_turtle(text, std::move(source));
}

std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes) {
    std::string out;
    for (const auto& [prefix, ns] : prefixes.entries())
        out += "@prefix " + prefix + ": <" + ns.value + "> .\n";

    auto triples = g.triples();  // lexicographic (s, p, o)
    if (triples.empty()) return out;

    std::size_t i = 0;
    bool first_block = true;
    while (i < triples.size()) {
        const Resource subj = triples[i].subject;
        // gather this subject's predicate groups, in index order
        struct Group {
            Iri pred;
            std::vector<Term> objects;
        };
        std::vector<Group> groups;
        for (; i < triples.size() && triples[i].subject == subj; ++i) {
            if (groups.empty() || !(groups.back().pred == triples[i].predicate))
                groups.push_back({triples[i].predicate, {}});
            groups.back().objects.push_back(triples[i].object);
        }
        // rdf:type comes first, as 'a'
        for (std::size_t k = 0; k < groups.size(); ++k) {
            if (groups[k].pred == rdf::type() && k != 0) {
                auto type_group = std::move(groups[k]);
                groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(k));
                groups.insert(groups.begin(), std::move(type_group));
                break;
            }
        }

        if (!first_block || prefixes.size() > 0) out += "\n";
        first_block = false;

        out += render_turtle_term(to_term(subj), prefixes);
        for (std::size_t k = 0; k < groups.size(); ++k) {
            out += k == 0 ? " " : "    ";
            if (groups[k].pred == rdf::type()) out += "a";
            else out += render_turtle_term(Term{groups[k].pred}, prefixes);
            for (std::size_t j = 0; j < groups[k].objects.size(); ++j) {
                out += j == 0 ? " " : ", ";
                out += render_turtle_term(groups[k].objects[j], prefixes);
            }
            out += k + 1 < groups.size() ? " ;\n" : " .\n";
        }
    }
    return out;
}

}  // namespace ocedforge
