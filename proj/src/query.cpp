#include "ocedforge/query.hpp"

#include <algorithm>
#include <cctype>

#include "ocedforge/vocab.hpp"

namespace ocedforge {

namespace {

using Solution = std::map<std::string, Term>;

void collect_variables(const TriplePattern& p, std::vector<std::string>& out) {
    for (const auto* slot : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<Variable>(slot)) {
            if (std::find(out.begin(), out.end(), v->name) == out.end())
                out.push_back(v->name);
        }
    }
}

// Binds a pattern slot under a partial solution: either a concrete term
// or nothing (still free).
std::optional<Term> resolve(const PatternTerm& slot, const Solution& solution) {
    if (const auto* t = std::get_if<Term>(&slot)) return *t;
    const auto& var = std::get<Variable>(slot);
    if (auto it = solution.find(var.name); it != solution.end()) return it->second;
    return std::nullopt;
}

bool extend(const PatternTerm& slot, const Term& value, Solution& solution) {
    if (const auto* t = std::get_if<Term>(&slot)) return *t == value;
    const auto& var = std::get<Variable>(slot);
    auto [it, fresh] = solution.try_emplace(var.name, value);
    return fresh || it->second == value;
}

}  // namespace

BindingSet bgp_query(const Graph& g, const std::vector<TriplePattern>& patterns) {
    BindingSet result;
    for (const auto& p : patterns) collect_variables(p, result.variables);

    std::vector<Solution> frontier{Solution{}};
    for (const auto& p : patterns) {
        std::vector<Solution> next;
        for (const auto& sol : frontier) {
            auto s = resolve(p.subject, sol);
            auto pr = resolve(p.predicate, sol);
            auto o = resolve(p.object, sol);

            // a bound predicate must be an IRI to match anything
            std::optional<Iri> pred;
            if (pr) {
                const auto* iri = std::get_if<Iri>(&*pr);
                if (!iri) continue;
                pred = *iri;
            }
            if (s && !to_resource(*s)) continue;  // literal subjects cannot match

            for (const auto& t : g.match(s, pred, o)) {
                Solution extended = sol;
                if (!extend(p.subject, to_term(t.subject), extended)) continue;
                if (!extend(p.predicate, Term{t.predicate}, extended)) continue;
                if (!extend(p.object, t.object, extended)) continue;
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }

    auto render = [&](const Solution& sol) {
        std::string key;
        for (const auto& v : result.variables) {
            key += to_ntriples(sol.at(v));
            key += '\x1f';
        }
        return key;
    };
    std::sort(frontier.begin(), frontier.end(),
              [&](const Solution& a, const Solution& b) { return render(a) < render(b); });
    result.solutions = std::move(frontier);
    return result;
}

namespace {

struct LineCursor {
    std::string_view line;
    std::size_t pos = 0;
    std::size_t line_no;
    const std::string* source;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_no, pos + 1, *source);
    }
    void skip_space() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= line.size() || line[pos] == '#';
    }
    char peek() const { return pos < line.size() ? line[pos] : '\0'; }
};

PatternTerm parse_pattern_term(LineCursor& c, const PrefixMap& prefixes) {
    c.skip_space();
    char ch = c.peek();
    if (ch == '?') {
        ++c.pos;
        std::string name;
        while (c.pos < c.line.size() &&
               (std::isalnum(static_cast<unsigned char>(c.line[c.pos])) ||
                c.line[c.pos] == '_'))
            name += c.line[c.pos++];
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
            c.fail("invalid variable name");
        return Variable{name};
    }
    if (ch == '<') {
        ++c.pos;
        std::string iri;
        while (c.pos < c.line.size() && c.line[c.pos] != '>') iri += c.line[c.pos++];
        if (c.pos >= c.line.size()) c.fail("unterminated IRI");
        ++c.pos;
        if (!is_valid_iri(iri)) c.fail("invalid IRI '" + iri + "'");
        return Term{Iri{iri}};
    }
    if (ch == '"') {
        ++c.pos;
        std::string lex;
        while (c.pos < c.line.size() && c.line[c.pos] != '"') {
            if (c.line[c.pos] == '\\' && c.pos + 1 < c.line.size()) {
                ++c.pos;
                switch (c.line[c.pos]) {
                    case 'n': lex += '\n'; break;
                    case 't': lex += '\t'; break;
                    case 'r': lex += '\r'; break;
                    case '"': lex += '"'; break;
                    case '\\': lex += '\\'; break;
                    default: c.fail("invalid escape in literal");
                }
                ++c.pos;
            } else {
                lex += c.line[c.pos++];
            }
        }
        if (c.pos >= c.line.size()) c.fail("unterminated literal");
        ++c.pos;
        if (c.peek() == '^') {
            if (c.pos + 1 >= c.line.size() || c.line[c.pos + 1] != '^')
                c.fail("expected '^^'");
            c.pos += 2;
            auto dt = parse_pattern_term(c, prefixes);
            const auto* t = std::get_if<Term>(&dt);
            const Iri* iri = t ? std::get_if<Iri>(t) : nullptr;
            if (!iri) c.fail("datatype must be an IRI");
            return Term{Literal{lex, *iri}};
        }
        if (c.peek() == '@') {
            ++c.pos;
            std::string tag;
            while (c.pos < c.line.size() &&
                   (std::isalnum(static_cast<unsigned char>(c.line[c.pos])) ||
                    c.line[c.pos] == '-'))
                tag += c.line[c.pos++];
            if (tag.empty()) c.fail("empty language tag");
            return Term{Literal::lang(lex, tag)};
        }
        return Term{Literal{lex}};
    }
    if (ch == '_' && c.pos + 1 < c.line.size() && c.line[c.pos + 1] == ':') {
        c.pos += 2;
        std::string label;
        while (c.pos < c.line.size() &&
               (std::isalnum(static_cast<unsigned char>(c.line[c.pos])) ||
                c.line[c.pos] == '_'))
            label += c.line[c.pos++];
        if (!is_valid_blank_label(label)) c.fail("invalid blank node label");
        return Term{BlankNode{label}};
    }
    // CURIE (or the bare keyword 'a')
    std::string token;
    while (c.pos < c.line.size() &&
           !std::isspace(static_cast<unsigned char>(c.line[c.pos])) && c.line[c.pos] != '#')
        token += c.line[c.pos++];
    if (token == "a") return Term{rdf::type()};
    if (token.find(':') == std::string::npos)
        c.fail("expected a term, got '" + token + "'");
    try {
        return Term{prefixes.expand(token)};
    } catch (const ParseError& e) {
        c.fail(e.message());
    }
}

}  // namespace

std::vector<TriplePattern> parse_query(std::string_view text, const PrefixMap& prefixes,
                                       std::string source) {
    std::vector<TriplePattern> patterns;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        std::string_view line =
            text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        ++line_no;

        LineCursor cursor{line, 0, line_no, &source};
        if (!cursor.done()) {
            TriplePattern p;
            p.subject = parse_pattern_term(cursor, prefixes);
            if (cursor.done()) cursor.fail("pattern needs three terms");
            p.predicate = parse_pattern_term(cursor, prefixes);
            if (cursor.done()) cursor.fail("pattern needs three terms");
            p.object = parse_pattern_term(cursor, prefixes);
            if (!cursor.done()) {
                // a trailing '.' in SPARQL style is tolerated
                cursor.skip_space();
                if (!(cursor.peek() == '.' && (++cursor.pos, cursor.done())))
                    cursor.fail("unexpected trailing content");
            }
            patterns.push_back(std::move(p));
        }

        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (patterns.empty()) throw ParseError("query has no patterns", 0, 0, source);
    return patterns;
}

std::string to_tsv(const BindingSet& bindings) {
    std::string out;
    for (std::size_t i = 0; i < bindings.variables.size(); ++i) {
        if (i) out += '\t';
        out += "?" + bindings.variables[i];
    }
    out += '\n';
    for (const auto& sol : bindings.solutions) {
        for (std::size_t i = 0; i < bindings.variables.size(); ++i) {
            if (i) out += '\t';
            out += to_ntriples(sol.at(bindings.variables[i]));
        }
        out += '\n';
    }
    return out;
}

}  // namespace ocedforge
