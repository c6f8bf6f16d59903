#include "ocedforge/rdf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>

#include "ocedforge/datetime.hpp"

namespace ocedforge {

std::string Diagnostic::render() const {
    std::string out = severity == Severity::Error ? "error: " : "warning: ";
    out += message;
    if (!source.empty() || line != 0) {
        out += " [";
        if (!source.empty()) out += source;
        if (line != 0) {
            if (!source.empty()) out += ":";
            out += std::to_string(line);
            if (column != 0) out += ":" + std::to_string(column);
        }
        out += "]";
    }
    return out;
}

std::string ParseError::format(const std::string& message, std::size_t line,
                               std::size_t column, const std::string& source) {
    std::string out;
    if (!source.empty()) out += source + ":";
    if (line != 0) {
        out += std::to_string(line);
        if (column != 0) out += ":" + std::to_string(column);
        out += ": ";
    } else if (!out.empty()) {
        out += " ";
    }
    out += message;
    return out;
}

namespace xsd {
#define OCEDFORGE_XSD_IRI(fn, local)             \
    const Iri& fn() {                            \
        static const Iri iri{std::string(ns) + local}; \
        return iri;                              \
    }
OCEDFORGE_XSD_IRI(string_, "string")
OCEDFORGE_XSD_IRI(boolean_, "boolean")
OCEDFORGE_XSD_IRI(integer_, "integer")
OCEDFORGE_XSD_IRI(decimal_, "decimal")
OCEDFORGE_XSD_IRI(double_, "double")
OCEDFORGE_XSD_IRI(date_time, "dateTime")
#undef OCEDFORGE_XSD_IRI
}  // namespace xsd

namespace rdf {
const Iri& type() {
    static const Iri iri{std::string(ns) + "type"};
    return iri;
}
const Iri& lang_string() {
    static const Iri iri{std::string(ns) + "langString"};
    return iri;
}
}  // namespace rdf

bool is_valid_iri(std::string_view value) {
    if (value.empty()) return false;
    if (value.find(':') == std::string_view::npos) return false;
    for (char c : value) {
        switch (c) {
            case ' ':
            case '\t':
            case '\n':
            case '\r':
            case '<':
            case '>':
            case '"':
                return false;
            default:
                break;
        }
    }
    return true;
}

bool is_valid_blank_label(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

Literal Literal::lang(std::string lex, std::string tag) {
    Literal lit;
    lit.lexical = std::move(lex);
    lit.datatype = rdf::lang_string();
    lit.language = std::move(tag);
    return lit;
}

static bool is_valid_language_tag(std::string_view tag) {
    // BCP-47 surface shape: alpha block, then alnum blocks, '-' separated.
    if (tag.empty()) return false;
    std::size_t i = 0;
    std::size_t block = 0;
    bool first = true;
    while (i <= tag.size()) {
        if (i == tag.size() || tag[i] == '-') {
            if (block == 0 || block > 8) return false;
            block = 0;
            first = false;
            if (i == tag.size()) break;
        } else {
            char c = tag[i];
            bool ok = first ? std::isalpha(static_cast<unsigned char>(c)) != 0
                            : std::isalnum(static_cast<unsigned char>(c)) != 0;
            if (!ok) return false;
            ++block;
        }
        ++i;
    }
    return true;
}

Term to_term(const Resource& r) {
    if (std::holds_alternative<Iri>(r)) return std::get<Iri>(r);
    return std::get<BlankNode>(r);
}

std::optional<Resource> to_resource(const Term& t) {
    if (std::holds_alternative<Iri>(t)) return Resource{std::get<Iri>(t)};
    if (std::holds_alternative<BlankNode>(t)) return Resource{std::get<BlankNode>(t)};
    return std::nullopt;
}

bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

static void append_escaped(std::string& out, std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: {
                auto u = static_cast<unsigned char>(c);
                if (u < 0x20) {
                    out += "\\u00";
                    out += hex[u >> 4];
                    out += hex[u & 0xF];
                } else {
                    out += c;
                }
            }
        }
    }
}

std::string escape_turtle_string(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    append_escaped(out, s);
    return out;
}

std::string to_ntriples(const Iri& iri) { return "<" + iri.value + ">"; }

std::string to_ntriples(const Term& term) {
    if (const auto* iri = std::get_if<Iri>(&term)) return to_ntriples(*iri);
    if (const auto* b = std::get_if<BlankNode>(&term)) return "_:" + b->label;
    const auto& lit = std::get<Literal>(term);
    std::string out = "\"";
    append_escaped(out, lit.lexical);
    out += "\"";
    if (!lit.language.empty()) {
        out += "@" + lit.language;
    } else if (lit.datatype != xsd::string_()) {
        out += "^^" + to_ntriples(lit.datatype);
    }
    return out;
}

std::string to_ntriples(const Resource& r) { return to_ntriples(to_term(r)); }

std::string to_ntriples(const Triple& t) {
    return to_ntriples(t.subject) + " " + to_ntriples(t.predicate) + " " +
           to_ntriples(t.object) + " .";
}

std::optional<std::string> triple_malformed_reason(const Triple& t) {
    auto check_iri = [](const Iri& iri, const char* where) -> std::optional<std::string> {
        if (!is_valid_iri(iri.value))
            return std::string(where) + " is not a valid IRI: '" + iri.value + "'";
        return std::nullopt;
    };
    if (const auto* iri = std::get_if<Iri>(&t.subject)) {
        if (auto r = check_iri(*iri, "subject")) return r;
    } else {
        const auto& b = std::get<BlankNode>(t.subject);
        if (!is_valid_blank_label(b.label))
            return "subject blank node label '" + b.label + "' is invalid";
    }
    if (auto r = check_iri(t.predicate, "predicate")) return r;
    if (const auto* iri = std::get_if<Iri>(&t.object)) {
        if (auto r = check_iri(*iri, "object")) return r;
    } else if (const auto* b = std::get_if<BlankNode>(&t.object)) {
        if (!is_valid_blank_label(b->label))
            return "object blank node label '" + b->label + "' is invalid";
    } else {
        const auto& lit = std::get<Literal>(t.object);
        if (!lit.language.empty()) {
            if (lit.datatype != rdf::lang_string())
                return "language-tagged literal must use rdf:langString datatype";
            if (!is_valid_language_tag(lit.language))
                return "invalid language tag '" + lit.language + "'";
        } else {
            if (lit.datatype == rdf::lang_string())
                return "rdf:langString literal requires a language tag";
            if (!is_valid_iri(lit.datatype.value))
                return "literal datatype is not a valid IRI: '" + lit.datatype.value + "'";
        }
        if (lit.datatype == xsd::date_time() && !parse_iso8601(lit.lexical))
            return "xsd:dateTime literal '" + lit.lexical +
                   "' is not ISO-8601 with offset";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// PrefixMap

void PrefixMap::register_prefix(std::string prefix, Iri ns) {
    for (auto& [p, n] : entries_) {
        if (p == prefix) {
            n = std::move(ns);
            return;
        }
    }
    entries_.emplace_back(std::move(prefix), std::move(ns));
}

bool PrefixMap::has_prefix(std::string_view prefix) const {
    return lookup(prefix).has_value();
}

std::optional<Iri> PrefixMap::lookup(std::string_view prefix) const {
    for (const auto& [p, n] : entries_)
        if (p == prefix) return n;
    return std::nullopt;
}

Iri PrefixMap::expand(std::string_view curie) const {
    auto colon = curie.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("'" + std::string(curie) + "' is not a CURIE (missing ':')");
    auto prefix = curie.substr(0, colon);
    auto local = curie.substr(colon + 1);
    auto ns = lookup(prefix);
    if (!ns)
        throw ParseError("unknown prefix '" + std::string(prefix) + "' in '" +
                         std::string(curie) + "'");
    return Iri{ns->value + std::string(local)};
}

bool is_safe_pname_local(std::string_view local) {
    if (local.empty()) return true;
    auto body = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
    };
    for (char c : local)
        if (!body(c) && c != '.') return false;
    // dots are fine in the middle only
    return body(local.front()) && body(local.back());
}

std::optional<std::string> PrefixMap::compress(const Iri& iri) const {
    const std::pair<std::string, Iri>* best = nullptr;
    for (const auto& e : entries_) {
        const auto& ns = e.second.value;
        if (ns.empty() || iri.value.size() < ns.size()) continue;
        if (iri.value.compare(0, ns.size(), ns) != 0) continue;
        if (!best || ns.size() > best->second.value.size()) best = &e;
    }
    if (!best) return std::nullopt;
    std::string local = iri.value.substr(best->second.value.size());
    if (!is_safe_pname_local(local)) return std::nullopt;
    return best->first + ":" + local;
}

void PrefixMap::merge(const PrefixMap& other) {
    for (const auto& [p, n] : other.entries()) register_prefix(p, n);
}

// ---------------------------------------------------------------------------
// TermTable

TermId TermTable::intern(const Term& term) {
    std::string rendered = to_ntriples(term);
    if (auto it = lookup_.find(std::string_view(rendered)); it != lookup_.end())
        return it->second;
    auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    rendered_.push_back(std::move(rendered));
    lookup_.emplace(std::string_view(rendered_.back()), id);
    return id;
}

std::optional<TermId> TermTable::find(const Term& term) const {
    std::string rendered = to_ntriples(term);
    if (auto it = lookup_.find(std::string_view(rendered)); it != lookup_.end())
        return it->second;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Graph

struct Graph::Probe {
    std::optional<TermId> s, p, o;
};

namespace {
// Orders ids by rendered form; equal renderings mean the same interned id.
inline int cmp_ids(const TermTable& t, TermId a, TermId b) {
    if (a == b) return 0;
    return t.rendered(a).compare(t.rendered(b)) < 0 ? -1 : 1;
}
}  // namespace

bool Graph::Cmp::operator()(const Encoded& a, const Encoded& b) const {
    std::array<TermId, 3> ka, kb;
    auto arrange = [&](const Encoded& e, std::array<TermId, 3>& k) {
        switch (order) {
            case Order::SPO: k = {e.s, e.p, e.o}; break;
            case Order::POS: k = {e.p, e.o, e.s}; break;
            case Order::OSP: k = {e.o, e.s, e.p}; break;
        }
    };
    arrange(a, ka);
    arrange(b, kb);
    for (int i = 0; i < 3; ++i) {
        int c = cmp_ids(*table, ka[i], kb[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool Graph::Cmp::operator()(const Encoded& a, const Probe& b) const {
    std::array<TermId, 3> ka;
    std::array<std::optional<TermId>, 3> kb;
    switch (order) {
        case Order::SPO: ka = {a.s, a.p, a.o}; kb = {b.s, b.p, b.o}; break;
        case Order::POS: ka = {a.p, a.o, a.s}; kb = {b.p, b.o, b.s}; break;
        case Order::OSP: ka = {a.o, a.s, a.p}; kb = {b.o, b.s, b.p}; break;
    }
    for (int i = 0; i < 3; ++i) {
        if (!kb[i]) return false;  // unbound probe slot sorts lowest
        int c = cmp_ids(*table, ka[i], *kb[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool Graph::Cmp::operator()(const Probe& a, const Encoded& b) const {
    std::array<std::optional<TermId>, 3> ka;
    std::array<TermId, 3> kb;
    switch (order) {
        case Order::SPO: ka = {a.s, a.p, a.o}; kb = {b.s, b.p, b.o}; break;
        case Order::POS: ka = {a.p, a.o, a.s}; kb = {b.p, b.o, b.s}; break;
        case Order::OSP: ka = {a.o, a.s, a.p}; kb = {b.o, b.s, b.p}; break;
    }
    for (int i = 0; i < 3; ++i) {
        if (!ka[i]) return true;
        int c = cmp_ids(*table, *ka[i], kb[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Graph::Graph()
    : terms_(std::make_unique<TermTable>()),
      spo_(Cmp{terms_.get(), Order::SPO}),
      pos_(Cmp{terms_.get(), Order::POS}),
      osp_(Cmp{terms_.get(), Order::OSP}) {}

Graph::Graph(const Graph& other) : Graph() { rebuild_from(other); }

Graph& Graph::operator=(const Graph& other) {
    if (this != &other) {
        Graph fresh;
        fresh.rebuild_from(other);
        *this = std::move(fresh);
    }
    return *this;
}

void Graph::rebuild_from(const Graph& other) {
    for (const auto& e : other.spo_) {
        Encoded enc{terms_->intern(other.terms_->term(e.s)),
                    terms_->intern(other.terms_->term(e.p)),
                    terms_->intern(other.terms_->term(e.o))};
        spo_.insert(enc);
        pos_.insert(enc);
        osp_.insert(enc);
    }
}

bool Graph::insert(const Triple& t) {
    if (auto reason = triple_malformed_reason(t))
        throw ParseError("malformed triple rejected: " + *reason);
    Encoded enc{terms_->intern(to_term(t.subject)), terms_->intern(Term{t.predicate}),
                terms_->intern(t.object)};
    auto [_, fresh] = spo_.insert(enc);
    if (!fresh) return false;
    pos_.insert(enc);
    osp_.insert(enc);
    return true;
}

void Graph::insert_all(const Graph& other) {
    for (const auto& t : other.triples()) insert(t);
}

bool Graph::contains(const Triple& t) const {
    auto s = terms_->find(to_term(t.subject));
    auto p = terms_->find(Term{t.predicate});
    auto o = terms_->find(t.object);
    if (!s || !p || !o) return false;
    return spo_.count(Encoded{*s, *p, *o}) > 0;
}

Triple Graph::decode(const Encoded& e) const {
    Triple t;
    t.subject = *to_resource(terms_->term(e.s));
    t.predicate = std::get<Iri>(terms_->term(e.p));
    t.object = terms_->term(e.o);
    return t;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
    std::optional<TermId> sid, pid, oid;
    if (s) {
        sid = terms_->find(*s);
        if (!sid) return {};
    }
    if (p) {
        pid = terms_->find(Term{*p});
        if (!pid) return {};
    }
    if (o) {
        oid = terms_->find(*o);
        if (!oid) return {};
    }

    // Pick the index whose order puts the bound slots first.
    const Index* index = &spo_;
    int prefix_len = 0;
    std::array<std::optional<TermId>, 3> key{};
    if (sid) {
        if (pid) {
            index = &spo_;
            key = {sid, pid, oid};
            prefix_len = oid ? 3 : 2;
        } else if (oid) {
            index = &osp_;
            key = {oid, sid, std::nullopt};
            prefix_len = 2;
        } else {
            index = &spo_;
            key = {sid, std::nullopt, std::nullopt};
            prefix_len = 1;
        }
    } else if (pid) {
        index = &pos_;
        key = {pid, oid, std::nullopt};
        prefix_len = oid ? 2 : 1;
    } else if (oid) {
        index = &osp_;
        key = {oid, std::nullopt, std::nullopt};
        prefix_len = 1;
    }

    std::vector<Triple> out;
    if (prefix_len == 0) {
        for (const auto& e : spo_) out.push_back(decode(e));
        return out;  // SPO iteration is already the canonical order
    }

    Probe probe;
    switch (index == &spo_ ? 0 : index == &pos_ ? 1 : 2) {
        case 0: probe = Probe{key[0], key[1], key[2]}; break;
        case 1: probe = Probe{key[2], key[0], key[1]}; break;  // (p,o,s) -> s,p,o slots
        case 2: probe = Probe{key[1], key[2], key[0]}; break;  // (o,s,p)
    }

    std::vector<Encoded> hits;
    for (auto it = index->lower_bound(probe); it != index->end(); ++it) {
        std::array<TermId, 3> have;
        if (index == &spo_) have = {it->s, it->p, it->o};
        else if (index == &pos_) have = {it->p, it->o, it->s};
        else have = {it->o, it->s, it->p};
        bool prefix_ok = true;
        for (int i = 0; i < prefix_len; ++i) {
            if (have[i] != *key[i]) {
                prefix_ok = false;
                break;
            }
        }
        if (!prefix_ok) break;
        hits.push_back(*it);
    }

    if (index != &spo_) {
        Cmp spo_cmp{terms_.get(), Order::SPO};
        std::sort(hits.begin(), hits.end(),
                  [&](const Encoded& a, const Encoded& b) { return spo_cmp(a, b); });
    }
    out.reserve(hits.size());
    for (const auto& e : hits) out.push_back(decode(e));
    return out;
}

std::vector<Triple> Graph::triples() const {
    std::vector<Triple> out;
    out.reserve(spo_.size());
    for (const auto& e : spo_) out.push_back(decode(e));
    return out;
}

std::vector<Resource> Graph::subjects(const std::optional<Iri>& p,
                                      const std::optional<Term>& o) const {
    std::vector<Resource> out;
    std::string last;
    for (const auto& t : match(std::nullopt, p, o)) {
        std::string r = to_ntriples(t.subject);
        if (out.empty() || r != last) {
            out.push_back(t.subject);
            last = std::move(r);
        }
    }
    // match() is (s,p,o)-ordered only when s leads the chosen index; with
    // p or o bound the subjects still come out sorted because results are
    // re-sorted to SPO order, so dedup-by-adjacency is enough.
    return out;
}

std::vector<std::string> Graph::to_ntriples_lines() const {
    std::vector<std::string> lines;
    lines.reserve(spo_.size());
    for (const auto& e : spo_) lines.push_back(to_ntriples(decode(e)));
    return lines;
}

bool Graph::operator==(const Graph& other) const {
    if (size() != other.size()) return false;
    return to_ntriples_lines() == other.to_ntriples_lines();
}

}  // namespace ocedforge
