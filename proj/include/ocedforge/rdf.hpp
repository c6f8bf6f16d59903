#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ocedforge/diagnostics.hpp"

namespace ocedforge {

/// Absolute IRI. Valid iff non-empty, contains ':', and holds none of
/// space, '<', '>', '"' (nor other whitespace).
struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}

    bool operator==(const Iri&) const = default;
    auto operator<=>(const Iri&) const = default;
};

bool is_valid_iri(std::string_view value);

/// Labeled blank node; labels match [A-Za-z0-9_]+.
struct BlankNode {
    std::string label;

    BlankNode() = default;
    explicit BlankNode(std::string l) : label(std::move(l)) {}

    bool operator==(const BlankNode&) const = default;
    auto operator<=>(const BlankNode&) const = default;
};

bool is_valid_blank_label(std::string_view label);

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
const Iri& string_();
const Iri& boolean_();
const Iri& integer_();
const Iri& decimal_();
const Iri& double_();
const Iri& date_time();
}  // namespace xsd

namespace rdf {
inline constexpr std::string_view ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const Iri& type();
const Iri& lang_string();
}  // namespace rdf

/// Literal value. Equality is (lexical, datatype, languageTag); no
/// value-space canonicalization, so "1.0" and "1.00" stay distinct.
struct Literal {
    std::string lexical;
    Iri datatype;          // defaults to xsd:string
    std::string language;  // empty unless datatype is rdf:langString

    Literal() : datatype(xsd::string_()) {}
    explicit Literal(std::string lex) : lexical(std::move(lex)), datatype(xsd::string_()) {}
    Literal(std::string lex, Iri dt) : lexical(std::move(lex)), datatype(std::move(dt)) {}
    static Literal lang(std::string lex, std::string tag);

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, BlankNode, Literal>;
using Resource = std::variant<Iri, BlankNode>;  // subject position

Term to_term(const Resource& r);
std::optional<Resource> to_resource(const Term& t);
bool is_literal(const Term& t);

struct Triple {
    Resource subject;
    Iri predicate;
    Term object;

    bool operator==(const Triple&) const = default;
};

// N-Triples rendering; also defines the deterministic sort order used
// throughout (indexes, match results, serializer).
std::string to_ntriples(const Iri& iri);
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Resource& r);
std::string to_ntriples(const Triple& t);

std::string escape_turtle_string(std::string_view s);

/// Validates a triple against the term invariants. Returns a reason on
/// failure, nullopt when well-formed.
std::optional<std::string> triple_malformed_reason(const Triple& t);

/// Prefix registry with stable registration order.
class PrefixMap {
public:
    /// Registers or rebinds a prefix. First registration fixes its
    /// position in the emission order.
    void register_prefix(std::string prefix, Iri ns);

    bool has_prefix(std::string_view prefix) const;
    std::optional<Iri> lookup(std::string_view prefix) const;

    /// Expands "prefix:local"; throws ParseError naming the prefix when
    /// it is not registered or the input is not a CURIE.
    Iri expand(std::string_view curie) const;

    /// Longest-namespace compression to "prefix:local"; nullopt when no
    /// namespace matches or the local part would not survive re-parsing.
    std::optional<std::string> compress(const Iri& iri) const;

    const std::vector<std::pair<std::string, Iri>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Copies every binding of `other` into this map (other's order).
    void merge(const PrefixMap& other);

private:
    std::vector<std::pair<std::string, Iri>> entries_;
};

/// True when `local` can be emitted as the local part of a prefixed name
/// and re-parsed identically by the Turtle subset.
bool is_safe_pname_local(std::string_view local);

using TermId = std::uint32_t;

/// Interning table mapping terms to dense ids; keeps each term's
/// N-Triples rendering for ordering.
class TermTable {
public:
    TermId intern(const Term& term);
    std::optional<TermId> find(const Term& term) const;
    const Term& term(TermId id) const { return terms_[id]; }
    const std::string& rendered(TermId id) const { return rendered_[id]; }
    std::size_t size() const { return terms_.size(); }

    TermTable() = default;
    TermTable(const TermTable&) = delete;
    TermTable& operator=(const TermTable&) = delete;

private:
    std::vector<Term> terms_;
    std::deque<std::string> rendered_;  // deque: element addresses stay stable
    std::unordered_map<std::string_view, TermId> lookup_;  // keys view into rendered_
};

/// In-memory triple set with SPO, POS, and OSP indexes. Construction is
/// single-writer; a finished graph is safe for concurrent reads.
class Graph {
public:
    Graph();
    Graph(const Graph& other);
    Graph& operator=(const Graph& other);
    Graph(Graph&&) noexcept = default;
    Graph& operator=(Graph&&) noexcept = default;

    /// Adds a triple; set semantics. Returns false when already present.
    /// Throws ParseError when the triple is malformed.
    bool insert(const Triple& t);

    void insert_all(const Graph& other);

    bool contains(const Triple& t) const;
    std::size_t size() const { return spo_.size(); }
    bool empty() const { return spo_.empty(); }

    /// Pattern match; unbound slots are wildcards. Results come in
    /// lexicographic N-Triples (s, p, o) order.
    std::vector<Triple> match(const std::optional<Term>& s = std::nullopt,
                              const std::optional<Iri>& p = std::nullopt,
                              const std::optional<Term>& o = std::nullopt) const;

    /// All triples in lexicographic order.
    std::vector<Triple> triples() const;

    /// Distinct subjects of (s, p, o) matches, lexicographic order.
    std::vector<Resource> subjects(const std::optional<Iri>& p = std::nullopt,
                                   const std::optional<Term>& o = std::nullopt) const;

    /// N-Triples lines, sorted; equality on graphs compares these.
    std::vector<std::string> to_ntriples_lines() const;

    bool operator==(const Graph& other) const;

private:
    struct Encoded {
        TermId s, p, o;
        bool operator==(const Encoded&) const = default;
    };
    enum class Order { SPO, POS, OSP };
    struct Probe;  // heterogeneous lookup key
    struct Cmp {
        using is_transparent = void;
        const TermTable* table;
        Order order;
        bool operator()(const Encoded& a, const Encoded& b) const;
        bool operator()(const Encoded& a, const Probe& b) const;
        bool operator()(const Probe& a, const Encoded& b) const;
    };
    using Index = std::set<Encoded, Cmp>;

    Triple decode(const Encoded& e) const;
    void rebuild_from(const Graph& other);

    std::unique_ptr<TermTable> terms_;
    Index spo_;
    Index pos_;
    Index osp_;
};

}  // namespace ocedforge
