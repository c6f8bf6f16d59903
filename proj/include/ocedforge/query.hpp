#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocedforge/rdf.hpp"

namespace ocedforge {

struct Variable {
    std::string name;  // without the '?'

    bool operator==(const Variable&) const = default;
    auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
};

/// Join solutions over a basic graph pattern. `variables` lists the
/// query's variables in first-occurrence order; solutions are sorted by
/// their rendered bindings.
struct BindingSet {
    std::vector<std::string> variables;
    std::vector<std::map<std::string, Term>> solutions;
};

/// Natural join of the per-pattern matches; result is independent of
/// pattern order. A variable-free query yields one empty solution when
/// every pattern is present, none otherwise.
BindingSet bgp_query(const Graph& g, const std::vector<TriplePattern>& patterns);

/// Query text: one pattern per line; terms as CURIEs, <IRI>s, quoted
/// literals (with optional ^^type or @lang), or ?var. '#' starts a
/// comment. Throws ParseError on bad syntax or unknown prefixes.
std::vector<TriplePattern> parse_query(std::string_view text, const PrefixMap& prefixes,
                                       std::string source = {});

/// TSV rendering: header row of variable names, terms in N-Triples form.
std::string to_tsv(const BindingSet& bindings);

}  // namespace ocedforge
