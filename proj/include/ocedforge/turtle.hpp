#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ocedforge/rdf.hpp"

namespace ocedforge {

struct TurtleDocument {
    Graph graph;
    PrefixMap prefixes;
};

/// Parses the supported Turtle subset: @prefix/PREFIX, <IRI>s, prefixed
/// names, 'a', ';' predicate lists, ',' object lists, typed/tagged string
/// literals, numeric/boolean shorthand, labeled blank nodes, '#' comments.
/// Collections and anonymous property lists are rejected as unsupported.
/// Throws ParseError with line/column on any failure.
TurtleDocument parse_turtle(std::string_view text, std::string source = {});
TurtleDocument parse_turtle(std::istream& in, std::string source = {});

/// Deterministic serialization: prefixes in registration order, subjects
/// sorted lexicographically, rdf:type hoisted first and emitted as 'a',
/// remaining predicates and objects sorted. Output bytes depend only on
/// the triple set and prefix registration order.
std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes);

}  // namespace ocedforge
