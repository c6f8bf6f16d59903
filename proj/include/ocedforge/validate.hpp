#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocedforge/extension.hpp"
#include "ocedforge/rdf.hpp"

namespace ocedforge {

enum class ValidationCode {
    DomainViolation,
    RangeViolation,
    DisjointTypes,
    UntypedResource,
    UnknownProperty,
};

std::string_view to_string(ValidationCode code);

struct ValidationFinding {
    Severity severity;
    ValidationCode code;
    std::optional<Triple> triple;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;

    bool valid() const { return error_count() == 0; }
    std::size_t error_count() const;
};

/// Semantic validation of an OCEDR graph against OCEDO plus an extension.
/// Works on the RDFS closure of g ∪ ocedo ∪ extension document:
/// DISJOINT_TYPES for nodes typed both oced:Event and oced:Object;
/// DOMAIN_VIOLATION / RANGE_VIOLATION when a property anchors one way and
/// the node's types anchor the other; UNKNOWN_PROPERTY (warning) for
/// predicates outside the known namespaces; UNTYPED_RESOURCE (warning)
/// for subjects with no type after closure.
ValidationReport validate(const Graph& g, const Graph& ocedo, const ExtensionModel& ext);

struct GraphStats {
    std::size_t triples = 0;
    std::size_t events = 0;
    std::size_t objects = 0;
    std::size_t event_subclasses = 0;
    std::size_t object_subclasses = 0;
    std::size_t object_relation_triples = 0;
    std::size_t event_attribute_triples = 0;
};

/// Corpus statistics. With an extension model, object-object relation
/// triples are counted by declared property; without one, by the types
/// of the endpoints.
GraphStats stats(const Graph& g, const ExtensionModel* ext = nullptr);

}  // namespace ocedforge
