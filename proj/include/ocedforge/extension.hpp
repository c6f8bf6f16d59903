#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ocedforge/rdf.hpp"

namespace ocedforge {

enum class ConformanceCode {
    SubclassCycle,
    UnanchoredClass,
    UndeclaredReference,
    NonXsdRange,
    MissingLabel,
    UnalignedAttribute,
};

std::string_view to_string(ConformanceCode code);

struct ConformanceFinding {
    Severity severity;
    ConformanceCode code;
    Iri subject;
    std::string message;
};

struct ConformanceReport {
    std::vector<ConformanceFinding> findings;

    bool conformant() const { return error_count() == 0; }
    std::size_t error_count() const;
};

struct ClassDecl {
    std::set<Iri> superclasses;
    std::string label;
};

struct PropertyDecl {
    std::optional<Iri> domain;
    std::optional<Iri> range;
    std::set<Iri> super_properties;
    std::string label;
};

/// Parsed OCEDD extension document, anchored to OCEDO.
struct ExtensionModel {
    std::map<Iri, ClassDecl> classes;
    std::map<Iri, PropertyDecl> object_properties;
    std::map<Iri, PropertyDecl> datatype_properties;
    PrefixMap prefixes;
    Graph source;    // the full document graph
    Graph residual;  // triples not consumed by the model, kept for passthrough

    bool declares_class(const Iri& iri) const { return classes.count(iri) > 0; }
    bool declares_property(const Iri& iri) const {
        return object_properties.count(iri) > 0 || datatype_properties.count(iri) > 0;
    }

    /// Namespaces of the declared extension terms (used by validation to
    /// decide which predicates count as known).
    std::set<std::string> namespaces() const;
};

/// Loads an OCEDD document from Turtle text. Throws ParseError on syntax
/// errors; structural problems are left for check_conformance.
ExtensionModel load_ocedd(std::string_view text, std::string source = {});

/// Checks an extension against the builtin ontology: subclass cycles,
/// anchoring to oced:Event/oced:Object, declared domains/ranges, XSD
/// ranges on datatype properties; label and attribute-alignment warnings.
ConformanceReport check_conformance(const ExtensionModel& ext, const Graph& ocedo);

}  // namespace ocedforge
