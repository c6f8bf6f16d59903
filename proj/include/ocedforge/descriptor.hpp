#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocedforge/rdf.hpp"

namespace ocedforge {

struct EventTypeRule {
    std::vector<std::pair<std::string, std::string>> match;  // sourceKey = value, all must hold
    std::string event_class_curie;
    Iri event_class;
};

struct AttributeRule {
    std::string source_key;
    std::string property_curie;
    Iri property;
    Iri datatype;  // xsd:string when the column is empty
};

enum class GroupScope { Event, Trace };

struct ObjectGroup {
    std::string id;
    std::string class_curie;
    Iri object_class;
    std::optional<Iri> link_property;  // event -> object, absent for unlinked groups
    GroupScope scope = GroupScope::Event;
    std::vector<std::string> identity_keys;  // row order = identity order
    std::vector<AttributeRule> attribute_rules;
};

struct ObjectRelationRule {
    std::string from_group;
    std::string to_group;
    Iri property;
};

/// Tabular mapping rules from XES keys to OCEDO/OCEDD concepts.
struct Descriptor {
    Iri resource_namespace{"https://w3id.org/ocedr/res#"};
    std::vector<EventTypeRule> event_type_rules;
    std::optional<std::string> timestamp_key;
    std::vector<AttributeRule> event_attribute_rules;
    std::vector<ObjectGroup> object_groups;
    std::vector<ObjectRelationRule> object_relations;

    const ObjectGroup* find_group(std::string_view id) const;
};

/// Parses the descriptor CSV (header `directive,group,source,target,
/// datatype,extra`, RFC 4180 quoting). CURIEs are resolved against
/// `prefixes` (OCEDO plus the extension document). Throws ParseError
/// with the offending row number.
Descriptor parse_descriptor(std::string_view csv, const PrefixMap& prefixes,
                            std::string source = {});

/// RFC 4180 row reader used by parse_descriptor; exposed for tests.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace ocedforge
