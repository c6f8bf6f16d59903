#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocedforge/descriptor.hpp"
#include "ocedforge/extension.hpp"
#include "ocedforge/rdf.hpp"
#include "ocedforge/xes.hpp"

namespace ocedforge {

/// Canonical identity string for an object: class CURIE and `key=value`
/// entries joined by U+001F, keys in descriptor identity order. Throws
/// std::invalid_argument on an empty pair list.
std::string canonical_identity(
    const std::string& object_class_curie,
    const std::vector<std::pair<std::string, std::string>>& pairs);

/// `<namespace>object-o_` plus the 40-hex SHA-1 of the canonical identity.
Iri mint_object_iri(const Descriptor& d, const std::string& object_class_curie,
                    const std::vector<std::pair<std::string, std::string>>& pairs);

/// `<namespace>event-e_` plus the 40-hex SHA-1 of
/// sourceName U+001F traceIndex U+001F eventIndex.
Iri mint_event_iri(const Descriptor& d, std::string_view source_name,
                   std::size_t trace_index, std::size_t event_index);

struct ConversionStats {
    std::size_t events_in = 0;
    std::size_t events_converted = 0;
    std::size_t events_skipped = 0;
    std::size_t distinct_objects = 0;
    std::size_t triple_count = 0;
    std::size_t skipped_objects = 0;             // identity-missing occurrences
    std::vector<std::string> unmapped_keys;      // distinct, sorted
    std::vector<Diagnostic> findings;

    bool has_errors() const;
};

struct ConversionResult {
    Graph graph;
    PrefixMap prefixes;  // rdf, rdfs, owl, xsd, oced, aux, ext..., res
    ConversionStats stats;
};

/// Converts an XES log into an OCEDR instance graph under the given
/// descriptor and extension. Pure function of its inputs: repeated runs
/// and trace permutations yield the same triple set. In strict mode an
/// unparseable timestamp is recorded as an error finding (the event is
/// skipped either way).
ConversionResult convert(const XesLog& log, const Descriptor& d,
                         const ExtensionModel& ext, bool strict = false);

}  // namespace ocedforge
