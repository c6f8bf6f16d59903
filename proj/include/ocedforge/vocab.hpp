#pragma once

#include <string_view>
#include <utility>

#include "ocedforge/rdf.hpp"

namespace ocedforge {

namespace rdfs {
inline constexpr std::string_view ns = "http://www.w3.org/2000/01/rdf-schema#";
const Iri& sub_class_of();
const Iri& sub_property_of();
const Iri& domain();
const Iri& range();
const Iri& label();
const Iri& comment();
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view ns = "http://www.w3.org/2002/07/owl#";
const Iri& class_();
const Iri& object_property();
const Iri& datatype_property();
const Iri& disjoint_with();
}  // namespace owl

// OCEDO core: the first-class citizens and their fixed-semantics properties.
namespace oced {
inline constexpr std::string_view ns = "https://w3id.org/ocedo/core#";
const Iri& event();
const Iri& object();
const Iri& observed_at();
const Iri& event_attribute();
const Iri& object_attribute();
const Iri& object_relation();
}  // namespace oced

// OCEDO auxiliary: reified relation types and categorization classes.
namespace aux {
inline constexpr std::string_view ns = "https://w3id.org/ocedo/aux#";
const Iri& event_type();
const Iri& event_attribute();
const Iri& object_type();
const Iri& object_attribute();
const Iri& object_relation();
const Iri& observe();
const Iri& qualifier();
const Iri& from();
const Iri& to();
const Iri& event();
const Iri& object();
const Iri& has_object_attribute();
}  // namespace aux

/// The embedded OCEDO (core + auxiliary) document, byte-stable.
std::string_view ocedo_turtle();

/// The bundled BPIC 2013 extension document, byte-stable.
std::string_view bpic2013_ocedd_turtle();

/// Parsed builtin ontology; the references stay valid for the process
/// lifetime and are safe to read concurrently.
const Graph& ocedo_graph();
const PrefixMap& ocedo_prefixes();  // rdf, rdfs, owl, xsd, oced, aux

/// Fresh copies of the builtin ontology graph and prefix map.
std::pair<Graph, PrefixMap> builtin_ocedo();

}  // namespace ocedforge
