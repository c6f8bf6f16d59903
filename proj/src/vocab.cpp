#include "ocedforge/vocab.hpp"

#include "ocedforge/turtle.hpp"

namespace ocedforge {

#define OCEDFORGE_IRI(space, fn, local)               \
    const Iri& fn() {                                 \
        static const Iri iri{std::string(space) + local}; \
        return iri;                                   \
    }

namespace rdfs {
OCEDFORGE_IRI(ns, sub_class_of, "subClassOf")
OCEDFORGE_IRI(ns, sub_property_of, "subPropertyOf")
OCEDFORGE_IRI(ns, domain, "domain")
OCEDFORGE_IRI(ns, range, "range")
OCEDFORGE_IRI(ns, label, "label")
OCEDFORGE_IRI(ns, comment, "comment")
}  // namespace rdfs

namespace owl {
OCEDFORGE_IRI(ns, class_, "Class")
OCEDFORGE_IRI(ns, object_property, "ObjectProperty")
OCEDFORGE_IRI(ns, datatype_property, "DatatypeProperty")
OCEDFORGE_IRI(ns, disjoint_with, "disjointWith")
}  // namespace owl

namespace oced {
OCEDFORGE_IRI(ns, event, "Event")
OCEDFORGE_IRI(ns, object, "Object")
OCEDFORGE_IRI(ns, observed_at, "observed_at")
OCEDFORGE_IRI(ns, event_attribute, "event_attribute")
OCEDFORGE_IRI(ns, object_attribute, "object_attribute")
OCEDFORGE_IRI(ns, object_relation, "object_relation")
}  // namespace oced

namespace aux {
OCEDFORGE_IRI(ns, event_type, "EventType")
OCEDFORGE_IRI(ns, event_attribute, "EventAttribute")
OCEDFORGE_IRI(ns, object_type, "ObjectType")
OCEDFORGE_IRI(ns, object_attribute, "ObjectAttribute")
OCEDFORGE_IRI(ns, object_relation, "ObjectRelation")
OCEDFORGE_IRI(ns, observe, "Observe")
OCEDFORGE_IRI(ns, qualifier, "qualifier")
OCEDFORGE_IRI(ns, from, "from")
OCEDFORGE_IRI(ns, to, "to")
OCEDFORGE_IRI(ns, event, "event")
OCEDFORGE_IRI(ns, object, "object")
OCEDFORGE_IRI(ns, has_object_attribute, "has_object_attribute")
}  // namespace aux

#undef OCEDFORGE_IRI

namespace {
const TurtleDocument& builtin_document() {
    static const TurtleDocument doc = parse_turtle(ocedo_turtle(), "ocedo.ttl");
    return doc;
}
}  // namespace

const Graph& ocedo_graph() { return builtin_document().graph; }
const PrefixMap& ocedo_prefixes() { return builtin_document().prefixes; }

std::pair<Graph, PrefixMap> builtin_ocedo() {
    return {ocedo_graph(), ocedo_prefixes()};
}

}  // namespace ocedforge
