#include "ocedforge/vocab.hpp"

namespace ocedforge {

// Canonical OCEDO document. Do not reformat: the bytes are part of the
// published interface.
static constexpr std::string_view kOcedoTurtle = R"ttl(@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix oced: <https://w3id.org/ocedo/core#> .
@prefix aux: <https://w3id.org/ocedo/aux#> .

# OCEDO core

oced:Event a owl:Class ;
    rdfs:label "Event" ;
    rdfs:comment "A point-in-time occurrence of an action." .

oced:Object a owl:Class ;
    rdfs:label "Object" ;
    rdfs:comment "An entity whose creation, change, deletion, or reading an event may report." .

oced:Event owl:disjointWith oced:Object .

oced:observed_at a owl:DatatypeProperty ;
    rdfs:label "observed at" ;
    rdfs:comment "The instant at which the event was registered." ;
    rdfs:domain oced:Event ;
    rdfs:range xsd:dateTime .

oced:event_attribute a owl:DatatypeProperty ;
    rdfs:label "event attribute" ;
    rdfs:comment "Generic name-value attribute of an event." ;
    rdfs:domain oced:Event ;
    rdfs:range xsd:string .

oced:object_attribute a owl:DatatypeProperty ;
    rdfs:label "object attribute" ;
    rdfs:comment "Generic name-value attribute of an object." ;
    rdfs:domain oced:Object ;
    rdfs:range xsd:string .

oced:object_relation a owl:ObjectProperty ;
    rdfs:label "object relation" ;
    rdfs:comment "Generic typed link between two objects." ;
    rdfs:domain oced:Object ;
    rdfs:range oced:Object .

# OCEDO auxiliary

aux:EventType a owl:Class ;
    rdfs:label "Event type" .

aux:EventAttribute a owl:Class ;
    rdfs:label "Event attribute" .

aux:ObjectType a owl:Class ;
    rdfs:label "Object type" .

aux:ObjectAttribute a owl:Class ;
    rdfs:label "Object attribute" .

aux:ObjectRelation a owl:Class ;
    rdfs:label "Object relation" ;
    rdfs:comment "Reified relation between two objects." .

aux:Observe a owl:Class ;
    rdfs:label "Observe" ;
    rdfs:comment "Reified observation of an object by an event." .

aux:from a owl:ObjectProperty ;
    rdfs:label "from" ;
    rdfs:domain aux:ObjectRelation ;
    rdfs:range oced:Object .

aux:to a owl:ObjectProperty ;
    rdfs:label "to" ;
    rdfs:domain aux:ObjectRelation ;
    rdfs:range oced:Object .

aux:event a owl:ObjectProperty ;
    rdfs:label "event" ;
    rdfs:domain aux:Observe ;
    rdfs:range oced:Event .

aux:object a owl:ObjectProperty ;
    rdfs:label "object" ;
    rdfs:domain aux:Observe ;
    rdfs:range oced:Object .

aux:qualifier a owl:DatatypeProperty ;
    rdfs:label "qualifier" ;
    rdfs:comment "Clarifies in which way an event observes an object." ;
    rdfs:domain aux:Observe ;
    rdfs:range xsd:string .

aux:has_object_attribute a owl:ObjectProperty ;
    rdfs:label "has object attribute" ;
    rdfs:domain oced:Object ;
    rdfs:range aux:ObjectAttribute .
)ttl";

// Bundled domain extension for the BPIC 2013 incident-management log.
static constexpr std::string_view kBpic2013Ocedd = R"ttl(@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix oced: <https://w3id.org/ocedo/core#> .
@prefix aux: <https://w3id.org/ocedo/aux#> .
@prefix ext: <https://w3id.org/ocedd/bpic2013#> .

ext:BPIC2013Event a owl:Class ;
    rdfs:label "BPIC 2013 event" ;
    rdfs:subClassOf oced:Event .

ext:BPIC2013Object a owl:Class ;
    rdfs:label "BPIC 2013 object" ;
    rdfs:subClassOf oced:Object .

# Event types

ext:Close_Incident a owl:Class ;
    rdfs:label "Close incident" ;
    rdfs:subClassOf ext:BPIC2013Event .

# Object types

ext:Incident a owl:Class ;
    rdfs:label "Incident" ;
    rdfs:subClassOf ext:BPIC2013Object .

ext:TeamMember a owl:Class ;
    rdfs:label "Team member" ;
    rdfs:subClassOf ext:BPIC2013Object .

ext:SupportTeam a owl:Class ;
    rdfs:label "Support team" ;
    rdfs:subClassOf ext:BPIC2013Object .

ext:Product a owl:Class ;
    rdfs:label "Product" ;
    rdfs:subClassOf ext:BPIC2013Object .

# Event-to-object and object-to-object relations

ext:pertains_to a owl:ObjectProperty ;
    rdfs:label "pertains to" ;
    rdfs:domain oced:Event ;
    rdfs:range ext:Incident .

ext:is_handled_by a owl:ObjectProperty ;
    rdfs:label "is handled by" ;
    rdfs:domain oced:Event ;
    rdfs:range ext:TeamMember .

ext:works_in a owl:ObjectProperty ;
    rdfs:label "works in" ;
    rdfs:domain ext:TeamMember ;
    rdfs:range ext:SupportTeam .

ext:is_about_product a owl:ObjectProperty ;
    rdfs:label "is about product" ;
    rdfs:domain ext:Incident ;
    rdfs:range ext:Product .

# Event attributes

ext:status a owl:DatatypeProperty ;
    rdfs:label "status" ;
    rdfs:subPropertyOf oced:event_attribute ;
    rdfs:domain oced:Event ;
    rdfs:range xsd:string .

ext:substatus a owl:DatatypeProperty ;
    rdfs:label "substatus" ;
    rdfs:subPropertyOf oced:event_attribute ;
    rdfs:domain oced:Event ;
    rdfs:range xsd:string .

# Object attributes

ext:ticket_number a owl:DatatypeProperty ;
    rdfs:label "ticket number" ;
    rdfs:subPropertyOf oced:object_attribute ;
    rdfs:domain ext:Incident ;
    rdfs:range xsd:string .

ext:name a owl:DatatypeProperty ;
    rdfs:label "name" ;
    rdfs:subPropertyOf oced:object_attribute ;
    rdfs:domain ext:TeamMember ;
    rdfs:range xsd:string .

ext:team a owl:DatatypeProperty ;
    rdfs:label "team" ;
    rdfs:subPropertyOf oced:object_attribute ;
    rdfs:domain ext:SupportTeam ;
    rdfs:range xsd:string .

ext:product_number a owl:DatatypeProperty ;
    rdfs:label "product number" ;
    rdfs:subPropertyOf oced:object_attribute ;
    rdfs:domain ext:Product ;
    rdfs:range xsd:string .
)ttl";

std::string_view ocedo_turtle() { return kOcedoTurtle; }
std::string_view bpic2013_ocedd_turtle() { return kBpic2013Ocedd; }

}  // namespace ocedforge
