#include "ocedforge/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ocedforge/reasoner.hpp"
#include "ocedforge/vocab.hpp"

namespace ocedforge {

std::string_view to_string(ValidationCode code) {
    switch (code) {
        case ValidationCode::DomainViolation: return "DOMAIN_VIOLATION";
        case ValidationCode::RangeViolation: return "RANGE_VIOLATION";
        case ValidationCode::DisjointTypes: return "DISJOINT_TYPES";
        case ValidationCode::UntypedResource: return "UNTYPED_RESOURCE";
        case ValidationCode::UnknownProperty: return "UNKNOWN_PROPERTY";
    }
    return "UNKNOWN";
}

std::size_t ValidationReport::error_count() const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(),
                      [](const ValidationFinding& f) { return f.severity == Severity::Error; }));
}

namespace {

enum AnchorMask : unsigned { kNone = 0, kEvent = 1, kObject = 2 };

std::string namespace_of(const Iri& iri) {
    auto hash = iri.value.rfind('#');
    if (hash != std::string::npos) return iri.value.substr(0, hash + 1);
    auto slash = iri.value.rfind('/');
    if (slash != std::string::npos) return iri.value.substr(0, slash + 1);
    return iri.value;
}

// Anchor roots of a class in the closed graph; the closure already holds
// transitive subclass edges, so one containment check per root suffices.
unsigned anchors_of(const Graph& closed, const Iri& cls) {
    unsigned mask = kNone;
    if (cls == oced::event() ||
        closed.contains(Triple{cls, rdfs::sub_class_of(), Term{oced::event()}}))
        mask |= kEvent;
    if (cls == oced::object() ||
        closed.contains(Triple{cls, rdfs::sub_class_of(), Term{oced::object()}}))
        mask |= kObject;
    return mask;
}

std::string short_name(const Iri& iri) {
    auto pos = iri.value.find_last_of("#/");
    return pos == std::string::npos ? iri.value : iri.value.substr(pos + 1);
}

}  // namespace

ValidationReport validate(const Graph& g, const Graph& ocedo, const ExtensionModel& ext) {
    ValidationReport report;

    Graph merged = g;
    merged.insert_all(ocedo);
    merged.insert_all(ext.source);
    Graph closed = rdfs_closure(merged);

    std::set<std::string> known_namespaces{std::string(rdf::ns), std::string(rdfs::ns),
                                           std::string(owl::ns), std::string(oced::ns),
                                           std::string(aux::ns)};
    for (const auto& ns : ext.namespaces()) known_namespaces.insert(ns);

    // types of a node under closure, with anchor masks
    auto type_anchor_mask = [&](const Term& node) {
        unsigned mask = kNone;
        for (const auto& t : closed.match(node, rdf::type())) {
            if (const auto* cls = std::get_if<Iri>(&t.object)) mask |= anchors_of(closed, *cls);
        }
        return mask;
    };

    std::set<std::string> reported_predicates;
    for (const auto& t : g.triples()) {
        const Iri& p = t.predicate;

        if (!known_namespaces.count(namespace_of(p)) &&
            reported_predicates.insert(p.value).second) {
            report.findings.push_back({Severity::Warning, ValidationCode::UnknownProperty, t,
                                       "predicate <" + p.value +
                                           "> is outside the known vocabulary namespaces"});
        }

        // domain side
        for (const auto& dom : closed.match(Term{p}, rdfs::domain())) {
            const auto* cls = std::get_if<Iri>(&dom.object);
            if (!cls) continue;
            unsigned want = anchors_of(closed, *cls);
            if (want != kEvent && want != kObject) continue;  // unanchored or ambiguous
            unsigned have = type_anchor_mask(to_term(t.subject));
            unsigned other = want == kEvent ? kObject : kEvent;
            if (have & other) {
                report.findings.push_back(
                    {Severity::Error, ValidationCode::DomainViolation, t,
                     "subject of " + short_name(p) + " must anchor to " +
                         (want == kEvent ? "oced:Event" : "oced:Object") +
                         " (domain " + short_name(*cls) + ") but is typed the opposite"});
            }
        }

        // range side (literals carry no type)
        if (auto obj = to_resource(t.object)) {
            for (const auto& rng : closed.match(Term{p}, rdfs::range())) {
                const auto* cls = std::get_if<Iri>(&rng.object);
                if (!cls) continue;
                unsigned want = anchors_of(closed, *cls);
                if (want != kEvent && want != kObject) continue;
                unsigned have = type_anchor_mask(t.object);
                unsigned other = want == kEvent ? kObject : kEvent;
                if (have & other) {
                    report.findings.push_back(
                        {Severity::Error, ValidationCode::RangeViolation, t,
                         "object of " + short_name(p) + " must anchor to " +
                             (want == kEvent ? "oced:Event" : "oced:Object") +
                             " (range " + short_name(*cls) + ") but is typed the opposite"});
                }
            }
        }
    }

    // disjointness of the two roots, over every node the graph mentions
    std::set<std::string> seen_nodes;
    auto check_disjoint = [&](const Term& node) {
        std::string key = to_ntriples(node);
        if (!seen_nodes.insert(key).second) return;
        bool is_event = closed.contains(Triple{*to_resource(node), rdf::type(),
                                               Term{oced::event()}});
        bool is_object = closed.contains(Triple{*to_resource(node), rdf::type(),
                                                Term{oced::object()}});
        if (is_event && is_object) {
            report.findings.push_back({Severity::Error, ValidationCode::DisjointTypes,
                                       std::nullopt,
                                       key + " is typed both oced:Event and oced:Object, "
                                             "which are disjoint"});
        }
    };
    for (const auto& t : g.triples()) {
        check_disjoint(to_term(t.subject));
        if (!is_literal(t.object)) check_disjoint(t.object);
    }

    // untyped subjects (warning)
    std::set<std::string> seen_subjects;
    for (const auto& t : g.triples()) {
        std::string key = to_ntriples(t.subject);
        if (!seen_subjects.insert(key).second) continue;
        if (closed.match(to_term(t.subject), rdf::type()).empty()) {
            report.findings.push_back({Severity::Warning, ValidationCode::UntypedResource,
                                       std::nullopt,
                                       key + " has no rdf:type after closure"});
        }
    }

    return report;
}

GraphStats stats(const Graph& g, const ExtensionModel* ext) {
    GraphStats out;
    out.triples = g.size();

    auto event_nodes = g.subjects(rdf::type(), Term{oced::event()});
    auto object_nodes = g.subjects(rdf::type(), Term{oced::object()});
    out.events = event_nodes.size();
    out.objects = object_nodes.size();

    auto count_subclasses = [&](const std::vector<Resource>& nodes, const Iri& root) {
        std::set<std::string> classes;
        for (const auto& n : nodes) {
            for (const auto& t : g.match(to_term(n), rdf::type())) {
                if (const auto* cls = std::get_if<Iri>(&t.object)) {
                    if (!(*cls == root)) classes.insert(cls->value);
                }
            }
        }
        return classes.size();
    };
    out.event_subclasses = count_subclasses(event_nodes, oced::event());
    out.object_subclasses = count_subclasses(object_nodes, oced::object());

    if (ext) {
        // declared object-object properties
        auto anchored_to_object = [&](const Iri& cls) {
            if (cls == oced::object()) return true;
            std::set<Iri> seen{cls};
            std::vector<Iri> queue{cls};
            while (!queue.empty()) {
                Iri cur = queue.back();
                queue.pop_back();
                if (cur == oced::object()) return true;
                auto it = ext->classes.find(cur);
                if (it == ext->classes.end()) continue;
                for (const auto& super : it->second.superclasses)
                    if (seen.insert(super).second) queue.push_back(super);
            }
            return false;
        };
        for (const auto& [prop, decl] : ext->object_properties) {
            if (decl.domain && decl.range && anchored_to_object(*decl.domain) &&
                anchored_to_object(*decl.range))
                out.object_relation_triples += g.match(std::nullopt, prop).size();
        }
    } else {
        std::set<std::string> object_keys;
        for (const auto& n : object_nodes) object_keys.insert(to_ntriples(n));
        for (const auto& t : g.triples()) {
            if (t.predicate == rdf::type() || is_literal(t.object)) continue;
            if (object_keys.count(to_ntriples(t.subject)) &&
                object_keys.count(to_ntriples(t.object)))
                ++out.object_relation_triples;
        }
    }

    std::set<std::string> event_keys;
    for (const auto& n : event_nodes) event_keys.insert(to_ntriples(n));
    for (const auto& t : g.triples()) {
        if (!is_literal(t.object) || t.predicate == oced::observed_at()) continue;
        if (event_keys.count(to_ntriples(t.subject))) ++out.event_attribute_triples;
    }

    return out;
}

}  // namespace ocedforge
