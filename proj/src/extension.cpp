#include "ocedforge/extension.hpp"

#include <algorithm>

#include "ocedforge/turtle.hpp"
#include "ocedforge/vocab.hpp"

namespace ocedforge {

std::string_view to_string(ConformanceCode code) {
    switch (code) {
        case ConformanceCode::SubclassCycle: return "SUBCLASS_CYCLE";
        case ConformanceCode::UnanchoredClass: return "UNANCHORED_CLASS";
        case ConformanceCode::UndeclaredReference: return "UNDECLARED_REFERENCE";
        case ConformanceCode::NonXsdRange: return "NON_XSD_RANGE";
        case ConformanceCode::MissingLabel: return "MISSING_LABEL";
        case ConformanceCode::UnalignedAttribute: return "UNALIGNED_ATTRIBUTE";
    }
    return "UNKNOWN";
}

std::size_t ConformanceReport::error_count() const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(),
                      [](const ConformanceFinding& f) { return f.severity == Severity::Error; }));
}

namespace {

std::string namespace_of(const Iri& iri) {
    auto hash = iri.value.rfind('#');
    if (hash != std::string::npos) return iri.value.substr(0, hash + 1);
    auto slash = iri.value.rfind('/');
    if (slash != std::string::npos) return iri.value.substr(0, slash + 1);
    return iri.value;
}

std::optional<Iri> object_iri(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return *iri;
    return std::nullopt;
}

std::string label_of(const Graph& g, const Iri& subject) {
    for (const auto& t : g.match(Term{subject}, rdfs::label())) {
        if (const auto* lit = std::get_if<Literal>(&t.object)) return lit->lexical;
    }
    return {};
}

}  // namespace

std::set<std::string> ExtensionModel::namespaces() const {
    std::set<std::string> out;
    for (const auto& [iri, _] : classes) out.insert(namespace_of(iri));
    for (const auto& [iri, _] : object_properties) out.insert(namespace_of(iri));
    for (const auto& [iri, _] : datatype_properties) out.insert(namespace_of(iri));
    if (auto ext = prefixes.lookup("ext")) out.insert(ext->value);
    return out;
}

ExtensionModel load_ocedd(std::string_view text, std::string source) {
    auto doc = parse_turtle(text, std::move(source));
    ExtensionModel model;
    model.prefixes = doc.prefixes;
    model.source = doc.graph;

    const Graph& g = model.source;
    for (const auto& t : g.match(std::nullopt, rdf::type(), Term{owl::class_()})) {
        if (const auto* iri = std::get_if<Iri>(&t.subject)) {
            ClassDecl decl;
            decl.label = label_of(g, *iri);
            for (const auto& sc : g.match(to_term(t.subject), rdfs::sub_class_of()))
                if (auto super = object_iri(sc.object)) decl.superclasses.insert(*super);
            model.classes.emplace(*iri, std::move(decl));
        }
    }

    auto load_property = [&](const Iri& kind, std::map<Iri, PropertyDecl>& into) {
        for (const auto& t : g.match(std::nullopt, rdf::type(), Term{kind})) {
            const auto* iri = std::get_if<Iri>(&t.subject);
            if (!iri) continue;
            PropertyDecl decl;
            decl.label = label_of(g, *iri);
            auto doms = g.match(to_term(t.subject), rdfs::domain());
            if (!doms.empty()) decl.domain = object_iri(doms.front().object);
            auto rngs = g.match(to_term(t.subject), rdfs::range());
            if (!rngs.empty()) decl.range = object_iri(rngs.front().object);
            for (const auto& sp : g.match(to_term(t.subject), rdfs::sub_property_of()))
                if (auto super = object_iri(sp.object)) decl.super_properties.insert(*super);
            into.emplace(*iri, std::move(decl));
        }
    };
    load_property(owl::object_property(), model.object_properties);
    load_property(owl::datatype_property(), model.datatype_properties);

    // Everything the model structure did not absorb stays available for
    // passthrough when re-emitting.
    static const std::vector<const Iri*> consumed_predicates = {
        &rdfs::sub_class_of(), &rdfs::sub_property_of(), &rdfs::domain(),
        &rdfs::range(),        &rdfs::label(),           &rdfs::comment()};
    for (const auto& t : g.triples()) {
        bool consumed = false;
        if (t.predicate == rdf::type()) {
            if (auto o = object_iri(t.object))
                consumed = *o == owl::class_() || *o == owl::object_property() ||
                           *o == owl::datatype_property();
        } else {
            for (const auto* p : consumed_predicates)
                if (t.predicate == *p) {
                    consumed = true;
                    break;
                }
        }
        if (!consumed) model.residual.insert(t);
    }
    return model;
}

namespace {

// Classes the builtin ontology provides as anchoring targets.
bool is_core_class(const Iri& iri, const Graph& ocedo) {
    return ocedo.contains(Triple{iri, rdf::type(), Term{owl::class_()}});
}

}  // namespace

ConformanceReport check_conformance(const ExtensionModel& ext, const Graph& ocedo) {
    ConformanceReport report;
    auto add = [&](Severity sev, ConformanceCode code, const Iri& subject, std::string msg) {
        report.findings.push_back({sev, code, subject, std::move(msg)});
    };

    // Subclass cycles, restricted to classes declared by the extension.
    std::set<Iri> on_cycle;
    for (const auto& [start, _] : ext.classes) {
        std::set<Iri> seen;
        std::vector<Iri> stack{start};
        bool cyclic = false;
        while (!stack.empty() && !cyclic) {
            Iri cur = stack.back();
            stack.pop_back();
            auto it = ext.classes.find(cur);
            if (it == ext.classes.end()) continue;
            for (const auto& super : it->second.superclasses) {
                if (super == start) {
                    cyclic = true;
                    break;
                }
                if (seen.insert(super).second) stack.push_back(super);
            }
        }
        if (cyclic) {
            on_cycle.insert(start);
            add(Severity::Error, ConformanceCode::SubclassCycle, start,
                "class is part of an rdfs:subClassOf cycle");
        }
    }

    // Anchoring: every declared class must reach oced:Event or oced:Object.
    for (const auto& [cls, decl] : ext.classes) {
        if (on_cycle.count(cls)) continue;
        std::set<Iri> seen{cls};
        std::vector<Iri> queue{cls};
        bool anchored = false;
        while (!queue.empty() && !anchored) {
            Iri cur = queue.back();
            queue.pop_back();
            if (cur == oced::event() || cur == oced::object()) {
                anchored = true;
                break;
            }
            auto it = ext.classes.find(cur);
            if (it == ext.classes.end()) continue;
            for (const auto& super : it->second.superclasses)
                if (seen.insert(super).second) queue.push_back(super);
        }
        if (!anchored)
            add(Severity::Error, ConformanceCode::UnanchoredClass, cls,
                "class does not reach oced:Event or oced:Object via rdfs:subClassOf");
        if (decl.label.empty())
            add(Severity::Warning, ConformanceCode::MissingLabel, cls,
                "class has no rdfs:label");
    }

    auto check_class_ref = [&](const Iri& prop, const std::optional<Iri>& ref,
                               const char* slot) {
        if (!ref) {
            add(Severity::Error, ConformanceCode::UndeclaredReference, prop,
                std::string("object property has no rdfs:") + slot);
            return;
        }
        if (!ext.declares_class(*ref) && !is_core_class(*ref, ocedo))
            add(Severity::Error, ConformanceCode::UndeclaredReference, prop,
                std::string(slot) + " references undeclared class <" + ref->value + ">");
    };

    for (const auto& [prop, decl] : ext.object_properties) {
        check_class_ref(prop, decl.domain, "domain");
        check_class_ref(prop, decl.range, "range");
        if (decl.label.empty())
            add(Severity::Warning, ConformanceCode::MissingLabel, prop,
                "property has no rdfs:label");
    }

    for (const auto& [prop, decl] : ext.datatype_properties) {
        if (!decl.range) {
            add(Severity::Error, ConformanceCode::NonXsdRange, prop,
                "datatype property has no rdfs:range");
        } else if (decl.range->value.rfind(std::string(xsd::ns), 0) != 0) {
            add(Severity::Error, ConformanceCode::NonXsdRange, prop,
                "range <" + decl.range->value + "> is not an XSD datatype");
        }
        if (decl.label.empty())
            add(Severity::Warning, ConformanceCode::MissingLabel, prop,
                "property has no rdfs:label");

        // transitive super-property lookup inside the document
        std::set<Iri> seen;
        std::vector<Iri> queue(decl.super_properties.begin(), decl.super_properties.end());
        bool aligned = false;
        while (!queue.empty()) {
            Iri cur = queue.back();
            queue.pop_back();
            if (cur == oced::event_attribute() || cur == oced::object_attribute()) {
                aligned = true;
                break;
            }
            if (!seen.insert(cur).second) continue;
            auto it = ext.datatype_properties.find(cur);
            if (it == ext.datatype_properties.end()) continue;
            for (const auto& super : it->second.super_properties) queue.push_back(super);
        }
        if (!aligned)
            add(Severity::Warning, ConformanceCode::UnalignedAttribute, prop,
                "datatype property is not a sub-property of oced:event_attribute or "
                "oced:object_attribute");
    }

    return report;
}

}  // namespace ocedforge
