#include "ocedforge/mapper.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ocedforge/datetime.hpp"
#include "ocedforge/sha1.hpp"
#include "ocedforge/vocab.hpp"

namespace ocedforge {

namespace {
constexpr char kUnitSeparator = '\x1f';
}

bool ConversionStats::has_errors() const {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string canonical_identity(
    const std::string& object_class_curie,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("canonical_identity requires at least one identity pair");
    std::string out = object_class_curie;
    for (const auto& [key, value] : pairs) {
        out += kUnitSeparator;
        out += key;
        out += '=';
        out += value;
    }
    return out;
}

Iri mint_object_iri(const Descriptor& d, const std::string& object_class_curie,
                    const std::vector<std::pair<std::string, std::string>>& pairs) {
    return Iri{d.resource_namespace.value + "object-o_" +
               sha1_hex(canonical_identity(object_class_curie, pairs))};
}

Iri mint_event_iri(const Descriptor& d, std::string_view source_name,
                   std::size_t trace_index, std::size_t event_index) {
    std::string key{source_name};
    key += kUnitSeparator;
    key += std::to_string(trace_index);
    key += kUnitSeparator;
    key += std::to_string(event_index);
    return Iri{d.resource_namespace.value + "event-e_" + sha1_hex(key)};
}

namespace {

void append_attribute_key(std::string& key, const XesAttribute& a) {
    key += '\x1e';
    key += xes_element_name(a.type);
    key += '\x1f';
    key += a.key;
    key += '\x1f';
    key += a.value;
    for (const auto& child : a.children) append_attribute_key(key, child);
    key += '\x1d';
}

std::string canonical_trace_key(const XesTrace& trace) {
    std::string key;
    for (const auto& a : trace.attributes) append_attribute_key(key, a);
    for (const auto& event : trace.events) {
        key += '\x1c';
        for (const auto& a : event.attributes) append_attribute_key(key, a);
    }
    return key;
}

class Converter {
public:
    Converter(const XesLog& log, const Descriptor& d, const ExtensionModel& ext, bool strict)
        : log_(log), d_(d), ext_(ext), strict_(strict) {}

    ConversionResult run() {
        build_prefixes();
        collect_mapped_keys();

        // Traces are ranked by their content so that the minted event
        // identifiers, and hence the whole graph, do not depend on the
        // order traces appear in the document.
        std::vector<std::size_t> order(log_.traces.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::vector<std::string> keys;
        keys.reserve(order.size());
        for (const auto& trace : log_.traces) keys.push_back(canonical_trace_key(trace));
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

        for (std::size_t rank = 0; rank < order.size(); ++rank)
            convert_trace(log_.traces[order[rank]], rank);

        result_.stats.distinct_objects = objects_by_identity_.size();
        result_.stats.triple_count = result_.graph.size();
        result_.stats.unmapped_keys.assign(unmapped_.begin(), unmapped_.end());
        return std::move(result_);
    }

private:
    void build_prefixes() {
        PrefixMap& pm = result_.prefixes;
        pm.merge(ocedo_prefixes());  // rdf, rdfs, owl, xsd, oced, aux
        for (const auto& [prefix, ns] : ext_.prefixes.entries())
            if (!pm.has_prefix(prefix)) pm.register_prefix(prefix, ns);
        pm.register_prefix("res", d_.resource_namespace);
    }

    void collect_mapped_keys() {
        if (d_.timestamp_key) mapped_keys_.insert(*d_.timestamp_key);
        for (const auto& rule : d_.event_attribute_rules) mapped_keys_.insert(rule.source_key);
        for (const auto& rule : d_.event_type_rules)
            for (const auto& [k, _] : rule.match) mapped_keys_.insert(k);
        for (const auto& g : d_.object_groups) {
            if (g.scope != GroupScope::Event) continue;
            for (const auto& k : g.identity_keys) mapped_keys_.insert(k);
            for (const auto& rule : g.attribute_rules) mapped_keys_.insert(rule.source_key);
        }
    }

    void note(Severity sev, std::string message) {
        result_.stats.findings.push_back({sev, std::move(message), log_.source_name, 0, 0});
    }

    /// Mints (or reuses) the group's object for the given attribute set;
    /// asserts typing and attribute triples. Returns nullopt when an
    /// identity value is missing.
    std::optional<Iri> bind_object(const ObjectGroup& group,
                                   const std::vector<XesAttribute>& attrs,
                                   const std::string& where) {
        std::vector<std::pair<std::string, std::string>> pairs;
        pairs.reserve(group.identity_keys.size());
        for (const auto& key : group.identity_keys) {
            const XesAttribute* a = nullptr;
            for (const auto& cand : attrs)
                if (cand.key == key) {
                    a = &cand;
                    break;
                }
            if (!a) {
                ++result_.stats.skipped_objects;
                note(Severity::Warning, "object group '" + group.id +
                                            "' skipped at " + where +
                                            ": identity key '" + key + "' missing");
                return std::nullopt;
            }
            pairs.emplace_back(key, a->value);
        }

        std::string identity = canonical_identity(group.class_curie, pairs);
        auto [it, fresh] = objects_by_identity_.try_emplace(identity, Iri{});
        if (fresh) it->second = mint_object_iri(d_, group.class_curie, pairs);
        const Iri& node = it->second;

        result_.graph.insert(Triple{node, rdf::type(), Term{oced::object()}});
        result_.graph.insert(Triple{node, rdf::type(), Term{group.object_class}});
        for (const auto& rule : group.attribute_rules) {
            for (const auto& cand : attrs) {
                if (cand.key != rule.source_key) continue;
                add_literal(node, rule, cand.value, where);
                break;
            }
        }
        return node;
    }

    void add_literal(const Iri& subject, const AttributeRule& rule, const std::string& value,
                     const std::string& where) {
        if (rule.datatype == xsd::date_time() && !parse_iso8601(value)) {
            note(Severity::Warning, "value '" + value + "' for " + rule.property_curie +
                                        " at " + where + " is not a valid xsd:dateTime; "
                                        "triple dropped");
            return;
        }
        result_.graph.insert(
            Triple{subject, rule.property, Term{Literal{value, rule.datatype}}});
    }

    void convert_trace(const XesTrace& trace, std::size_t ti) {
        std::map<std::string, Iri> trace_bindings;
        for (const auto& group : d_.object_groups) {
            if (group.scope != GroupScope::Trace) continue;
            auto node =
                bind_object(group, trace.attributes, "trace " + std::to_string(ti));
            if (node) trace_bindings.emplace(group.id, *node);
        }

        for (std::size_t ei = 0; ei < trace.events.size(); ++ei) {
            ++result_.stats.events_in;
            convert_event(ti, ei, trace.events[ei], trace_bindings);
        }
    }

    void convert_event(std::size_t ti, std::size_t ei, const XesEvent& event,
                       const std::map<std::string, Iri>& trace_bindings) {
        std::string where = "trace " + std::to_string(ti) + ", event " + std::to_string(ei);

        for (const auto& attr : event.attributes)
            if (!mapped_keys_.count(attr.key)) unmapped_.insert(attr.key);

        // The timestamp gate comes first: an event without a readable
        // instant is skipped entirely.
        std::string timestamp;
        if (d_.timestamp_key) {
            const auto* ts = event.find(*d_.timestamp_key);
            if (!ts || !parse_iso8601(ts->value)) {
                ++result_.stats.events_skipped;
                note(strict_ ? Severity::Error : Severity::Warning,
                     "event skipped at " + where + ": timestamp '" +
                         (ts ? ts->value : std::string("<missing>")) +
                         "' is not ISO-8601 with offset");
                return;
            }
            timestamp = ts->value;
        }

        Iri e = mint_event_iri(d_, log_.source_name, ti, ei);
        result_.graph.insert(Triple{e, rdf::type(), Term{oced::event()}});

        const EventTypeRule* matched = nullptr;
        for (const auto& rule : d_.event_type_rules) {
            bool all = true;
            for (const auto& [key, expected] : rule.match) {
                const auto* a = event.find(key);
                if (!a || a->value != expected) {
                    all = false;
                    break;
                }
            }
            if (all) {
                matched = &rule;
                break;
            }
        }
        if (matched) {
            result_.graph.insert(Triple{e, rdf::type(), Term{matched->event_class}});
        } else if (!d_.event_type_rules.empty()) {
            note(Severity::Warning,
                 "no event_type rule matched " + where + "; typed oced:Event only");
        }

        if (!timestamp.empty())
            result_.graph.insert(Triple{e, oced::observed_at(),
                                        Term{Literal{timestamp, xsd::date_time()}}});

        for (const auto& rule : d_.event_attribute_rules) {
            const auto* a = event.find(rule.source_key);
            if (a) add_literal(e, rule, a->value, where);
        }

        std::map<std::string, Iri> bindings = trace_bindings;
        for (const auto& group : d_.object_groups) {
            if (group.scope != GroupScope::Event) continue;
            auto node = bind_object(group, event.attributes, where);
            if (node) bindings.emplace(group.id, *node);
        }

        for (const auto& [gid, node] : bindings) {
            const ObjectGroup* group = d_.find_group(gid);
            if (group && group->link_property)
                result_.graph.insert(Triple{e, *group->link_property, Term{node}});
        }

        for (const auto& rel : d_.object_relations) {
            auto from = bindings.find(rel.from_group);
            auto to = bindings.find(rel.to_group);
            if (from != bindings.end() && to != bindings.end())
                result_.graph.insert(
                    Triple{from->second, rel.property, Term{to->second}});
        }

        ++result_.stats.events_converted;
    }

    const XesLog& log_;
    const Descriptor& d_;
    const ExtensionModel& ext_;
    bool strict_;

    ConversionResult result_;
    std::map<std::string, Iri> objects_by_identity_;
    std::set<std::string> mapped_keys_;
    std::set<std::string> unmapped_;
};

}  // namespace

ConversionResult convert(const XesLog& log, const Descriptor& d, const ExtensionModel& ext,
                         bool strict) {
    Converter converter(log, d, ext, strict);
    return converter.run();
}

}  // namespace ocedforge
