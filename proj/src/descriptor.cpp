#include "ocedforge/descriptor.hpp"

#include <algorithm>

#include "ocedforge/vocab.hpp"

namespace ocedforge {

const ObjectGroup* Descriptor::find_group(std::string_view id) const {
    for (const auto& g : object_groups)
        if (g.id == id) return &g;
    return nullptr;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;

    std::size_t i = 0;
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        bool blank = row.size() == 1 && row[0].empty();
        if (!blank) rows.push_back(std::move(row));
        row.clear();
    };

    while (i < text.size()) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            field += c;
            ++i;
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started && field.empty()) quoted = true;
                else field += c;
                field_started = true;
                ++i;
                break;
            case ',':
                end_field();
                ++i;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                [[fallthrough]];
            case '\n':
                end_row();
                ++i;
                break;
            default:
                field += c;
                field_started = true;
                ++i;
                break;
        }
    }
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

namespace {

constexpr std::string_view kHeader = "directive,group,source,target,datatype,extra";

[[noreturn]] void fail(const std::string& source, std::size_t row, const std::string& msg) {
    throw ParseError(msg, row, 0, source);
}

Iri resolve_curie(const PrefixMap& prefixes, const std::string& curie,
                  const std::string& source, std::size_t row) {
    try {
        return prefixes.expand(curie);
    } catch (const ParseError& e) {
        fail(source, row, "cannot resolve CURIE '" + curie + "': " + e.message());
    }
}

std::vector<std::pair<std::string, std::string>> parse_match_map(
    const std::string& extra, const std::string& source, std::size_t row) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t start = 0;
    while (start <= extra.size()) {
        auto bar = extra.find('|', start);
        std::string entry = extra.substr(start, bar == std::string::npos ? bar : bar - start);
        if (!entry.empty()) {
            auto eq = entry.find('=');
            if (eq == std::string::npos)
                fail(source, row, "event_type match entry '" + entry + "' lacks '='");
            out.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
        }
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (out.empty()) fail(source, row, "event_type rule has an empty match map");
    return out;
}

}  // namespace

Descriptor parse_descriptor(std::string_view csv, const PrefixMap& prefixes,
                            std::string source) {
    auto rows = parse_csv(csv);
    if (rows.empty()) throw ParseError("descriptor is empty", 1, 0, source);

    {
        std::string header;
        for (std::size_t i = 0; i < rows[0].size(); ++i) {
            if (i) header += ',';
            header += rows[0][i];
        }
        if (header != kHeader)
            throw ParseError("descriptor header must be exactly '" + std::string(kHeader) +
                                 "'",
                             1, 0, source);
    }

    Descriptor d;
    bool namespace_seen = false;

    auto group_index = [&](const std::string& id) -> ObjectGroup* {
        for (auto& g : d.object_groups)
            if (g.id == id) return &g;
        return nullptr;
    };

    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto row = rows[r];
        row.resize(6);  // tolerate short rows; missing cells read as empty
        const std::string& directive = row[0];
        const std::string& group = row[1];
        const std::string& src = row[2];
        const std::string& target = row[3];
        const std::string& datatype = row[4];
        const std::string& extra = row[5];
        std::size_t line = r + 1;

        auto resolve_datatype = [&]() -> Iri {
            if (datatype.empty()) return xsd::string_();
            return resolve_curie(prefixes, datatype, source, line);
        };

        if (directive == "namespace") {
            if (namespace_seen) fail(source, line, "duplicate namespace directive");
            if (!is_valid_iri(target))
                fail(source, line, "namespace target '" + target + "' is not a valid IRI");
            d.resource_namespace = Iri{target};
            namespace_seen = true;
        } else if (directive == "event_type") {
            EventTypeRule rule;
            rule.match = parse_match_map(extra, source, line);
            if (target.empty()) fail(source, line, "event_type rule lacks a target class");
            rule.event_class_curie = target;
            rule.event_class = resolve_curie(prefixes, target, source, line);
            d.event_type_rules.push_back(std::move(rule));
        } else if (directive == "timestamp") {
            if (d.timestamp_key) fail(source, line, "duplicate timestamp directive");
            if (src.empty()) fail(source, line, "timestamp directive lacks a source key");
            d.timestamp_key = src;
        } else if (directive == "event_attr") {
            if (src.empty() || target.empty())
                fail(source, line, "event_attr needs source key and target property");
            AttributeRule rule{src, target, resolve_curie(prefixes, target, source, line),
                               resolve_datatype()};
            d.event_attribute_rules.push_back(std::move(rule));
        } else if (directive == "object") {
            if (group.empty()) fail(source, line, "object directive lacks a group id");
            if (group_index(group)) fail(source, line, "duplicate group '" + group + "'");
            ObjectGroup g;
            g.id = group;
            if (target.empty()) fail(source, line, "object group lacks a class CURIE");
            g.class_curie = target;
            g.object_class = resolve_curie(prefixes, target, source, line);
            if (!src.empty()) g.link_property = resolve_curie(prefixes, src, source, line);
            if (extra.empty() || extra == "scope=event") g.scope = GroupScope::Event;
            else if (extra == "scope=trace") g.scope = GroupScope::Trace;
            else fail(source, line, "object group extra must be scope=event or scope=trace");
            d.object_groups.push_back(std::move(g));
        } else if (directive == "identity") {
            auto* g = group_index(group);
            if (!g) fail(source, line, "identity row for undeclared group '" + group + "'");
            if (src.empty()) fail(source, line, "identity row lacks a source key");
            g->identity_keys.push_back(src);
        } else if (directive == "object_attr") {
            auto* g = group_index(group);
            if (!g) fail(source, line, "object_attr row for undeclared group '" + group + "'");
            if (src.empty() || target.empty())
                fail(source, line, "object_attr needs source key and target property");
            AttributeRule rule{src, target, resolve_curie(prefixes, target, source, line),
                               resolve_datatype()};
            g->attribute_rules.push_back(std::move(rule));
        } else if (directive == "object_rel") {
            if (!group_index(group))
                fail(source, line, "object_rel from-group '" + group + "' is not declared");
            if (!group_index(src))
                fail(source, line, "object_rel to-group '" + src + "' is not declared");
            if (target.empty()) fail(source, line, "object_rel lacks a property CURIE");
            d.object_relations.push_back(
                {group, src, resolve_curie(prefixes, target, source, line)});
        } else {
            fail(source, line, "unknown directive '" + directive + "'");
        }
    }

    for (const auto& g : d.object_groups)
        if (g.identity_keys.empty())
            throw ParseError("object group '" + g.id + "' has no identity keys", 0, 0, source);
    if (d.event_type_rules.empty() && !d.timestamp_key)
        throw ParseError("descriptor defines neither an event_type rule nor a timestamp",
                         0, 0, source);
    return d;
}

}  // namespace ocedforge
