#include "ocedforge/xes.hpp"

#include <map>
#include <sstream>

#include "xml.hpp"

namespace ocedforge {

std::string_view xes_element_name(XesType type) {
    switch (type) {
        case XesType::String: return "string";
        case XesType::Date: return "date";
        case XesType::Int: return "int";
        case XesType::Float: return "float";
        case XesType::Boolean: return "boolean";
        case XesType::Id: return "id";
    }
    return "string";
}

namespace {

std::optional<XesType> attribute_type(std::string_view element) {
    if (element == "string") return XesType::String;
    if (element == "date") return XesType::Date;
    if (element == "int") return XesType::Int;
    if (element == "float") return XesType::Float;
    if (element == "boolean") return XesType::Boolean;
    if (element == "id") return XesType::Id;
    return std::nullopt;
}

const std::string* find_attr(const std::vector<xml::Attribute>& attrs, std::string_view name) {
    for (const auto& a : attrs)
        if (a.name == name) return &a.value;
    return nullptr;
}

class XesReader {
public:
    XesReader(std::istream& in, std::string source, std::vector<Diagnostic>* warnings)
        : parser_(in, source), source_(std::move(source)), warnings_(warnings) {}

    XesLog run() {
        XesLog log;
        log.source_name = source_;

        auto ev = parser_.next();
        if (ev.kind != xml::Event::Kind::StartElement || ev.name != "log")
            throw ParseError("expected <log> document element", parser_.line(),
                             parser_.column(), source_);

        while (true) {
            ev = parser_.next();
            if (ev.kind == xml::Event::Kind::EndElement && ev.name == "log") break;
            if (ev.kind == xml::Event::Kind::EndDocument)
                throw ParseError("unexpected end of document", parser_.line(),
                                 parser_.column(), source_);
            if (ev.kind != xml::Event::Kind::StartElement) continue;

            if (ev.name == "trace") {
                log.traces.push_back(read_trace());
            } else if (ev.name == "extension") {
                XesExtension ext;
                if (auto* v = find_attr(ev.attributes, "name")) ext.name = *v;
                if (auto* v = find_attr(ev.attributes, "prefix")) ext.prefix = *v;
                if (auto* v = find_attr(ev.attributes, "uri")) ext.uri = *v;
                log.extensions.push_back(std::move(ext));
                skip_element("extension");
            } else if (ev.name == "classifier") {
                XesClassifier cls;
                if (auto* v = find_attr(ev.attributes, "name")) cls.name = *v;
                if (auto* v = find_attr(ev.attributes, "keys")) cls.keys = *v;
                log.classifiers.push_back(std::move(cls));
                skip_element("classifier");
            } else if (ev.name == "global") {
                XesGlobal global;
                if (auto* v = find_attr(ev.attributes, "scope")) global.scope = *v;
                global.attributes = read_attributes("global");
                log.globals.push_back(std::move(global));
            } else if (ev.name == "event") {
                // events outside traces are legal XES 2.0; treat as a
                // one-event trace to keep the downstream model uniform
                warn("<event> outside <trace>; wrapping in a synthetic trace");
                XesTrace trace;
                trace.events.push_back(read_event());
                log.traces.push_back(std::move(trace));
            } else if (auto t = attribute_type(ev.name)) {
                read_attribute_into(ev, *t, nullptr);  // log-level attribute, dropped
            } else {
                warn("unknown element <" + ev.name + "> skipped");
                skip_element(ev.name);
            }
        }
        return log;
    }

private:
    void warn(std::string message) {
        if (warnings_)
            warnings_->push_back({Severity::Warning, std::move(message), source_,
                                  parser_.line(), parser_.column()});
    }

    void skip_element(const std::string& name) {
        std::size_t depth = 1;
        while (depth > 0) {
            auto ev = parser_.next();
            if (ev.kind == xml::Event::Kind::StartElement) ++depth;
            else if (ev.kind == xml::Event::Kind::EndElement) --depth;
            else
                throw ParseError("unexpected end of document inside <" + name + ">",
                                 parser_.line(), parser_.column(), source_);
        }
    }

    // Appends attribute elements until the container's end tag. `values`
    // wrappers are flattened into the surrounding list.
    std::vector<XesAttribute> read_attributes(const std::string& container) {
        std::vector<XesAttribute> out;
        while (true) {
            auto ev = parser_.next();
            if (ev.kind == xml::Event::Kind::EndElement) {
                if (ev.name == container || ev.name == "values") return out;
                continue;
            }
            if (ev.kind == xml::Event::Kind::EndDocument)
                throw ParseError("unexpected end of document inside <" + container + ">",
                                 parser_.line(), parser_.column(), source_);
            if (ev.name == "values") {
                auto nested = read_attributes("values");
                for (auto& a : nested) out.push_back(std::move(a));
                continue;
            }
            if (auto t = attribute_type(ev.name)) {
                XesAttribute attr;
                read_attribute_into(ev, *t, &attr);
                out.push_back(std::move(attr));
            } else {
                warn("unknown attribute element <" + ev.name + "> skipped");
                skip_element(ev.name);
            }
        }
    }

    void read_attribute_into(const xml::Event& start, XesType type, XesAttribute* out) {
        XesAttribute attr;
        attr.type = type;
        if (auto* k = find_attr(start.attributes, "key")) attr.key = *k;
        if (auto* v = find_attr(start.attributes, "value")) attr.value = *v;
        attr.children = read_attributes(std::string(xes_element_name(type)));
        if (out) *out = std::move(attr);
    }

    XesEvent read_event() {
        XesEvent event;
        event.attributes = read_attributes("event");
        dedup_keys(event.attributes, "event");
        return event;
    }

    XesTrace read_trace() {
        XesTrace trace;
        while (true) {
            auto ev = parser_.next();
            if (ev.kind == xml::Event::Kind::EndElement && ev.name == "trace") break;
            if (ev.kind == xml::Event::Kind::EndDocument)
                throw ParseError("unexpected end of document inside <trace>",
                                 parser_.line(), parser_.column(), source_);
            if (ev.kind != xml::Event::Kind::StartElement) continue;
            if (ev.name == "event") {
                trace.events.push_back(read_event());
            } else if (ev.name == "values") {
                auto nested = read_attributes("values");
                for (auto& a : nested) trace.attributes.push_back(std::move(a));
            } else if (auto t = attribute_type(ev.name)) {
                XesAttribute attr;
                read_attribute_into(ev, *t, &attr);
                trace.attributes.push_back(std::move(attr));
            } else {
                warn("unknown element <" + ev.name + "> skipped");
                skip_element(ev.name);
            }
        }
        dedup_keys(trace.attributes, "trace");
        return trace;
    }

    // duplicate keys: last occurrence wins
    void dedup_keys(std::vector<XesAttribute>& attrs, const char* scope) {
        std::map<std::string, std::size_t> last;
        for (std::size_t i = 0; i < attrs.size(); ++i) last[attrs[i].key] = i;
        if (last.size() == attrs.size()) return;
        std::vector<XesAttribute> unique;
        unique.reserve(last.size());
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            if (last[attrs[i].key] == i) {
                unique.push_back(std::move(attrs[i]));
            } else {
                warn("duplicate " + std::string(scope) + " attribute key '" + attrs[i].key +
                     "'; keeping the last occurrence");
            }
        }
        attrs = std::move(unique);
    }

    xml::PullParser parser_;
    std::string source_;
    std::vector<Diagnostic>* warnings_;
};

const XesAttribute* find_in(const std::vector<XesAttribute>& attrs, std::string_view key) {
    for (const auto& a : attrs)
        if (a.key == key) return &a;
    return nullptr;
}

void escape_xml_into(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
}

void write_attribute(std::string& out, const XesAttribute& attr, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += "<";
    out += xes_element_name(attr.type);
    out += " key=\"";
    escape_xml_into(out, attr.key);
    out += "\" value=\"";
    escape_xml_into(out, attr.value);
    out += "\"";
    if (attr.children.empty()) {
        out += "/>\n";
        return;
    }
    out += ">\n";
    for (const auto& child : attr.children) write_attribute(out, child, indent + 1);
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += "</";
    out += xes_element_name(attr.type);
    out += ">\n";
}

}  // namespace

const XesAttribute* XesEvent::find(std::string_view key) const {
    return find_in(attributes, key);
}

const XesAttribute* XesTrace::find(std::string_view key) const {
    return find_in(attributes, key);
}

XesLog parse_xes(std::istream& in, std::string source_name,
                 std::vector<Diagnostic>* warnings) {
    XesReader reader(in, std::move(source_name), warnings);
    return reader.run();
}

XesLog parse_xes(std::string_view text, std::string source_name,
                 std::vector<Diagnostic>* warnings) {
    std::istringstream in{std::string(text)};
    return parse_xes(in, std::move(source_name), warnings);
}

std::string write_xes(const XesLog& log) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<log>\n";
    for (const auto& ext : log.extensions) {
        out += "  <extension name=\"";
        escape_xml_into(out, ext.name);
        out += "\" prefix=\"";
        escape_xml_into(out, ext.prefix);
        out += "\" uri=\"";
        escape_xml_into(out, ext.uri);
        out += "\"/>\n";
    }
    for (const auto& global : log.globals) {
        out += "  <global scope=\"";
        escape_xml_into(out, global.scope);
        out += "\">\n";
        for (const auto& attr : global.attributes) write_attribute(out, attr, 2);
        out += "  </global>\n";
    }
    for (const auto& cls : log.classifiers) {
        out += "  <classifier name=\"";
        escape_xml_into(out, cls.name);
        out += "\" keys=\"";
        escape_xml_into(out, cls.keys);
        out += "\"/>\n";
    }
    for (const auto& trace : log.traces) {
        out += "  <trace>\n";
        for (const auto& attr : trace.attributes) write_attribute(out, attr, 2);
        for (const auto& event : trace.events) {
            out += "    <event>\n";
            for (const auto& attr : event.attributes) write_attribute(out, attr, 3);
            out += "    </event>\n";
        }
        out += "  </trace>\n";
    }
    out += "</log>\n";
    return out;
}

}  // namespace ocedforge
