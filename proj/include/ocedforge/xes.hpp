#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocedforge/diagnostics.hpp"

namespace ocedforge {

enum class XesType { String, Date, Int, Float, Boolean, Id };

std::string_view xes_element_name(XesType type);

/// Typed key-value attribute; the value keeps its original lexical form
/// (dates keep their offset untouched). Nested attributes live in
/// `children`.
struct XesAttribute {
    std::string key;
    XesType type = XesType::String;
    std::string value;
    std::vector<XesAttribute> children;

    bool operator==(const XesAttribute&) const = default;
};

struct XesEvent {
    std::vector<XesAttribute> attributes;  // keys unique, document order

    const XesAttribute* find(std::string_view key) const;
    bool operator==(const XesEvent&) const = default;
};

struct XesTrace {
    std::vector<XesAttribute> attributes;
    std::vector<XesEvent> events;

    const XesAttribute* find(std::string_view key) const;
    bool operator==(const XesTrace&) const = default;
};

struct XesExtension {
    std::string name, prefix, uri;
    bool operator==(const XesExtension&) const = default;
};

struct XesClassifier {
    std::string name, keys;
    bool operator==(const XesClassifier&) const = default;
};

struct XesGlobal {
    std::string scope;
    std::vector<XesAttribute> attributes;
    bool operator==(const XesGlobal&) const = default;
};

struct XesLog {
    std::vector<XesExtension> extensions;
    std::vector<XesGlobal> globals;
    std::vector<XesClassifier> classifiers;
    std::vector<XesTrace> traces;
    std::string source_name;
};

/// Streaming parse of an XES document. Warnings (unknown attribute
/// elements, duplicate keys) are appended to `warnings` when given.
/// Throws ParseError on malformed XML or a missing <log> root.
XesLog parse_xes(std::istream& in, std::string source_name,
                 std::vector<Diagnostic>* warnings = nullptr);
XesLog parse_xes(std::string_view text, std::string source_name,
                 std::vector<Diagnostic>* warnings = nullptr);

/// Debug re-emission of the model as XES XML; parse_xes(write_xes(log))
/// is structurally equal to log.
std::string write_xes(const XesLog& log);

}  // namespace ocedforge
