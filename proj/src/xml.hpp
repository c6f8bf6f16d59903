#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "ocedforge/diagnostics.hpp"

namespace ocedforge::xml {

struct Attribute {
    std::string name;
    std::string value;
};

struct Event {
    enum class Kind { StartElement, EndElement, EndDocument };
    Kind kind = Kind::EndDocument;
    std::string name;                   // element name for Start/End
    std::vector<Attribute> attributes;  // Start only
};

/// Minimal streaming pull parser for machine-generated XML: elements,
/// attributes, self-closing tags, comments, PIs, CDATA, the five named
/// entities plus numeric character references. Text content is skipped
/// (the XES surface keeps all data in attributes). No DTD support.
class PullParser {
public:
    PullParser(std::istream& in, std::string source);

    Event next();

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    [[noreturn]] void fail(const std::string& msg) const;

    int peek();
    int get();
    bool eat(char c);
    void expect(char c, const char* what);
    void skip_whitespace();
    void skip_until(std::string_view terminator);
    std::string read_name();
    std::string read_attribute_value();
    void decode_entity(std::string& out);

    std::istream& in_;
    std::string source_;
    std::size_t line_ = 1, col_ = 1;
    std::vector<std::string> open_;       // element stack
    bool pending_end_ = false;            // self-closing tag: End follows Start
    bool document_ended_ = false;
};

}  // namespace ocedforge::xml
