#include "xml.hpp"

#include <cctype>

namespace ocedforge::xml {

namespace {

void append_utf8(std::string& out, std::uint32_t code) {
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xC0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3F));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xE0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
    }
}

bool is_name_char(int c) {
    return std::isalnum(c) || c == ':' || c == '_' || c == '-' || c == '.';
}

}  // namespace

PullParser::PullParser(std::istream& in, std::string source)
    : in_(in), source_(std::move(source)) {}

void PullParser::fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_, source_);
}

int PullParser::peek() { return in_.peek(); }

int PullParser::get() {
    int c = in_.get();
    if (c == '\n') {
        ++line_;
        col_ = 1;
    } else if (c != EOF) {
        ++col_;
    }
    return c;
}

bool PullParser::eat(char c) {
    if (peek() != c) return false;
    get();
    return true;
}

void PullParser::expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
}

void PullParser::skip_whitespace() {
    while (true) {
        int c = peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') get();
        else break;
    }
}

void PullParser::skip_until(std::string_view terminator) {
    std::size_t matched = 0;
    while (matched < terminator.size()) {
        int c = get();
        if (c == EOF) fail("unexpected end of input (unterminated markup)");
        matched = (static_cast<char>(c) == terminator[matched]) ? matched + 1
                  : (static_cast<char>(c) == terminator[0])     ? 1
                                                                : 0;
    }
}

std::string PullParser::read_name() {
    std::string name;
    while (is_name_char(peek())) name += static_cast<char>(get());
    if (name.empty()) fail("expected a name");
    return name;
}

void PullParser::decode_entity(std::string& out) {
    std::string ent;
    while (peek() != ';') {
        int c = get();
        if (c == EOF || ent.size() > 10) fail("malformed entity reference");
        ent += static_cast<char>(c);
    }
    get();  // ';'
    if (ent == "amp") out += '&';
    else if (ent == "lt") out += '<';
    else if (ent == "gt") out += '>';
    else if (ent == "quot") out += '"';
    else if (ent == "apos") out += '\'';
    else if (!ent.empty() && ent[0] == '#') {
        std::uint32_t code = 0;
        if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
            for (std::size_t i = 2; i < ent.size(); ++i) {
                char c = ent[i];
                code <<= 4;
                if (c >= '0' && c <= '9') code |= static_cast<std::uint32_t>(c - '0');
                else if (c >= 'a' && c <= 'f') code |= static_cast<std::uint32_t>(c - 'a' + 10);
                else if (c >= 'A' && c <= 'F') code |= static_cast<std::uint32_t>(c - 'A' + 10);
                else fail("malformed numeric character reference");
            }
        } else {
            for (std::size_t i = 1; i < ent.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(ent[i])))
                    fail("malformed numeric character reference");
                code = code * 10 + static_cast<std::uint32_t>(ent[i] - '0');
            }
        }
        append_utf8(out, code);
    } else {
        fail("unknown entity '&" + ent + ";'");
    }
}

std::string PullParser::read_attribute_value() {
    skip_whitespace();
    int quote = get();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    std::string value;
    while (true) {
        int c = get();
        if (c == EOF) fail("unterminated attribute value");
        if (c == quote) break;
        if (c == '<') fail("'<' not allowed in attribute value");
        if (c == '&') decode_entity(value);
        else value += static_cast<char>(c);
    }
    return value;
}

Event PullParser::next() {
    if (pending_end_) {
        pending_end_ = false;
        Event ev;
        ev.kind = Event::Kind::EndElement;
        ev.name = open_.back();
        open_.pop_back();
        if (open_.empty()) document_ended_ = true;
        return ev;
    }

    while (true) {
        // skip character data between tags
        while (true) {
            int c = peek();
            if (c == EOF) {
                if (!open_.empty()) fail("unexpected end of input: <" + open_.back() + "> not closed");
                return Event{};
            }
            if (c == '<') break;
            if (document_ended_ && !std::isspace(c)) fail("content after document element");
            get();
        }
        get();  // '<'

        int c = peek();
        if (c == '?') {
            skip_until("?>");
            continue;
        }
        if (c == '!') {
            get();
            if (eat('-')) {
                expect('-', "in comment opening");
                skip_until("-->");
                continue;
            }
            if (eat('[')) {
                // <![CDATA[ ... ]]>  (content not needed, skip)
                skip_until("[");
                skip_until("]]>");
                continue;
            }
            // DOCTYPE and friends
            std::string name = read_name();
            if (name == "DOCTYPE") {
                int depth = 0;
                while (true) {
                    int d = get();
                    if (d == EOF) fail("unterminated DOCTYPE");
                    if (d == '[') fail("DOCTYPE internal subset is not supported");
                    if (d == '<') ++depth;
                    if (d == '>') {
                        if (depth == 0) break;
                        --depth;
                    }
                }
                continue;
            }
            fail("unsupported markup <!" + name);
        }
        if (c == '/') {
            get();
            std::string name = read_name();
            skip_whitespace();
            expect('>', "after end tag name");
            if (open_.empty()) fail("unmatched </" + name + ">");
            if (open_.back() != name)
                fail("mismatched end tag </" + name + ">, expected </" + open_.back() + ">");
            Event ev;
            ev.kind = Event::Kind::EndElement;
            ev.name = name;
            open_.pop_back();
            if (open_.empty()) document_ended_ = true;
            return ev;
        }

        if (document_ended_) fail("multiple document elements");
        Event ev;
        ev.kind = Event::Kind::StartElement;
        ev.name = read_name();
        while (true) {
            skip_whitespace();
            int n = peek();
            if (n == '>') {
                get();
                open_.push_back(ev.name);
                return ev;
            }
            if (n == '/') {
                get();
                expect('>', "after '/' in self-closing tag");
                open_.push_back(ev.name);
                pending_end_ = true;
                return ev;
            }
            if (n == EOF) fail("unterminated start tag");
            Attribute attr;
            attr.name = read_name();
            skip_whitespace();
            expect('=', "after attribute name");
            attr.value = read_attribute_value();
            ev.attributes.push_back(std::move(attr));
        }
    }
}

}  // namespace ocedforge::xml
