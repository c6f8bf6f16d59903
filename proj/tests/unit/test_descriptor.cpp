#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ocedforge/descriptor.hpp"
#include "ocedforge/extension.hpp"
#include "ocedforge/vocab.hpp"

using namespace ocedforge;

namespace {
PrefixMap context() {
    PrefixMap pm = ocedo_prefixes();
    pm.register_prefix("ext", Iri{"https://w3id.org/ocedd/bpic2013#"});
    return pm;
}

constexpr const char* kHeader = "directive,group,source,target,datatype,extra\n";
}  // namespace

TEST_CASE("csv reader handles RFC 4180 quoting") {
    auto rows = parse_csv("a,b,\"c,d\"\n\"with \"\"quotes\"\"\",,x\r\nlast,,\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c,d"});
    CHECK(rows[1] == std::vector<std::string>{"with \"quotes\"", "", "x"});
    CHECK(rows[2] == std::vector<std::string>{"last", "", ""});

    auto multiline = parse_csv("one,\"em\nbedded\",three\n");
    REQUIRE(multiline.size() == 1);
    CHECK(multiline[0][1] == "em\nbedded");
}

TEST_CASE("team member group rows parse into a linked group") {
    std::string csv = std::string(kHeader) +
                      "timestamp,,time:timestamp,,,\n"
                      "object,tm,ext:is_handled_by,ext:TeamMember,,scope=event\n"
                      "identity,tm,org:resource,,,\n"
                      "object_attr,tm,org:resource,ext:name,xsd:string,\n";
    Descriptor d = parse_descriptor(csv, context());

    REQUIRE(d.object_groups.size() == 1);
    const ObjectGroup& tm = d.object_groups[0];
    CHECK(tm.id == "tm");
    CHECK(tm.class_curie == "ext:TeamMember");
    CHECK(tm.object_class.value == "https://w3id.org/ocedd/bpic2013#TeamMember");
    REQUIRE(tm.link_property);
    CHECK(tm.link_property->value == "https://w3id.org/ocedd/bpic2013#is_handled_by");
    CHECK(tm.scope == GroupScope::Event);
    CHECK(tm.identity_keys == std::vector<std::string>{"org:resource"});
    REQUIRE(tm.attribute_rules.size() == 1);
    CHECK(tm.attribute_rules[0].datatype == xsd::string_());
}

TEST_CASE("header-only descriptor is rejected") {
    CHECK_THROWS_WITH_AS(parse_descriptor(kHeader, context()),
                         doctest::Contains("neither an event_type rule nor a timestamp"),
                         ParseError);
}

TEST_CASE("header must match exactly") {
    CHECK_THROWS_WITH_AS(
        parse_descriptor("Directive,group,source,target,datatype,extra\n", context()),
        doctest::Contains("header"), ParseError);
}

TEST_CASE("event_type match map parses pairs in order") {
    std::string csv =
        std::string(kHeader) +
        "event_type,,,ext:Close_Incident,,concept:name=Completed|lifecycle:transition=Closed\n";
    Descriptor d = parse_descriptor(csv, context());
    REQUIRE(d.event_type_rules.size() == 1);
    const auto& rule = d.event_type_rules[0];
    CHECK(rule.event_class.value == "https://w3id.org/ocedd/bpic2013#Close_Incident");
    REQUIRE(rule.match.size() == 2);
    CHECK(rule.match[0] == std::pair<std::string, std::string>{"concept:name", "Completed"});
    CHECK(rule.match[1] ==
          std::pair<std::string, std::string>{"lifecycle:transition", "Closed"});
}

TEST_CASE("descriptor error paths") {
    auto ctx = context();
    CHECK_THROWS_WITH_AS(parse_descriptor(std::string(kHeader) + "frobnicate,,,,,\n", ctx),
                         doctest::Contains("unknown directive"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) +
                             "timestamp,,t,,,\n"
                             "object,g,,ext:Incident,,scope=event\n"
                             "identity,g,k,,,\n"
                             "object,g,,ext:Incident,,scope=event\n",
                         ctx),
        doctest::Contains("duplicate group"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) + "timestamp,,t,,,\nidentity,ghost,k,,,\n", ctx),
        doctest::Contains("undeclared group"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) + "event_type,,,zz:Nope,,k=v\n", ctx),
        doctest::Contains("cannot resolve CURIE"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) +
                             "timestamp,,t,,,\n"
                             "object,g,,ext:Incident,,scope=banana\n",
                         ctx),
        doctest::Contains("scope"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) +
                             "timestamp,,t,,,\n"
                             "object,g,,ext:Incident,,scope=event\n",
                         ctx),
        doctest::Contains("no identity keys"), ParseError);
    CHECK_THROWS_WITH_AS(parse_descriptor(std::string(kHeader) +
                                              "timestamp,,a,,,\ntimestamp,,b,,,\n",
                                          ctx),
                         doctest::Contains("duplicate timestamp"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_descriptor(std::string(kHeader) + "timestamp,,t,,,\nobject_rel,x,y,ext:p,,\n",
                         ctx),
        doctest::Contains("not declared"), ParseError);
}

TEST_CASE("the bundled BPIC2013 descriptor parses") {
    std::ifstream in(std::string(OCEDFORGE_FIXTURE_DIR) + "/bpic2013_descriptor.csv");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();

    ExtensionModel ext = load_ocedd(bpic2013_ocedd_turtle());
    PrefixMap pm = ocedo_prefixes();
    pm.merge(ext.prefixes);
    Descriptor d = parse_descriptor(buf.str(), pm, "bpic2013_descriptor.csv");

    CHECK(d.resource_namespace.value == "https://w3id.org/ocedr/res#");
    CHECK(d.event_type_rules.size() == 1);
    CHECK(d.timestamp_key == "time:timestamp");
    CHECK(d.event_attribute_rules.size() == 2);
    CHECK(d.object_groups.size() == 4);
    CHECK(d.object_relations.size() == 2);
    REQUIRE(d.find_group("case"));
    CHECK(d.find_group("case")->scope == GroupScope::Trace);
}
