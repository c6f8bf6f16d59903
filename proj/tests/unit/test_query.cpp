#include <doctest.h>

#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "ocedforge/mapper.hpp"
#include "ocedforge/query.hpp"
#include "ocedforge/vocab.hpp"
#include "oracles.hpp"

using namespace ocedforge;

namespace {
std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(OCEDFORGE_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph golden_graph() {
    ExtensionModel ext = load_ocedd(bpic2013_ocedd_turtle());
    PrefixMap pm = ocedo_prefixes();
    pm.merge(ext.prefixes);
    Descriptor d = parse_descriptor(read_fixture("bpic2013_descriptor.csv"), pm);
    std::string xes = read_fixture("bpic2013_one_event.xes");
    XesLog log = parse_xes(std::string_view{xes}, "bpic2013_one_event.xes");
    return convert(log, d, ext).graph;
}

PrefixMap query_prefixes() {
    PrefixMap pm = ocedo_prefixes();
    pm.register_prefix("ext", Iri{"https://w3id.org/ocedd/bpic2013#"});
    pm.register_prefix("res", Iri{"https://w3id.org/ocedr/res#"});
    return pm;
}
}  // namespace

TEST_CASE("close-incident events join to their incident") {
    Graph g = golden_graph();
    auto patterns = parse_query(
        "?e rdf:type ext:Close_Incident\n"
        "?e ext:pertains_to ?i\n",
        query_prefixes());
    BindingSet result = bgp_query(g, patterns);

    CHECK(result.variables == std::vector<std::string>{"e", "i"});
    REQUIRE(result.solutions.size() == 1);
    const auto& sol = result.solutions[0];
    CHECK(to_ntriples(sol.at("e")).find("event-e_") != std::string::npos);
    CHECK(to_ntriples(sol.at("i")).find("object-o_") != std::string::npos);
}

TEST_CASE("any pattern over the empty graph is empty") {
    Graph g;
    auto patterns = parse_query("?s ?p ?o\n", query_prefixes());
    CHECK(bgp_query(g, patterns).solutions.empty());
}

TEST_CASE("variable-free pattern acts as a boolean query") {
    Graph g;
    Iri s{"urn:s:1"}, p{"urn:p:1"};
    g.insert({s, p, Term{Literal{"x"}}});

    auto hit = bgp_query(g, parse_query("<urn:s:1> <urn:p:1> \"x\"", query_prefixes()));
    CHECK(hit.variables.empty());
    CHECK(hit.solutions.size() == 1);
    CHECK(hit.solutions[0].empty());

    auto miss = bgp_query(g, parse_query("<urn:s:1> <urn:p:1> \"y\"", query_prefixes()));
    CHECK(miss.solutions.empty());
}

TEST_CASE("query text syntax errors") {
    auto pm = query_prefixes();
    CHECK_THROWS_AS(parse_query("?e rdf:type\n", pm), ParseError);            // two terms
    CHECK_THROWS_AS(parse_query("?e zz:x ?o\n", pm), ParseError);             // bad prefix
    CHECK_THROWS_AS(parse_query("", pm), ParseError);                         // empty
    CHECK_THROWS_AS(parse_query("?e rdf:type ?t extra\n", pm), ParseError);   // 4 terms
    CHECK_NOTHROW(parse_query("# comment only\n?e a ?t .\n", pm));
}

TEST_CASE("'a' expands to rdf:type and literals parse") {
    Graph g;
    Iri s{"urn:s:1"};
    g.insert({s, rdf::type(), Term{oced::event()}});
    g.insert({s, Iri{"urn:p:n"}, Term{Literal{"5", xsd::integer_()}}});
    g.insert({s, Iri{"urn:p:t"}, Term{Literal::lang("hi", "en")}});

    auto pm = query_prefixes();
    CHECK(bgp_query(g, parse_query("?x a oced:Event", pm)).solutions.size() == 1);
    CHECK(bgp_query(g, parse_query("?x <urn:p:n> \"5\"^^xsd:integer", pm)).solutions.size() ==
          1);
    CHECK(bgp_query(g, parse_query("?x <urn:p:t> \"hi\"@en", pm)).solutions.size() == 1);
    CHECK(bgp_query(g, parse_query("?x <urn:p:n> \"5\"", pm)).solutions.empty());
}

TEST_CASE("tsv output is deterministic with variables in first-occurrence order") {
    Graph g;
    g.insert({Iri{"urn:s:b"}, Iri{"urn:p:1"}, Term{Iri{"urn:o:2"}}});
    g.insert({Iri{"urn:s:a"}, Iri{"urn:p:1"}, Term{Iri{"urn:o:1"}}});
    auto result = bgp_query(g, parse_query("?s <urn:p:1> ?o", query_prefixes()));
    CHECK(to_tsv(result) ==
          "?s\t?o\n"
          "<urn:s:a>\t<urn:o:1>\n"
          "<urn:s:b>\t<urn:o:2>\n");
}

TEST_CASE("bgp_query equals the nested-loop-over-match oracle") {
    testgen::Rng rng(8080);
    for (int round = 0; round < 40; ++round) {
        Graph g = testgen::random_graph(rng, 200);
        auto patterns = testgen::random_bgp(rng, g, 3);
        auto got = oracle::binding_set_lines(bgp_query(g, patterns));
        auto want = oracle::nested_loop_join_lines(g, patterns);
        CHECK(got == want);
    }
}

TEST_CASE("bgp_query equals the exhaustive join on small graphs") {
    testgen::Rng rng(9090);
    for (int round = 0; round < 25; ++round) {
        Graph g = testgen::random_graph(rng, 25);
        auto patterns = testgen::random_bgp(rng, g, 3);
        auto got = oracle::binding_set_lines(bgp_query(g, patterns));
        auto want = oracle::exhaustive_join_lines(g, patterns);
        CHECK(got == want);
    }
}

TEST_CASE("join result is independent of pattern order") {
    testgen::Rng rng(111);
    for (int round = 0; round < 15; ++round) {
        Graph g = testgen::random_graph(rng, 60);
        auto patterns = testgen::random_bgp(rng, g, 3);
        auto forward = oracle::binding_set_lines(bgp_query(g, patterns));
        std::reverse(patterns.begin(), patterns.end());
        auto backward = oracle::binding_set_lines(bgp_query(g, patterns));
        CHECK(forward == backward);
    }
}
