#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ocedforge/rdf.hpp"
#include "ocedforge/vocab.hpp"
#include "oracles.hpp"

using namespace ocedforge;

TEST_CASE("iri validity") {
    CHECK(is_valid_iri("https://w3id.org/ocedo/core#Event"));
    CHECK(is_valid_iri("urn:uuid:1234"));
    CHECK_FALSE(is_valid_iri(""));
    CHECK_FALSE(is_valid_iri("no-colon"));
    CHECK_FALSE(is_valid_iri("http://a b"));
    CHECK_FALSE(is_valid_iri("http://a<b"));
    CHECK_FALSE(is_valid_iri("http://a\"b"));
}

TEST_CASE("add_triple basics") {
    Graph g;
    Triple t{Iri{"https://w3id.org/ocedr/res#event-e_1"}, oced::observed_at(),
             Term{Literal{"2012-05-11T01:26:15+02:00", xsd::date_time()}}};
    CHECK(g.insert(t));
    CHECK(g.size() == 1);

    SUBCASE("re-adding keeps size") {
        CHECK_FALSE(g.insert(t));
        CHECK(g.size() == 1);
    }

    SUBCASE("malformed terms are rejected with a reason") {
        Triple bad{Iri{"not-an-iri"}, oced::observed_at(), Term{Literal{"x"}}};
        CHECK_THROWS_WITH_AS(g.insert(bad),
                             doctest::Contains("not a valid IRI"), ParseError);

        Triple bad_dt{Iri{"urn:e:1"}, oced::observed_at(),
                      Term{Literal{"yesterday", xsd::date_time()}}};
        CHECK_THROWS_WITH_AS(g.insert(bad_dt),
                             doctest::Contains("ISO-8601"), ParseError);

        Triple bad_blank{BlankNode{"has space"}, oced::observed_at(), Term{Literal{"x"}}};
        CHECK_THROWS_AS(g.insert(bad_blank), ParseError);
    }
}

TEST_CASE("match on empty graph") {
    Graph g;
    CHECK(g.match().empty());
    CHECK(g.match(Term{Iri{"urn:s:1"}}).empty());
}

TEST_CASE("match single binding combinations") {
    Graph g;
    Iri e1{"urn:e:1"}, e2{"urn:e:2"};
    Iri p1{"urn:p:1"}, p2{"urn:p:2"};
    g.insert({e1, p1, Term{Literal{"a"}}});
    g.insert({e1, p2, Term{e2}});
    g.insert({e2, p1, Term{Literal{"b"}}});

    CHECK(g.match(Term{e1}).size() == 2);
    CHECK(g.match(std::nullopt, p1).size() == 2);
    CHECK(g.match(std::nullopt, std::nullopt, Term{e2}).size() == 1);
    CHECK(g.match(Term{e1}, p2, Term{e2}).size() == 1);
    CHECK(g.match(Term{e1}, std::nullopt, Term{e2}).size() == 1);
    CHECK(g.match(Term{e2}, p2).empty());
    CHECK(g.match().size() == 3);
}

TEST_CASE("match equals linear scan on random graphs") {
    testgen::Rng rng(7001);
    for (int round = 0; round < 60; ++round) {
        Graph g = testgen::random_graph(rng, 500);
        auto all = g.triples();

        for (int q = 0; q < 12; ++q) {
            std::optional<Term> s, o;
            std::optional<Iri> p;
            // bias towards slots that occur in the graph
            if (!all.empty() && testgen::pick(rng, 2)) {
                const Triple& seed = all[testgen::pick(rng, all.size())];
                if (testgen::pick(rng, 2)) s = to_term(seed.subject);
                if (testgen::pick(rng, 2)) p = seed.predicate;
                if (testgen::pick(rng, 2)) o = seed.object;
            } else {
                if (testgen::pick(rng, 3) == 0) s = testgen::random_term(rng);
                if (testgen::pick(rng, 3) == 0) p = testgen::random_iri(rng);
                if (testgen::pick(rng, 3) == 0) o = testgen::random_term(rng);
            }

            auto got = g.match(s, p, o);
            auto want = oracle::scan_match(all, s, p, o);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                CHECK(to_ntriples(got[i]) == to_ntriples(want[i]));
        }
    }
}

TEST_CASE("expand_curie") {
    PrefixMap pm;
    pm.register_prefix("oced", Iri{std::string(oced::ns)});
    pm.register_prefix("rdf", Iri{std::string(rdf::ns)});

    CHECK(pm.expand("oced:Event").value == "https://w3id.org/ocedo/core#Event");
    CHECK(pm.expand("rdf:object").value ==
          "http://www.w3.org/1999/02/22-rdf-syntax-ns#object");
    CHECK_THROWS_WITH_AS(pm.expand("zz:X"), doctest::Contains("zz"), ParseError);
    CHECK_THROWS_AS(pm.expand("nocolon"), ParseError);
}

TEST_CASE("expand then compress is identity for registered prefixes") {
    PrefixMap pm;
    pm.register_prefix("a", Iri{"https://example.org/a#"});
    pm.register_prefix("b", Iri{"https://example.org/b#"});
    pm.register_prefix("oced", Iri{std::string(oced::ns)});

    for (std::string curie : {"a:x", "a:some-thing", "b:x_1", "oced:Event", "a:"}) {
        CAPTURE(curie);
        CHECK(pm.compress(pm.expand(curie)).value_or("<none>") == curie);
    }
    // un-compressible IRIs stay full
    CHECK_FALSE(pm.compress(Iri{"https://other.example/ns#x"}).has_value());
    CHECK_FALSE(pm.compress(Iri{"https://example.org/a#bad/slash"}).has_value());
}

TEST_CASE("graph equality is triple-set equality") {
    Graph a, b;
    Iri s{"urn:s:1"}, p{"urn:p:1"};
    a.insert({s, p, Term{Literal{"1", xsd::integer_()}}});
    a.insert({s, p, Term{Literal{"2", xsd::integer_()}}});
    b.insert({s, p, Term{Literal{"2", xsd::integer_()}}});
    CHECK_FALSE(a == b);
    b.insert({s, p, Term{Literal{"1", xsd::integer_()}}});
    CHECK(a == b);

    // literal equality is lexical: "1.0" differs from "1.00"
    Graph c = a;
    CHECK(c == a);
    c.insert({s, p, Term{Literal{"1.0", xsd::decimal_()}}});
    Graph d = a;
    d.insert({s, p, Term{Literal{"1.00", xsd::decimal_()}}});
    CHECK_FALSE(c == d);
}

TEST_CASE("language-tagged literals enforce rdf:langString") {
    Graph g;
    Literal ok = Literal::lang("hello", "en");
    CHECK(g.insert({Iri{"urn:s:1"}, Iri{"urn:p:1"}, Term{ok}}));

    Literal bad{"hello", xsd::string_()};
    bad.language = "en";
    CHECK_THROWS_AS(g.insert({Iri{"urn:s:1"}, Iri{"urn:p:1"}, Term{bad}}), ParseError);
}
