#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "ocedforge/extension.hpp"
#include "ocedforge/reasoner.hpp"
#include "ocedforge/vocab.hpp"
#include "oracles.hpp"

using namespace ocedforge;

TEST_CASE("pertains_to infers event and object typing") {
    Graph g = ocedo_graph();
    ExtensionModel ext = load_ocedd(bpic2013_ocedd_turtle());
    g.insert_all(ext.source);

    Iri ev{"https://w3id.org/ocedr/res#event-e_x"}, i1{"https://w3id.org/ocedr/res#object-o_x"};
    Iri pertains{"https://w3id.org/ocedd/bpic2013#pertains_to"};
    g.insert({ev, pertains, Term{i1}});

    Graph closed = rdfs_closure(g);
    CHECK(closed.contains({ev, rdf::type(), Term{oced::event()}}));
    CHECK(closed.contains({i1, rdf::type(),
                           Term{Iri{"https://w3id.org/ocedd/bpic2013#Incident"}}}));
    CHECK(closed.contains({i1, rdf::type(), Term{oced::object()}}));
}

TEST_CASE("closure is idempotent and a superset of its input") {
    testgen::Rng rng(314);
    for (int round = 0; round < 10; ++round) {
        Graph g = testgen::random_axiom_graph(rng, 120);
        Graph once = rdfs_closure(g);
        Graph twice = rdfs_closure(once);
        CHECK(once == twice);
        for (const auto& t : g.triples()) CHECK(once.contains(t));
    }
}

TEST_CASE("closure is monotone") {
    testgen::Rng rng(2718);
    for (int round = 0; round < 8; ++round) {
        Graph small = testgen::random_axiom_graph(rng, 60);
        Graph big = small;
        for (int extra = 0; extra < 10; ++extra)
            big.insert_all(testgen::random_axiom_graph(rng, 8));
        Graph closed_small = rdfs_closure(small);
        Graph closed_big = rdfs_closure(big);
        for (const auto& t : closed_small.triples()) CHECK(closed_big.contains(t));
    }
}

TEST_CASE("range rule skips literals") {
    Graph g;
    Iri p{"urn:p:x"}, cls{"urn:c:x"}, s{"urn:s:x"};
    g.insert({p, rdfs::range(), Term{cls}});
    g.insert({s, p, Term{Literal{"just text"}}});
    Graph closed = rdfs_closure(g);
    // nothing new: the literal object cannot receive a type
    CHECK(closed.size() == 2);
}

TEST_CASE("subproperty lifting copies triples") {
    Graph g;
    Iri p{"urn:p:sub"}, q{"urn:p:super"}, s{"urn:s:1"}, o{"urn:o:1"};
    g.insert({p, rdfs::sub_property_of(), Term{q}});
    g.insert({s, p, Term{o}});
    Graph closed = rdfs_closure(g);
    CHECK(closed.contains({s, q, Term{o}}));
}

TEST_CASE("closure equals the naive fixpoint oracle on random graphs") {
    testgen::Rng rng(1601);
    for (int round = 0; round < 25; ++round) {
        Graph g = testgen::random_axiom_graph(rng, 60);
        Graph closed = rdfs_closure(g);

        std::set<std::string> got(closed.to_ntriples_lines().begin(),
                                  closed.to_ntriples_lines().end());
        std::set<std::string> want = oracle::naive_closure_lines(g);
        CHECK(got == want);
    }
}
