#pragma once

// Deterministic random input generators shared by the unit and
// acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "ocedforge/query.hpp"
#include "ocedforge/rdf.hpp"
#include "ocedforge/vocab.hpp"

namespace testgen {

using namespace ocedforge;

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Iri random_iri(Rng& rng) {
    static const char* hosts[] = {"https://example.org/a#", "https://example.org/b#",
                                  "http://data.test/ns/", "urn:thing:"};
    std::string local;
    std::size_t len = 1 + pick(rng, 8);
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_-";
    for (std::size_t i = 0; i < len; ++i) local += alphabet[pick(rng, sizeof(alphabet) - 1)];
    return Iri{std::string(hosts[pick(rng, 4)]) + local};
}

inline BlankNode random_blank(Rng& rng) {
    return BlankNode{"b" + std::to_string(pick(rng, 40))};
}

inline std::string random_text(Rng& rng) {
    // exercises escapes, whitespace, unicode, and plain text
    static const char* pieces[] = {"plain", "with space", "quote\"inside", "back\\slash",
                                   "tab\there",  "new\nline", "café",        "Grüße",
                                   "日本語",      "",          "trailing ",   "\r carriage"};
    std::string out;
    std::size_t n = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < n; ++i) out += pieces[pick(rng, 12)];
    return out;
}

inline Literal random_literal(Rng& rng) {
    switch (pick(rng, 8)) {
        case 0: return Literal{random_text(rng)};
        case 1: return Literal::lang(random_text(rng), pick(rng, 2) ? "en" : "de-AT");
        case 2: return Literal{std::to_string(static_cast<int>(pick(rng, 2000)) - 1000),
                               xsd::integer_()};
        case 3: {
            std::string lex = std::to_string(pick(rng, 100)) + "." + std::to_string(pick(rng, 100));
            return Literal{lex, xsd::decimal_()};
        }
        case 4: {
            std::string lex = std::to_string(pick(rng, 10)) + "." + std::to_string(pick(rng, 10)) +
                              "e" + (pick(rng, 2) ? "-" : "") + std::to_string(pick(rng, 30));
            return Literal{lex, xsd::double_()};
        }
        case 5: return Literal{pick(rng, 2) ? "true" : "false", xsd::boolean_()};
        case 6: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "20%02zu-%02zu-%02zuT%02zu:%02zu:%02zu+0%zu:00",
                          pick(rng, 30), 1 + pick(rng, 12), 1 + pick(rng, 28), pick(rng, 24),
                          pick(rng, 60), pick(rng, 60), pick(rng, 10));
            return Literal{buf, xsd::date_time()};
        }
        default: return Literal{random_text(rng), random_iri(rng)};
    }
}

inline Term random_term(Rng& rng) {
    switch (pick(rng, 4)) {
        case 0: return random_iri(rng);
        case 1: return random_blank(rng);
        default: return random_literal(rng);
    }
}

inline Resource random_resource(Rng& rng) {
    if (pick(rng, 4) == 0) return random_blank(rng);
    return random_iri(rng);
}

inline Triple random_triple(Rng& rng) {
    return Triple{random_resource(rng), random_iri(rng), random_term(rng)};
}

inline Graph random_graph(Rng& rng, std::size_t max_triples) {
    Graph g;
    std::size_t n = pick(rng, max_triples + 1);
    for (std::size_t i = 0; i < n; ++i) g.insert(random_triple(rng));
    return g;
}

// --- reasoner workloads -----------------------------------------------

// 20-term vocabulary with random subclass/subproperty/domain/range axioms
// plus instance triples that reuse the same terms as predicates.
inline Graph random_axiom_graph(Rng& rng, std::size_t max_triples) {
    std::vector<Iri> terms;
    for (int i = 0; i < 20; ++i)
        terms.push_back(Iri{"https://example.org/v#t" + std::to_string(i)});

    Graph g;
    std::size_t n = pick(rng, max_triples + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Iri& a = terms[pick(rng, terms.size())];
        const Iri& b = terms[pick(rng, terms.size())];
        const Iri& c = terms[pick(rng, terms.size())];
        switch (pick(rng, 8)) {
            case 0: g.insert(Triple{a, rdfs::sub_class_of(), Term{b}}); break;
            case 1: g.insert(Triple{a, rdfs::sub_property_of(), Term{b}}); break;
            case 2: g.insert(Triple{a, rdfs::domain(), Term{b}}); break;
            case 3: g.insert(Triple{a, rdfs::range(), Term{b}}); break;
            case 4: g.insert(Triple{a, rdf::type(), Term{b}}); break;
            case 5: g.insert(Triple{a, b, Term{Literal{"v" + std::to_string(pick(rng, 5))}}}); break;
            default: g.insert(Triple{a, b, Term{c}}); break;
        }
    }
    return g;
}

// --- query workloads ---------------------------------------------------

// A pattern over g's own terms so that joins actually hit.
inline std::vector<TriplePattern> random_bgp(Rng& rng, const Graph& g,
                                             std::size_t max_patterns) {
    auto triples = g.triples();
    std::vector<std::string> vars = {"a", "b", "c", "d"};
    std::size_t n = 1 + pick(rng, max_patterns);
    std::vector<TriplePattern> out;
    for (std::size_t i = 0; i < n; ++i) {
        TriplePattern p;
        Triple seed = triples.empty() ? random_triple(rng)
                                      : triples[pick(rng, triples.size())];
        auto slot = [&](const Term& fixed) -> PatternTerm {
            switch (pick(rng, 3)) {
                case 0: return Variable{vars[pick(rng, vars.size())]};
                case 1: return fixed;
                default: return random_term(rng);
            }
        };
        p.subject = slot(to_term(seed.subject));
        p.predicate = slot(Term{seed.predicate});
        p.object = slot(seed.object);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace testgen
