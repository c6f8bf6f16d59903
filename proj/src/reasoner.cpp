#include "ocedforge/reasoner.hpp"

#include <deque>

#include "ocedforge/vocab.hpp"

namespace ocedforge {

namespace {

// Adds t if well-formed and new; queues it for further rule firing.
void emit(Graph& g, std::deque<Triple>& queue, Triple t) {
    if (triple_malformed_reason(t)) return;
    if (g.insert(t)) queue.push_back(std::move(t));
}

}  // namespace

Graph rdfs_closure(const Graph& input) {
    Graph g = input;
    std::deque<Triple> queue;
    for (auto& t : g.triples()) queue.push_back(std::move(t));

    const Iri& sc = rdfs::sub_class_of();
    const Iri& sp = rdfs::sub_property_of();
    const Iri& dom = rdfs::domain();
    const Iri& rng = rdfs::range();
    const Iri& type = rdf::type();

    while (!queue.empty()) {
        Triple t = std::move(queue.front());
        queue.pop_front();
        const Term subject_term = to_term(t.subject);

        if (t.predicate == sc) {
            // R1 both directions
            for (const auto& succ : g.match(t.object, sc))
                emit(g, queue, Triple{t.subject, sc, succ.object});
            for (const auto& pred : g.match(std::nullopt, sc, subject_term))
                emit(g, queue, Triple{pred.subject, sc, t.object});
            // R2: existing instances of the subclass
            for (const auto& inst : g.match(std::nullopt, type, subject_term))
                emit(g, queue, Triple{inst.subject, type, t.object});
        } else if (t.predicate == sp) {
            // R3 both directions
            for (const auto& succ : g.match(t.object, sp))
                emit(g, queue, Triple{t.subject, sp, succ.object});
            for (const auto& pred : g.match(std::nullopt, sp, subject_term))
                emit(g, queue, Triple{pred.subject, sp, t.object});
            // R4: existing uses of the subproperty
            if (const auto* super = std::get_if<Iri>(&t.object)) {
                if (const auto* p0 = std::get_if<Iri>(&subject_term)) {
                    for (const auto& use : g.match(std::nullopt, *p0))
                        emit(g, queue, Triple{use.subject, *super, use.object});
                }
            }
        } else if (t.predicate == dom) {
            // R5: existing uses of the property
            if (const auto* p0 = std::get_if<Iri>(&subject_term)) {
                for (const auto& use : g.match(std::nullopt, *p0))
                    emit(g, queue, Triple{use.subject, type, t.object});
            }
        } else if (t.predicate == rng) {
            // R6: existing uses, literals excluded
            if (const auto* p0 = std::get_if<Iri>(&subject_term)) {
                for (const auto& use : g.match(std::nullopt, *p0)) {
                    if (auto obj = to_resource(use.object))
                        emit(g, queue, Triple{*obj, type, t.object});
                }
            }
        } else if (t.predicate == type) {
            // R2: superclasses of the asserted class
            for (const auto& super : g.match(t.object, sc))
                emit(g, queue, Triple{t.subject, type, super.object});
        }

        // Any triple participates as the use-side of R4, R5, R6.
        for (const auto& super : g.match(Term{t.predicate}, sp)) {
            if (const auto* q = std::get_if<Iri>(&super.object))
                emit(g, queue, Triple{t.subject, *q, t.object});
        }
        for (const auto& d : g.match(Term{t.predicate}, dom))
            emit(g, queue, Triple{t.subject, type, d.object});
        if (auto obj = to_resource(t.object)) {
            for (const auto& r : g.match(Term{t.predicate}, rng))
                emit(g, queue, Triple{*obj, type, r.object});
        }
    }
    return g;
}

}  // namespace ocedforge
