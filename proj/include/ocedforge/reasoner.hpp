#pragma once

#include "ocedforge/rdf.hpp"

namespace ocedforge {

/// Least fixpoint of the RDFS-lite rule set over the input graph:
///   R1  sc(A,B), sc(B,C)      => sc(A,C)
///   R2  type(x,A), sc(A,B)    => type(x,B)
///   R3  sp(p,q), sp(q,r)      => sp(p,r)
///   R4  (x p y), sp(p,q)      => (x q y)
///   R5  dom(p,C), (x p y)     => type(x,C)
///   R6  rng(p,C), (x p y), y not a literal => type(y,C)
/// Derived triples that would be malformed (literal subject, non-IRI
/// predicate) are skipped. Input triples are preserved; the operation is
/// idempotent and monotone and always terminates.
Graph rdfs_closure(const Graph& g);

}  // namespace ocedforge
