#pragma once

// Model-preserving syntactic rewrites. Every function returns a new
// ontology; axiom order is preserved and rewritten axioms keep the source
// location of the axiom they came from.

#include "dlkit/ast.hpp"

namespace dlkit {

// Replaces role characteristics by core axioms:
//   Transitive(R)  -> R o R SubRoleOf R
//   Symmetric(R)   -> R EquivalentRole inv(R)
//   Asymmetric(R)  -> Disjoint(R, inv(R))
//   Reflexive(R)   -> Top SubClassOf Self(R)
//   Irreflexive(R) -> Top SubClassOf not Self(R)
// Throws InverseOfUniversal for Symmetric/Asymmetric(Universal).
Ontology desugar(const Ontology& o);

// C EquivalentTo D -> C SubClassOf D, D SubClassOf C; likewise for roles.
Ontology split_equivalences(const Ontology& o);

// a : C -> {a} SubClassOf C;  (a, b) : R -> {a} SubClassOf exists R.{b}.
Ontology nominalize_abox(const Ontology& o);

// Replaces every forall R.C by not exists R.not C, bottom-up.
Concept eliminate_forall(const Concept& c);

}  // namespace dlkit
