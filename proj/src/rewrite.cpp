#include "dlkit/rewrite.hpp"

namespace dlkit {

namespace {

Ontology rebuild(const Ontology& source, std::vector<Axiom> axioms) {
  Ontology out = build_ontology(std::move(axioms));
  // Rewrites never drop names, but keep any declared-only ones as well.
  out.signature.merge(source.signature);
  return out;
}

}  // namespace

Ontology desugar(const Ontology& o) {
  std::vector<Axiom> out;
  out.reserve(o.axioms.size());
  for (std::size_t i = 0; i < o.axioms.size(); ++i) {
    const Axiom& a = o.axioms[i];
    const auto* ch = a.as<RoleCharacteristic>();
    if (!ch) {
      out.push_back(a);
      continue;
    }
    const RoleExpr& r = ch->role;
    switch (ch->kind) {
      case Characteristic::Transitive: out.emplace_back(RoleChainInclusion{r, r, r}, a.where); break;
      case Characteristic::Symmetric:
        if (r.is_universal()) throw InverseOfUniversal(i);
        out.emplace_back(RoleEquivalence{r, r.inverse()}, a.where);
        break;
      case Characteristic::Asymmetric:
        if (r.is_universal()) throw InverseOfUniversal(i);
        out.emplace_back(RoleDisjointness{r, r.inverse()}, a.where);
        break;
      case Characteristic::Reflexive:
        out.emplace_back(ConceptInclusion{Concept::top(), Concept::self(r)}, a.where);
        break;
      case Characteristic::Irreflexive:
        out.emplace_back(ConceptInclusion{Concept::top(), Concept::negation(Concept::self(r))}, a.where);
        break;
    }
  }
  return rebuild(o, std::move(out));
}

Ontology split_equivalences(const Ontology& o) {
  std::vector<Axiom> out;
  out.reserve(o.axioms.size());
  for (const auto& a : o.axioms) {
    if (const auto* ce = a.as<ConceptEquivalence>()) {
      out.emplace_back(ConceptInclusion{ce->lhs, ce->rhs}, a.where);
      out.emplace_back(ConceptInclusion{ce->rhs, ce->lhs}, a.where);
    } else if (const auto* re = a.as<RoleEquivalence>()) {
      out.emplace_back(RoleInclusion{re->lhs, re->rhs}, a.where);
      out.emplace_back(RoleInclusion{re->rhs, re->lhs}, a.where);
    } else {
      out.push_back(a);
    }
  }
  return rebuild(o, std::move(out));
}

Ontology nominalize_abox(const Ontology& o) {
  std::vector<Axiom> out;
  out.reserve(o.axioms.size());
  for (const auto& a : o.axioms) {
    if (const auto* ca = a.as<ConceptAssertion>()) {
      out.emplace_back(ConceptInclusion{Concept::nominal(ca->individual), ca->expr}, a.where);
    } else if (const auto* ra = a.as<RoleAssertion>()) {
      out.emplace_back(
          ConceptInclusion{Concept::nominal(ra->subject), Concept::exists(ra->role, Concept::nominal(ra->object))},
          a.where);
    } else {
      out.push_back(a);
    }
  }
  return rebuild(o, std::move(out));
}

Concept eliminate_forall(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::And: return Concept::conj(eliminate_forall(c.lhs()), eliminate_forall(c.rhs()));
    case K::Or: return Concept::disj(eliminate_forall(c.lhs()), eliminate_forall(c.rhs()));
    case K::Not: return Concept::negation(eliminate_forall(c.operand()));
    case K::Exists: return Concept::exists(c.role(), eliminate_forall(c.filler()));
    case K::Forall:
      return Concept::negation(Concept::exists(c.role(), Concept::negation(eliminate_forall(c.filler()))));
    case K::AtLeast: return Concept::at_least(c.count(), c.role(), eliminate_forall(c.filler()));
    case K::AtMost: return Concept::at_most(c.count(), c.role(), eliminate_forall(c.filler()));
    default: return c;
  }
}

}  // namespace dlkit
