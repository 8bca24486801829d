#include "dlkit/structural.hpp"

#include "dlkit/parser.hpp"

namespace dlkit {

namespace {

bool mentions_universal(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::And:
    case K::Or: return mentions_universal(c.lhs()) || mentions_universal(c.rhs());
    case K::Not: return mentions_universal(c.operand());
    case K::Self: return c.role().is_universal();
    case K::Exists:
    case K::Forall:
    case K::AtLeast:
    case K::AtMost: return c.role().is_universal() || mentions_universal(c.filler());
    default: return false;
  }
}

struct UniversalFinder {
  bool operator()(const ConceptAssertion& a) const { return mentions_universal(a.expr); }
  bool operator()(const RoleAssertion& a) const { return a.role.is_universal(); }
  bool operator()(const SameIndividual&) const { return false; }
  bool operator()(const DifferentIndividuals&) const { return false; }
  bool operator()(const ConceptInclusion& a) const { return mentions_universal(a.sub) || mentions_universal(a.super); }
  bool operator()(const ConceptEquivalence& a) const { return mentions_universal(a.lhs) || mentions_universal(a.rhs); }
  bool operator()(const RoleInclusion& a) const { return a.sub.is_universal() || a.super.is_universal(); }
  bool operator()(const RoleEquivalence& a) const { return a.lhs.is_universal() || a.rhs.is_universal(); }
  bool operator()(const RoleChainInclusion& a) const {
    return a.first.is_universal() || a.second.is_universal() || a.super.is_universal();
  }
  bool operator()(const RoleDisjointness& a) const { return a.lhs.is_universal() || a.rhs.is_universal(); }
  bool operator()(const RoleCharacteristic& a) const { return a.role.is_universal(); }
};

// Adds r and its inverse; returns whether anything was new.
bool mark(std::set<RoleExpr>& set, const RoleExpr& r) {
  bool changed = set.insert(r).second;
  changed |= set.insert(r.inverse()).second;
  return changed;
}

void check_concept(const Concept& c, const std::set<RoleExpr>& non_simple, std::size_t index,
                   const std::optional<SourceLocation>& where, std::vector<SimplicityViolation>& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::And:
    case K::Or:
      check_concept(c.lhs(), non_simple, index, where, out);
      check_concept(c.rhs(), non_simple, index, where, out);
      return;
    case K::Not: check_concept(c.operand(), non_simple, index, where, out); return;
    case K::Self:
    case K::AtLeast:
    case K::AtMost:
      if (non_simple.contains(c.role())) out.push_back({index, where, render(c), c.role()});
      if (!c.is(K::Self)) check_concept(c.filler(), non_simple, index, where, out);
      return;
    case K::Exists:
    case K::Forall: check_concept(c.filler(), non_simple, index, where, out); return;
    default: return;
  }
}

}  // namespace

bool has_role_chains(const Ontology& o) {
  for (const auto& a : o.axioms) {
    if (a.is<RoleChainInclusion>()) return true;
    if (auto* ch = a.as<RoleCharacteristic>(); ch && ch->kind == Characteristic::Transitive) return true;
  }
  return false;
}

std::set<RoleExpr> compute_nonsimple(const Ontology& o, const StructuralConfig& cfg) {
  std::set<RoleExpr> result;

  // Seeds: heads of complex role inclusions.
  for (const auto& a : o.axioms) {
    if (auto* chain = a.as<RoleChainInclusion>()) {
      mark(result, chain->super);
    } else if (auto* ch = a.as<RoleCharacteristic>(); ch && ch->kind == Characteristic::Transitive) {
      mark(result, ch->role);
    }
  }
  if (!cfg.universal_role_simple) {
    for (const auto& a : o.axioms) {
      if (std::visit(UniversalFinder{}, a.body)) {
        result.insert(RoleExpr::universal());
        break;
      }
    }
  }

  // Propagate along inclusions and equivalences until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : o.axioms) {
      if (auto* inc = a.as<RoleInclusion>()) {
        if (result.contains(inc->sub)) changed |= mark(result, inc->super);
      } else if (auto* eq = a.as<RoleEquivalence>()) {
        if (result.contains(eq->lhs)) changed |= mark(result, eq->rhs);
        if (result.contains(eq->rhs)) changed |= mark(result, eq->lhs);
      } else if (auto* ch = a.as<RoleCharacteristic>(); ch && ch->kind == Characteristic::Symmetric) {
        if (result.contains(ch->role)) changed |= mark(result, ch->role.inverse());
      }
    }
  }
  return result;
}

SimplicityReport validate_simplicity(const Ontology& o, const StructuralConfig& cfg) {
  SimplicityReport report;
  report.non_simple = compute_nonsimple(o, cfg);
  const auto& ns = report.non_simple;
  auto& out = report.violations;

  for (std::size_t i = 0; i < o.axioms.size(); ++i) {
    const Axiom& a = o.axioms[i];
    if (auto* d = a.as<RoleDisjointness>()) {
      if (ns.contains(d->lhs)) {
        out.push_back({i, a.where, "Disjoint", d->lhs});
      } else if (ns.contains(d->rhs)) {
        out.push_back({i, a.where, "Disjoint", d->rhs});
      }
    } else if (auto* ch = a.as<RoleCharacteristic>()) {
      const bool restricted = ch->kind == Characteristic::Asymmetric || ch->kind == Characteristic::Reflexive ||
                              ch->kind == Characteristic::Irreflexive;
      if (restricted && ns.contains(ch->role)) out.push_back({i, a.where, to_string(ch->kind), ch->role});
    } else if (auto* ca = a.as<ConceptAssertion>()) {
      check_concept(ca->expr, ns, i, a.where, out);
    } else if (auto* ci = a.as<ConceptInclusion>()) {
      check_concept(ci->sub, ns, i, a.where, out);
      check_concept(ci->super, ns, i, a.where, out);
    } else if (auto* ce = a.as<ConceptEquivalence>()) {
      check_concept(ce->lhs, ns, i, a.where, out);
      check_concept(ce->rhs, ns, i, a.where, out);
    }
  }
  return report;
}

}  // namespace dlkit
