#include "dlkit/fragments.hpp"

namespace dlkit {

namespace {

void note_role(const RoleExpr& r, FeatureSet& f) {
  if (r.is_universal()) f.uses_universal_role = true;
  if (r.is_inverse()) f.uses_inverse = true;
}

void scan(const Concept& c, FeatureSet& f) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named: return;
    case K::Top: f.uses_top = true; return;
    case K::Bottom: f.uses_bottom = true; return;
    case K::Nominal: f.uses_nominals = true; return;
    case K::And:
    case K::Or:
      (c.is(K::And) ? f.uses_intersection : f.uses_union) = true;
      scan(c.lhs(), f);
      scan(c.rhs(), f);
      return;
    case K::Not:
      f.uses_complement = true;
      scan(c.operand(), f);
      return;
    case K::Self:
      f.uses_self = true;
      note_role(c.role(), f);
      return;
    case K::Exists:
    case K::Forall:
    case K::AtLeast:
    case K::AtMost:
      if (c.is(K::Exists)) f.uses_exists = true;
      if (c.is(K::Forall)) f.uses_forall = true;
      if (c.is(K::AtLeast) || c.is(K::AtMost)) f.uses_number_restrictions = true;
      note_role(c.role(), f);
      scan(c.filler(), f);
      return;
  }
}

struct Scanner {
  FeatureSet& f;

  void operator()(const ConceptAssertion& a) const { scan(a.expr, f); }
  void operator()(const RoleAssertion& a) const { note_role(a.role, f); }
  void operator()(const SameIndividual&) const {}
  void operator()(const DifferentIndividuals&) const {}
  void operator()(const ConceptInclusion& a) const {
    scan(a.sub, f);
    scan(a.super, f);
  }
  void operator()(const ConceptEquivalence& a) const {
    scan(a.lhs, f);
    scan(a.rhs, f);
  }
  void operator()(const RoleInclusion& a) const {
    f.uses_role_hierarchy = true;
    note_role(a.sub, f);
    note_role(a.super, f);
  }
  void operator()(const RoleEquivalence& a) const {
    f.uses_role_hierarchy = true;
    f.uses_role_equiv = true;
    note_role(a.lhs, f);
    note_role(a.rhs, f);
  }
  void operator()(const RoleChainInclusion& a) const {
    f.uses_role_composition = true;
    if (a.first == a.second && a.second == a.super) {
      f.uses_transitivity_pattern = true;
    } else {
      f.uses_other_composition = true;
    }
    note_role(a.first, f);
    note_role(a.second, f);
    note_role(a.super, f);
  }
  void operator()(const RoleDisjointness& a) const {
    f.uses_role_disjoint = true;
    note_role(a.lhs, f);
    note_role(a.rhs, f);
  }
  void operator()(const RoleCharacteristic& a) const {
    f.uses_characteristic[static_cast<std::size_t>(a.kind)] = true;
    note_role(a.role, f);
  }
};

bool el_concept(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named:
    case K::Top: return true;
    case K::And: return el_concept(c.lhs()) && el_concept(c.rhs());
    case K::Exists: return c.role().kind() == RoleExpr::Kind::Named && el_concept(c.filler());
    default: return false;
  }
}

bool elpp_role(const RoleExpr& r) { return !r.is_inverse(); }

bool elpp_concept(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named:
    case K::Top:
    case K::Bottom:
    case K::Nominal: return true;
    case K::Self: return elpp_role(c.role());
    case K::And: return elpp_concept(c.lhs()) && elpp_concept(c.rhs());
    case K::Exists: return elpp_role(c.role()) && elpp_concept(c.filler());
    default: return false;
  }
}

}  // namespace

FeatureSet detect_features(const Ontology& o) {
  FeatureSet f;
  for (const auto& a : o.axioms) {
    std::visit(Scanner{f}, a.body);
    if (a.is_abox()) f.has_abox = true;
    if (a.is_tbox()) f.has_tbox = true;
  }
  return f;
}

std::string dl_name(const FeatureSet& f) {
  const bool transitive = f.uses_transitivity_pattern || f.characteristic(Characteristic::Transitive);
  const bool other_characteristic =
      f.characteristic(Characteristic::Symmetric) || f.characteristic(Characteristic::Asymmetric) ||
      f.characteristic(Characteristic::Reflexive) || f.characteristic(Characteristic::Irreflexive);
  const bool r_letter = f.uses_other_composition || f.uses_self || f.uses_universal_role ||
                        f.uses_role_disjoint || other_characteristic;

  std::string name = transitive ? "S" : "ALC";
  if (r_letter) {
    name += 'R';
  } else if (f.uses_role_hierarchy) {
    name += 'H';
  }
  if (f.uses_nominals) name += 'O';
  if (f.uses_inverse) name += 'I';
  if (f.uses_number_restrictions) name += 'Q';
  return name;
}

bool is_el(const Ontology& o) {
  for (const auto& a : o.axioms) {
    if (a.is_rbox()) return false;
    bool ok = true;
    if (const auto* ca = a.as<ConceptAssertion>()) {
      ok = el_concept(ca->expr);
    } else if (const auto* ra = a.as<RoleAssertion>()) {
      ok = ra->role.kind() == RoleExpr::Kind::Named;
    } else if (const auto* ci = a.as<ConceptInclusion>()) {
      ok = el_concept(ci->sub) && el_concept(ci->super);
    } else if (const auto* ce = a.as<ConceptEquivalence>()) {
      ok = el_concept(ce->lhs) && el_concept(ce->rhs);
    }
    if (!ok) return false;
  }
  return true;
}

bool is_elpp(const Ontology& o) {
  for (const auto& a : o.axioms) {
    bool ok = true;
    if (const auto* ca = a.as<ConceptAssertion>()) {
      ok = elpp_concept(ca->expr);
    } else if (const auto* ra = a.as<RoleAssertion>()) {
      ok = elpp_role(ra->role);
    } else if (const auto* ci = a.as<ConceptInclusion>()) {
      ok = elpp_concept(ci->sub) && elpp_concept(ci->super);
    } else if (const auto* ce = a.as<ConceptEquivalence>()) {
      ok = elpp_concept(ce->lhs) && elpp_concept(ce->rhs);
    } else if (const auto* ri = a.as<RoleInclusion>()) {
      ok = elpp_role(ri->sub) && elpp_role(ri->super);
    } else if (const auto* re = a.as<RoleEquivalence>()) {
      ok = elpp_role(re->lhs) && elpp_role(re->rhs);
    } else if (const auto* rc = a.as<RoleChainInclusion>()) {
      ok = elpp_role(rc->first) && elpp_role(rc->second) && elpp_role(rc->super);
    } else if (const auto* rd = a.as<RoleDisjointness>()) {
      ok = elpp_role(rd->lhs) && elpp_role(rd->rhs);
    } else if (const auto* ch = a.as<RoleCharacteristic>()) {
      ok = elpp_role(ch->role) && ch->kind != Characteristic::Symmetric &&
           ch->kind != Characteristic::Asymmetric && ch->kind != Characteristic::Irreflexive;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace dlkit
