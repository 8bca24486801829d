#include "dlkit/ast.hpp"

#include <utility>

namespace dlkit {

const char* to_string(NameKind kind) {
  switch (kind) {
    case NameKind::Individual: return "individual";
    case NameKind::Concept: return "concept";
    case NameKind::Role: return "role";
  }
  return "?";
}

NameKindConflict::NameKindConflict(std::string name, NameKind first, NameKind second)
    : Error("name '" + name + "' used as " + to_string(first) + " and as " + to_string(second)),
      name_(std::move(name)),
      first_(first),
      second_(second) {}

UnmappedName::UnmappedName(std::string name, NameKind kind)
    : Error(std::string(to_string(kind)) + " name '" + name + "' is not mapped by the interpretation"),
      name_(std::move(name)),
      kind_(kind) {}

CapExceeded::CapExceeded(unsigned long long cap)
    : Error("enumeration cap of " + std::to_string(cap) + " interpretations exceeded"), cap_(cap) {}

InverseOfUniversal::InverseOfUniversal(std::size_t axiom_index)
    : Error("axiom " + std::to_string(axiom_index) +
            ": characteristic of the universal role would need its inverse"),
      axiom_index_(axiom_index) {}

const char* to_string(Characteristic c) {
  switch (c) {
    case Characteristic::Transitive: return "Transitive";
    case Characteristic::Symmetric: return "Symmetric";
    case Characteristic::Asymmetric: return "Asymmetric";
    case Characteristic::Reflexive: return "Reflexive";
    case Characteristic::Irreflexive: return "Irreflexive";
  }
  return "?";
}

// --- Signature --------------------------------------------------------------

std::optional<NameKind> Signature::kind_of(std::string_view name) const {
  if (individuals.contains(name)) return NameKind::Individual;
  if (concepts.contains(name)) return NameKind::Concept;
  if (roles.contains(name)) return NameKind::Role;
  return std::nullopt;
}

void Signature::add(const std::string& name, NameKind kind) {
  if (auto existing = kind_of(name); existing && *existing != kind) {
    throw NameKindConflict(name, *existing, kind);
  }
  switch (kind) {
    case NameKind::Individual: individuals.insert(name); break;
    case NameKind::Concept: concepts.insert(name); break;
    case NameKind::Role: roles.insert(name); break;
  }
}

void Signature::merge(const Signature& other) {
  for (const auto& n : other.individuals) add(n, NameKind::Individual);
  for (const auto& n : other.concepts) add(n, NameKind::Concept);
  for (const auto& n : other.roles) add(n, NameKind::Role);
}

bool Signature::contains(const Signature& other) const {
  auto subset = [](const auto& small, const auto& big) {
    for (const auto& n : small) {
      if (!big.contains(n)) return false;
    }
    return true;
  };
  return subset(other.individuals, individuals) && subset(other.concepts, concepts) &&
         subset(other.roles, roles);
}

// --- RoleExpr ---------------------------------------------------------------

RoleExpr RoleExpr::inverse() const {
  switch (kind_) {
    case Kind::Named: return inverse_of(name_);
    case Kind::Inverse: return named(name_);
    case Kind::Universal: break;
  }
  return universal();
}

// --- Concept ----------------------------------------------------------------

Concept Concept::make(Kind k, std::string name, RoleExpr role, std::uint32_t count,
                      std::vector<Concept> children) {
  return Concept(std::make_shared<const Node>(k, std::move(name), std::move(role), count, std::move(children)));
}

Concept Concept::named(std::string name) {
  return make(Kind::Named, std::move(name), RoleExpr::universal(), 0, {});
}
Concept Concept::conj(Concept lhs, Concept rhs) {
  return make(Kind::And, {}, RoleExpr::universal(), 0, {std::move(lhs), std::move(rhs)});
}
Concept Concept::disj(Concept lhs, Concept rhs) {
  return make(Kind::Or, {}, RoleExpr::universal(), 0, {std::move(lhs), std::move(rhs)});
}
Concept Concept::negation(Concept operand) {
  return make(Kind::Not, {}, RoleExpr::universal(), 0, {std::move(operand)});
}
Concept Concept::top() {
  static const Concept t(make(Kind::Top, {}, RoleExpr::universal(), 0, {}));
  return t;
}
Concept Concept::bottom() {
  static const Concept b(make(Kind::Bottom, {}, RoleExpr::universal(), 0, {}));
  return b;
}
Concept Concept::exists(RoleExpr role, Concept filler) {
  return make(Kind::Exists, {}, std::move(role), 0, {std::move(filler)});
}
Concept Concept::forall(RoleExpr role, Concept filler) {
  return make(Kind::Forall, {}, std::move(role), 0, {std::move(filler)});
}
Concept Concept::at_least(std::uint32_t n, RoleExpr role, Concept filler) {
  return make(Kind::AtLeast, {}, std::move(role), n, {std::move(filler)});
}
Concept Concept::at_most(std::uint32_t n, RoleExpr role, Concept filler) {
  return make(Kind::AtMost, {}, std::move(role), n, {std::move(filler)});
}
Concept Concept::self(RoleExpr role) {
  return make(Kind::Self, {}, std::move(role), 0, {});
}
Concept Concept::nominal(std::string individual) {
  return make(Kind::Nominal, std::move(individual), RoleExpr::universal(), 0, {});
}

std::size_t Concept::node_count() const {
  std::size_t n = 1;
  for (const auto& child : node_->children) n += child.node_count();
  return n;
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.role == y.role && x.count == y.count &&
         x.children == y.children;
}

// --- Axiom ------------------------------------------------------------------

bool Axiom::is_abox() const {
  return is<ConceptAssertion>() || is<RoleAssertion>() || is<SameIndividual>() ||
         is<DifferentIndividuals>();
}

bool Axiom::is_tbox() const { return is<ConceptInclusion>() || is<ConceptEquivalence>(); }

bool Axiom::is_rbox() const { return !is_abox() && !is_tbox(); }

// --- Names ------------------------------------------------------------------

namespace {

void collect(const RoleExpr& r, Signature& out) {
  if (!r.is_universal()) out.add(r.name(), NameKind::Role);
}

void collect(const Concept& c, Signature& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named: out.add(c.name(), NameKind::Concept); break;
    case K::Nominal: out.add(c.name(), NameKind::Individual); break;
    case K::Top:
    case K::Bottom: break;
    case K::And:
    case K::Or:
      collect(c.lhs(), out);
      collect(c.rhs(), out);
      break;
    case K::Not: collect(c.operand(), out); break;
    case K::Self: collect(c.role(), out); break;
    case K::Exists:
    case K::Forall:
    case K::AtLeast:
    case K::AtMost:
      collect(c.role(), out);
      collect(c.filler(), out);
      break;
  }
}

struct Collector {
  Signature& out;

  void operator()(const ConceptAssertion& a) const {
    collect(a.expr, out);
    out.add(a.individual, NameKind::Individual);
  }
  void operator()(const RoleAssertion& a) const {
    collect(a.role, out);
    out.add(a.subject, NameKind::Individual);
    out.add(a.object, NameKind::Individual);
  }
  void operator()(const SameIndividual& a) const {
    out.add(a.lhs, NameKind::Individual);
    out.add(a.rhs, NameKind::Individual);
  }
  void operator()(const DifferentIndividuals& a) const {
    out.add(a.lhs, NameKind::Individual);
    out.add(a.rhs, NameKind::Individual);
  }
  void operator()(const ConceptInclusion& a) const {
    collect(a.sub, out);
    collect(a.super, out);
  }
  void operator()(const ConceptEquivalence& a) const {
    collect(a.lhs, out);
    collect(a.rhs, out);
  }
  void operator()(const RoleInclusion& a) const {
    collect(a.sub, out);
    collect(a.super, out);
  }
  void operator()(const RoleEquivalence& a) const {
    collect(a.lhs, out);
    collect(a.rhs, out);
  }
  void operator()(const RoleChainInclusion& a) const {
    collect(a.first, out);
    collect(a.second, out);
    collect(a.super, out);
  }
  void operator()(const RoleDisjointness& a) const {
    collect(a.lhs, out);
    collect(a.rhs, out);
  }
  void operator()(const RoleCharacteristic& a) const { collect(a.role, out); }
};

}  // namespace

Signature free_names(const Axiom& axiom) {
  Signature sig;
  std::visit(Collector{sig}, axiom.body);
  return sig;
}

Signature free_names(const Concept& c) {
  Signature sig;
  collect(c, sig);
  return sig;
}

Ontology build_ontology(std::vector<Axiom> axioms) {
  Ontology o;
  for (const auto& a : axioms) std::visit(Collector{o.signature}, a.body);
  o.axioms = std::move(axioms);
  return o;
}

}  // namespace dlkit
