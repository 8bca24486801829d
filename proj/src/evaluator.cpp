#include "evaluator.hpp"

#include <iterator>

namespace dlkit::detail {

RoleRef RoleRef::inverse() const {
  switch (kind) {
    case RoleExpr::Kind::Named: return {RoleExpr::Kind::Inverse, slot};
    case RoleExpr::Kind::Inverse: return {RoleExpr::Kind::Named, slot};
    case RoleExpr::Kind::Universal: break;
  }
  return *this;
}

ElementSet successors(const Structure& s, RoleRef r, Element x) {
  switch (r.kind) {
    case RoleExpr::Kind::Universal: return ElementSet::full(s.size);
    case RoleExpr::Kind::Named: return s.role_rows[r.slot * s.size + x];
    case RoleExpr::Kind::Inverse: {
      ElementSet pred;
      const auto* rows = s.role_rows.data() + r.slot * s.size;
      for (Element y = 0; y < s.size; ++y) {
        if (rows[y].contains(x)) pred.insert(y);
      }
      return pred;
    }
  }
  return {};
}

Bounds successors(const PartialStructure& s, RoleRef r, Element x) {
  switch (r.kind) {
    case RoleExpr::Kind::Universal: return {ElementSet::full(s.size), ElementSet::full(s.size)};
    case RoleExpr::Kind::Named: return s.role_rows[r.slot * s.size + x];
    case RoleExpr::Kind::Inverse: {
      Bounds pred;
      const auto* rows = s.role_rows.data() + r.slot * s.size;
      for (Element y = 0; y < s.size; ++y) {
        if (rows[y].lo.contains(x)) pred.lo.insert(y);
        if (rows[y].hi.contains(x)) pred.hi.insert(y);
      }
      return pred;
    }
  }
  return {};
}

namespace {

template <class Pred>
bool all_elements(const Structure& s, Pred&& pred) {
  for (Element x = 0; x < s.size; ++x) {
    if (!pred(x)) return false;
  }
  return true;
}

// Successors of x under first ∘ second.
ElementSet composed(const Structure& s, RoleRef first, RoleRef second, Element x) {
  ElementSet out;
  ElementSet mid = successors(s, first, x);
  for (Element y = 0; y < s.size; ++y) {
    if (mid.contains(y)) out |= successors(s, second, y);
  }
  return out;
}

Bounds composed(const PartialStructure& s, RoleRef first, RoleRef second, Element x) {
  Bounds out;
  Bounds mid = successors(s, first, x);
  for (Element y = 0; y < s.size; ++y) {
    if (!mid.hi.contains(y)) continue;
    Bounds next = successors(s, second, y);
    if (mid.lo.contains(y)) out.lo |= next.lo;
    out.hi |= next.hi;
  }
  return out;
}

// Collects per-element evidence: `refutes` shows the axiom fails in every
// completion, `confirms` that it holds in every completion.
class Verdict {
 public:
  void refute_if(bool b) { refuted_ = refuted_ || b; }
  void confirm_unless(bool b) { confirmed_ = confirmed_ && !b; }
  Truth get() const { return refuted_ ? Truth::False : confirmed_ ? Truth::True : Truth::Unknown; }

 private:
  bool refuted_ = false;
  bool confirmed_ = true;
};

void include(Verdict& v, Bounds sub, Bounds super) {
  v.refute_if(!sub.lo.subset_of(super.hi));
  v.confirm_unless(!sub.hi.subset_of(super.lo));
}

void disjoint(Verdict& v, Bounds a, Bounds b) {
  v.refute_if(!(a.lo & b.lo).empty());
  v.confirm_unless(!(a.hi & b.hi).empty());
}

}  // namespace

RoleRef Program::add_role(const RoleExpr& r) {
  if (r.is_universal()) return {RoleExpr::Kind::Universal, 0};
  return {r.kind(), resolve_(r.name(), NameKind::Role)};
}

std::uint32_t Program::emit(Op op) {
  ops_.push_back(op);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

std::uint32_t Program::add_concept(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named: return emit({K::Named, resolve_(c.name(), NameKind::Concept)});
    case K::Nominal: return emit({K::Nominal, resolve_(c.name(), NameKind::Individual)});
    case K::Top:
    case K::Bottom: return emit({c.kind()});
    case K::And:
    case K::Or: {
      auto a = add_concept(c.lhs());
      auto b = add_concept(c.rhs());
      return emit({c.kind(), a, b});
    }
    case K::Not: return emit({K::Not, add_concept(c.operand())});
    case K::Self: return emit({K::Self, 0, 0, 0, add_role(c.role())});
    case K::Exists:
    case K::Forall:
    case K::AtLeast:
    case K::AtMost: {
      auto role = add_role(c.role());
      auto filler = add_concept(c.filler());
      return emit({c.kind(), filler, 0, c.count(), role});
    }
  }
  return emit({K::Bottom});
}

std::uint32_t Program::add_axiom(const Axiom& axiom) {
  CompiledAxiom out{};
  auto ind = [&](const std::string& n) { return resolve_(n, NameKind::Individual); };
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ConceptAssertion>) {
          out.kind = AxiomKind::ConceptAssertion;
          out.c1 = add_concept(a.expr);
          out.i1 = ind(a.individual);
        } else if constexpr (std::is_same_v<T, RoleAssertion>) {
          out.kind = AxiomKind::RoleAssertion;
          out.r1 = add_role(a.role);
          out.i1 = ind(a.subject);
          out.i2 = ind(a.object);
        } else if constexpr (std::is_same_v<T, SameIndividual>) {
          out.kind = AxiomKind::Same;
          out.i1 = ind(a.lhs);
          out.i2 = ind(a.rhs);
        } else if constexpr (std::is_same_v<T, DifferentIndividuals>) {
          out.kind = AxiomKind::Different;
          out.i1 = ind(a.lhs);
          out.i2 = ind(a.rhs);
        } else if constexpr (std::is_same_v<T, ConceptInclusion>) {
          out.kind = AxiomKind::ConceptIncl;
          out.c1 = add_concept(a.sub);
          out.c2 = add_concept(a.super);
        } else if constexpr (std::is_same_v<T, ConceptEquivalence>) {
          out.kind = AxiomKind::ConceptEquiv;
          out.c1 = add_concept(a.lhs);
          out.c2 = add_concept(a.rhs);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          out.kind = AxiomKind::RoleIncl;
          out.r1 = add_role(a.sub);
          out.r2 = add_role(a.super);
        } else if constexpr (std::is_same_v<T, RoleEquivalence>) {
          out.kind = AxiomKind::RoleEquiv;
          out.r1 = add_role(a.lhs);
          out.r2 = add_role(a.rhs);
        } else if constexpr (std::is_same_v<T, RoleChainInclusion>) {
          out.kind = AxiomKind::Chain;
          out.r1 = add_role(a.first);
          out.r2 = add_role(a.second);
          out.r3 = add_role(a.super);
        } else if constexpr (std::is_same_v<T, RoleDisjointness>) {
          out.kind = AxiomKind::RoleDisjoint;
          out.r1 = add_role(a.lhs);
          out.r2 = add_role(a.rhs);
        } else if constexpr (std::is_same_v<T, RoleCharacteristic>) {
          switch (a.kind) {
            case Characteristic::Transitive: out.kind = AxiomKind::Transitive; break;
            case Characteristic::Symmetric: out.kind = AxiomKind::Symmetric; break;
            case Characteristic::Asymmetric: out.kind = AxiomKind::Asymmetric; break;
            case Characteristic::Reflexive: out.kind = AxiomKind::Reflexive; break;
            case Characteristic::Irreflexive: out.kind = AxiomKind::Irreflexive; break;
          }
          out.r1 = add_role(a.role);
        }
      },
      axiom.body);
  axioms_.push_back(out);
  return static_cast<std::uint32_t>(axioms_.size() - 1);
}

void Program::evaluate(const Structure& s, std::vector<ElementSet>& v) const {
  using K = Concept::Kind;
  v.resize(ops_.size());
  const ElementSet domain = ElementSet::full(s.size);
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const Op& op = ops_[k];
    ElementSet out;
    switch (op.kind) {
      case K::Named: out = s.concepts[op.a]; break;
      case K::Nominal: out = ElementSet::single(s.individuals[op.a]); break;
      case K::Top: out = domain; break;
      case K::Bottom: break;
      case K::And: out = v[op.a] & v[op.b]; break;
      case K::Or: out = v[op.a] | v[op.b]; break;
      case K::Not: out = domain.minus(v[op.a]); break;
      case K::Self:
        for (Element x = 0; x < s.size; ++x) {
          if (successors(s, op.role, x).contains(x)) out.insert(x);
        }
        break;
      case K::Exists:
        for (Element x = 0; x < s.size; ++x) {
          if (!(successors(s, op.role, x) & v[op.a]).empty()) out.insert(x);
        }
        break;
      case K::Forall:
        for (Element x = 0; x < s.size; ++x) {
          if (successors(s, op.role, x).subset_of(v[op.a])) out.insert(x);
        }
        break;
      case K::AtLeast:
        for (Element x = 0; x < s.size; ++x) {
          if ((successors(s, op.role, x) & v[op.a]).size() >= op.n) out.insert(x);
        }
        break;
      case K::AtMost:
        for (Element x = 0; x < s.size; ++x) {
          if ((successors(s, op.role, x) & v[op.a]).size() <= op.n) out.insert(x);
        }
        break;
    }
    v[k] = out;
  }
}

bool Program::axiom_holds(std::uint32_t index, const Structure& s, const std::vector<ElementSet>& v) const {
  const CompiledAxiom& a = axioms_[index];
  switch (a.kind) {
    case AxiomKind::ConceptAssertion: return v[a.c1].contains(s.individuals[a.i1]);
    case AxiomKind::RoleAssertion: return successors(s, a.r1, s.individuals[a.i1]).contains(s.individuals[a.i2]);
    case AxiomKind::Same: return s.individuals[a.i1] == s.individuals[a.i2];
    case AxiomKind::Different: return s.individuals[a.i1] != s.individuals[a.i2];
    case AxiomKind::ConceptIncl: return v[a.c1].subset_of(v[a.c2]);
    case AxiomKind::ConceptEquiv: return v[a.c1] == v[a.c2];
    case AxiomKind::RoleIncl:
      return all_elements(s, [&](Element x) { return successors(s, a.r1, x).subset_of(successors(s, a.r2, x)); });
    case AxiomKind::RoleEquiv:
      return all_elements(s, [&](Element x) { return successors(s, a.r1, x) == successors(s, a.r2, x); });
    case AxiomKind::Chain:
      return all_elements(s, [&](Element x) { return composed(s, a.r1, a.r2, x).subset_of(successors(s, a.r3, x)); });
    case AxiomKind::RoleDisjoint:
      return all_elements(s, [&](Element x) { return (successors(s, a.r1, x) & successors(s, a.r2, x)).empty(); });
    case AxiomKind::Transitive:
      return all_elements(s, [&](Element x) { return composed(s, a.r1, a.r1, x).subset_of(successors(s, a.r1, x)); });
    case AxiomKind::Symmetric:
      return all_elements(s, [&](Element x) { return successors(s, a.r1, x) == successors(s, a.r1.inverse(), x); });
    case AxiomKind::Asymmetric:
      return all_elements(
          s, [&](Element x) { return (successors(s, a.r1, x) & successors(s, a.r1.inverse(), x)).empty(); });
    case AxiomKind::Reflexive:
      return all_elements(s, [&](Element x) { return successors(s, a.r1, x).contains(x); });
    case AxiomKind::Irreflexive:
      return all_elements(s, [&](Element x) { return !successors(s, a.r1, x).contains(x); });
  }
  return false;
}

bool Program::all_hold(const Structure& s, std::vector<ElementSet>& values) const {
  evaluate(s, values);
  for (std::uint32_t k = 0; k < axioms_.size(); ++k) {
    if (!axiom_holds(k, s, values)) return false;
  }
  return true;
}

void Program::evaluate(const PartialStructure& s, std::vector<Bounds>& v) const {
  using K = Concept::Kind;
  v.resize(ops_.size());
  const ElementSet domain = ElementSet::full(s.size);
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const Op& op = ops_[k];
    Bounds out;
    switch (op.kind) {
      case K::Named: out = s.concepts[op.a]; break;
      case K::Nominal:
        if (s.individuals[op.a] == kUnassigned) {
          out.hi = domain;
        } else {
          out.lo = out.hi = ElementSet::single(s.individuals[op.a]);
        }
        break;
      case K::Top: out = {domain, domain}; break;
      case K::Bottom: break;
      case K::And: out = {v[op.a].lo & v[op.b].lo, v[op.a].hi & v[op.b].hi}; break;
      case K::Or: out = {v[op.a].lo | v[op.b].lo, v[op.a].hi | v[op.b].hi}; break;
      case K::Not: out = {domain.minus(v[op.a].hi), domain.minus(v[op.a].lo)}; break;
      case K::Self:
        for (Element x = 0; x < s.size; ++x) {
          Bounds r = successors(s, op.role, x);
          if (r.lo.contains(x)) out.lo.insert(x);
          if (r.hi.contains(x)) out.hi.insert(x);
        }
        break;
      case K::Exists:
        for (Element x = 0; x < s.size; ++x) {
          Bounds r = successors(s, op.role, x);
          if (!(r.lo & v[op.a].lo).empty()) out.lo.insert(x);
          if (!(r.hi & v[op.a].hi).empty()) out.hi.insert(x);
        }
        break;
      case K::Forall:
        for (Element x = 0; x < s.size; ++x) {
          Bounds r = successors(s, op.role, x);
          if (r.hi.subset_of(v[op.a].lo)) out.lo.insert(x);
          if (r.lo.subset_of(v[op.a].hi)) out.hi.insert(x);
        }
        break;
      case K::AtLeast:
        for (Element x = 0; x < s.size; ++x) {
          Bounds r = successors(s, op.role, x);
          if ((r.lo & v[op.a].lo).size() >= op.n) out.lo.insert(x);
          if ((r.hi & v[op.a].hi).size() >= op.n) out.hi.insert(x);
        }
        break;
      case K::AtMost:
        for (Element x = 0; x < s.size; ++x) {
          Bounds r = successors(s, op.role, x);
          if ((r.hi & v[op.a].hi).size() <= op.n) out.lo.insert(x);
          if ((r.lo & v[op.a].lo).size() <= op.n) out.hi.insert(x);
        }
        break;
    }
    v[k] = out;
  }
}

Truth Program::axiom_truth(std::uint32_t index, const PartialStructure& s, const std::vector<Bounds>& v) const {
  const CompiledAxiom& a = axioms_[index];
  const Element i1 = s.individuals.empty() ? kUnassigned : s.individuals[a.i1];
  const Element i2 = s.individuals.empty() ? kUnassigned : s.individuals[a.i2];
  Verdict out;
  auto each = [&](auto&& fn) {
    for (Element x = 0; x < s.size; ++x) fn(x);
  };
  switch (a.kind) {
    case AxiomKind::ConceptAssertion:
      if (i1 == kUnassigned) return Truth::Unknown;
      out.refute_if(!v[a.c1].hi.contains(i1));
      out.confirm_unless(!v[a.c1].lo.contains(i1));
      break;
    case AxiomKind::RoleAssertion: {
      if (i1 == kUnassigned || i2 == kUnassigned) return Truth::Unknown;
      Bounds r = successors(s, a.r1, i1);
      out.refute_if(!r.hi.contains(i2));
      out.confirm_unless(!r.lo.contains(i2));
      break;
    }
    case AxiomKind::Same:
    case AxiomKind::Different:
      if (i1 == kUnassigned || i2 == kUnassigned) return Truth::Unknown;
      return ((i1 == i2) == (a.kind == AxiomKind::Same)) ? Truth::True : Truth::False;
    case AxiomKind::ConceptIncl: include(out, v[a.c1], v[a.c2]); break;
    case AxiomKind::ConceptEquiv:
      include(out, v[a.c1], v[a.c2]);
      include(out, v[a.c2], v[a.c1]);
      break;
    case AxiomKind::RoleIncl:
      each([&](Element x) { include(out, successors(s, a.r1, x), successors(s, a.r2, x)); });
      break;
    case AxiomKind::RoleEquiv:
      each([&](Element x) {
        include(out, successors(s, a.r1, x), successors(s, a.r2, x));
        include(out, successors(s, a.r2, x), successors(s, a.r1, x));
      });
      break;
    case AxiomKind::Chain:
      each([&](Element x) { include(out, composed(s, a.r1, a.r2, x), successors(s, a.r3, x)); });
      break;
    case AxiomKind::RoleDisjoint:
      each([&](Element x) { disjoint(out, successors(s, a.r1, x), successors(s, a.r2, x)); });
      break;
    case AxiomKind::Transitive:
      each([&](Element x) { include(out, composed(s, a.r1, a.r1, x), successors(s, a.r1, x)); });
      break;
    case AxiomKind::Symmetric:
      each([&](Element x) {
        include(out, successors(s, a.r1, x), successors(s, a.r1.inverse(), x));
        include(out, successors(s, a.r1.inverse(), x), successors(s, a.r1, x));
      });
      break;
    case AxiomKind::Asymmetric:
      each([&](Element x) { disjoint(out, successors(s, a.r1, x), successors(s, a.r1.inverse(), x)); });
      break;
    case AxiomKind::Reflexive:
      each([&](Element x) {
        Bounds r = successors(s, a.r1, x);
        out.refute_if(!r.hi.contains(x));
        out.confirm_unless(!r.lo.contains(x));
      });
      break;
    case AxiomKind::Irreflexive:
      each([&](Element x) {
        Bounds r = successors(s, a.r1, x);
        out.refute_if(r.lo.contains(x));
        out.confirm_unless(r.hi.contains(x));
      });
      break;
  }
  return out.get();
}

// --- DenseInterpretation ----------------------------------------------------

DenseInterpretation::DenseInterpretation(const Interpretation& i) : source_(i) {
  for (const auto& [name, ext] : i.concepts()) concepts_.push_back(ext);
  for (const auto& [name, rel] : i.roles()) {
    role_rows_.insert(role_rows_.end(), rel.rows().begin(), rel.rows().end());
  }
  for (const auto& [name, e] : i.individuals()) individuals_.push_back(e);
}

Structure DenseInterpretation::view() const {
  return Structure{source_.size(), concepts_, role_rows_, individuals_};
}

std::uint32_t DenseInterpretation::slot(const std::string& name, NameKind kind) const {
  auto index_in = [&](const auto& map) {
    auto it = map.find(name);
    if (it == map.end()) throw UnmappedName(name, kind);
    return static_cast<std::uint32_t>(std::distance(map.begin(), it));
  };
  switch (kind) {
    case NameKind::Concept: return index_in(source_.concepts());
    case NameKind::Role: return index_in(source_.roles());
    case NameKind::Individual: return index_in(source_.individuals());
  }
  throw UnmappedName(name, kind);
}

}  // namespace dlkit::detail
