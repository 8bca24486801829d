#include "generators.hpp"

namespace dlkit::gen {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

const std::string& any_of(std::mt19937& rng, const std::vector<std::string>& names) {
  return names[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(names.size()) - 1))];
}

RoleExpr named_or_inverse(std::mt19937& rng, const Vocabulary& v) {
  const std::string& r = any_of(rng, v.roles);
  return v.inverses && coin(rng, 0.3) ? RoleExpr::inverse_of(r) : RoleExpr::named(r);
}

Concept leaf(std::mt19937& rng, const Vocabulary& v, const ConceptShape& shape) {
  while (true) {
    switch (pick(rng, 0, 7)) {
      case 0: return Concept::top();
      case 1: return Concept::bottom();
      case 2:
        if (shape.nominals && !v.individuals.empty()) return Concept::nominal(any_of(rng, v.individuals));
        break;
      case 3:
        if (shape.self && (!v.roles.empty() || v.universal)) return Concept::self(random_role(rng, v));
        break;
      default:
        if (!v.concepts.empty()) return Concept::named(any_of(rng, v.concepts));
        break;
    }
  }
}

}  // namespace

RoleExpr random_role(std::mt19937& rng, const Vocabulary& v) {
  if (v.roles.empty() || (v.universal && coin(rng, 0.15))) return RoleExpr::universal();
  return named_or_inverse(rng, v);
}

Concept random_concept(std::mt19937& rng, const Vocabulary& v, const ConceptShape& shape) {
  if (shape.depth <= 0 || coin(rng, 0.25)) return leaf(rng, v, shape);
  ConceptShape inner = shape;
  inner.depth = shape.depth - 1;
  const bool roles = !v.roles.empty() || v.universal;
  while (true) {
    switch (pick(rng, 0, 7)) {
      case 0: return Concept::conj(random_concept(rng, v, inner), random_concept(rng, v, inner));
      case 1: return Concept::disj(random_concept(rng, v, inner), random_concept(rng, v, inner));
      case 2: return Concept::negation(random_concept(rng, v, inner));
      case 3:
        if (roles) return Concept::exists(random_role(rng, v), random_concept(rng, v, inner));
        break;
      case 4:
        if (roles) return Concept::forall(random_role(rng, v), random_concept(rng, v, inner));
        break;
      case 5:
        if (roles && shape.counting) {
          auto n = static_cast<std::uint32_t>(pick(rng, 0, static_cast<int>(shape.max_count)));
          return Concept::at_least(n, random_role(rng, v), random_concept(rng, v, inner));
        }
        break;
      case 6:
        if (roles && shape.counting) {
          auto n = static_cast<std::uint32_t>(pick(rng, 0, static_cast<int>(shape.max_count)));
          return Concept::at_most(n, random_role(rng, v), random_concept(rng, v, inner));
        }
        break;
      default: return leaf(rng, v, shape);
    }
  }
}

Axiom random_axiom(std::mt19937& rng, const Vocabulary& v, const AxiomShape& shape) {
  const bool inds = !v.individuals.empty();
  const bool roles = !v.roles.empty();
  while (true) {
    switch (pick(rng, 0, 13)) {
      case 0:
        if (shape.abox && inds) return ConceptAssertion{random_concept(rng, v, shape.concepts), any_of(rng, v.individuals)};
        break;
      case 1:
        if (shape.abox && inds && roles) {
          return RoleAssertion{named_or_inverse(rng, v), any_of(rng, v.individuals), any_of(rng, v.individuals)};
        }
        break;
      case 2:
        if (shape.abox && inds) return SameIndividual{any_of(rng, v.individuals), any_of(rng, v.individuals)};
        break;
      case 3:
        if (shape.abox && inds) return DifferentIndividuals{any_of(rng, v.individuals), any_of(rng, v.individuals)};
        break;
      case 4:
      case 5:
        if (shape.tbox) return ConceptInclusion{random_concept(rng, v, shape.concepts), random_concept(rng, v, shape.concepts)};
        break;
      case 6:
        if (shape.tbox) {
          return ConceptEquivalence{random_concept(rng, v, shape.concepts), random_concept(rng, v, shape.concepts)};
        }
        break;
      case 7:
        if (shape.rbox && roles) return RoleInclusion{random_role(rng, v), random_role(rng, v)};
        break;
      case 8:
        if (shape.rbox && roles) return RoleEquivalence{random_role(rng, v), random_role(rng, v)};
        break;
      case 9:
        if (shape.rbox && roles) return RoleChainInclusion{random_role(rng, v), random_role(rng, v), random_role(rng, v)};
        break;
      case 10:
        if (shape.rbox && roles) return RoleDisjointness{random_role(rng, v), random_role(rng, v)};
        break;
      default:
        if (shape.rbox && shape.characteristics && roles) {
          auto kind = static_cast<Characteristic>(pick(rng, 0, 4));
          return RoleCharacteristic{kind, named_or_inverse(rng, v)};
        }
        break;
    }
  }
}

Ontology random_ontology(std::mt19937& rng, const Vocabulary& v, int axioms, const AxiomShape& shape) {
  std::vector<Axiom> list;
  for (int k = 0; k < axioms; ++k) list.push_back(random_axiom(rng, v, shape));
  return build_ontology(std::move(list));
}

Interpretation random_interpretation(std::mt19937& rng, const Signature& sig, std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < n; ++k) ids.push_back("e" + std::to_string(k));
  Interpretation i(ids);
  std::uniform_int_distribution<std::uint64_t> bits;
  const std::uint64_t mask = ElementSet::full(n).bits();
  for (const auto& c : sig.concepts) i.set_concept(c, ElementSet(bits(rng) & mask));
  for (const auto& r : sig.roles) {
    Relation rel(n);
    for (auto& row : rel.rows()) row = ElementSet(bits(rng) & mask);
    i.set_role(r, rel);
  }
  for (const auto& a : sig.individuals) i.set_individual(a, static_cast<Element>(pick(rng, 0, static_cast<int>(n) - 1)));
  return i;
}

Signature signature_of(const Vocabulary& v) {
  Signature sig;
  for (const auto& n : v.individuals) sig.add(n, NameKind::Individual);
  for (const auto& n : v.concepts) sig.add(n, NameKind::Concept);
  for (const auto& n : v.roles) sig.add(n, NameKind::Role);
  return sig;
}

}  // namespace dlkit::gen
