#pragma once

// Random syntax for property tests. Everything is drawn from a caller-owned
// std::mt19937 so failures replay from the seed.

#include <random>
#include <string>
#include <vector>

#include "dlkit/ast.hpp"
#include "dlkit/semantics.hpp"

namespace dlkit::gen {

struct Vocabulary {
  std::vector<std::string> individuals;
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  bool universal = false;
  bool inverses = true;
};

struct ConceptShape {
  int depth = 2;
  bool nominals = true;
  bool self = true;
  bool counting = true;
  std::uint32_t max_count = 3;
};

struct AxiomShape {
  ConceptShape concepts;
  bool abox = true;
  bool tbox = true;
  bool rbox = true;
  bool characteristics = true;
};

int pick(std::mt19937& rng, int lo, int hi);
bool coin(std::mt19937& rng, double p = 0.5);

RoleExpr random_role(std::mt19937& rng, const Vocabulary& v);
Concept random_concept(std::mt19937& rng, const Vocabulary& v, const ConceptShape& shape = {});
Axiom random_axiom(std::mt19937& rng, const Vocabulary& v, const AxiomShape& shape = {});
Ontology random_ontology(std::mt19937& rng, const Vocabulary& v, int axioms, const AxiomShape& shape = {});

// Interpretation over `sig` with domain e0..e(n-1) and uniformly random
// extensions.
Interpretation random_interpretation(std::mt19937& rng, const Signature& sig, std::size_t n);

Signature signature_of(const Vocabulary& v);

}  // namespace dlkit::gen
