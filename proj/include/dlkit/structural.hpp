#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlkit/ast.hpp"

namespace dlkit {

struct StructuralConfig {
  // OWL 2 treats the universal role as non-simple.
  bool universal_role_simple = false;
};

struct SimplicityViolation {
  std::size_t axiom_index;
  std::optional<SourceLocation> where;
  // The restricted construct: "Disjoint", "Asymmetric", "Reflexive",
  // "Irreflexive", or the rendered Self / >= / <= concept.
  std::string construct;
  RoleExpr role;
};

struct SimplicityReport {
  std::set<RoleExpr> non_simple;
  std::vector<SimplicityViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Least set of role expressions closed under:
//   S o T SubRoleOf R            => R non-simple
//   R non-simple                 => inv(R) non-simple
//   R non-simple, R SubRoleOf S,
//   S EquivalentRole R or
//   R EquivalentRole S           => S non-simple
// Transitive(R) counts as R o R SubRoleOf R and Symmetric(R) as
// R EquivalentRole inv(R). The universal role is added when it occurs and
// the config does not declare it simple.
std::set<RoleExpr> compute_nonsimple(const Ontology& o, const StructuralConfig& cfg = {});

// Role disjointness, Self and number restrictions must use simple roles.
// Asymmetric, Reflexive and Irreflexive are checked as the restricted
// constructs they stand for.
SimplicityReport validate_simplicity(const Ontology& o, const StructuralConfig& cfg = {});

bool has_role_chains(const Ontology& o);

}  // namespace dlkit
