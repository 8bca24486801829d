#pragma once

// Syntactic feature detection and DL naming (ALC, S, H, R, O, I, Q; EL, EL++).

#include <array>
#include <string>

#include "dlkit/ast.hpp"

namespace dlkit {

struct FeatureSet {
  bool uses_union = false;
  bool uses_complement = false;
  bool uses_forall = false;
  bool uses_exists = false;
  bool uses_intersection = false;
  bool uses_top = false;
  bool uses_bottom = false;
  bool uses_nominals = false;
  bool uses_self = false;
  bool uses_universal_role = false;
  bool uses_inverse = false;
  bool uses_number_restrictions = false;
  // Role inclusions or equivalences without composition.
  bool uses_role_hierarchy = false;
  bool uses_role_composition = false;
  // Some R o R SubRoleOf R with all three roles identical.
  bool uses_transitivity_pattern = false;
  // Some role composition not of that shape.
  bool uses_other_composition = false;
  bool uses_role_equiv = false;
  bool uses_role_disjoint = false;
  std::array<bool, 5> uses_characteristic{};  // indexed by Characteristic
  bool has_abox = false;
  bool has_tbox = false;

  bool characteristic(Characteristic c) const { return uses_characteristic[static_cast<std::size_t>(c)]; }

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

FeatureSet detect_features(const Ontology& o);

// Base "ALC", or "S" with transitive roles; then R (or else H), O, I, Q.
std::string dl_name(const FeatureSet& f);

// Concepts built from names, Top, and, exists over role names; no RBox axioms.
bool is_el(const Ontology& o);

// Concepts built from names, Top, Bottom, and, exists, Self and nominals over
// role names or the universal role; no inverse roles; every axiom type except
// Symmetric, Asymmetric and Irreflexive. Meant for the undesugared ontology.
bool is_elpp(const Ontology& o);

}  // namespace dlkit
