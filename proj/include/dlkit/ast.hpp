#pragma once

// Core data model: names, role and concept expressions, axioms, ontologies.
//
// Expressions are immutable values. Concepts share structure through
// reference-counted nodes, so copying is cheap and values can be handed to
// concurrent readers without synchronization.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "dlkit/error.hpp"

namespace dlkit {

struct Signature {
  std::set<std::string, std::less<>> individuals;
  std::set<std::string, std::less<>> concepts;
  std::set<std::string, std::less<>> roles;

  bool empty() const { return individuals.empty() && concepts.empty() && roles.empty(); }

  // Adds `name` with `kind`; throws NameKindConflict if it already has another kind.
  void add(const std::string& name, NameKind kind);
  std::optional<NameKind> kind_of(std::string_view name) const;
  // Union with conflict checking.
  void merge(const Signature& other);
  bool contains(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// R ::= U | N_R | N_R⁻. An inverse always wraps a role name.
class RoleExpr {
 public:
  enum class Kind : std::uint8_t { Universal, Named, Inverse };

  static RoleExpr universal() { return RoleExpr(Kind::Universal, {}); }
  static RoleExpr named(std::string name) { return RoleExpr(Kind::Named, std::move(name)); }
  static RoleExpr inverse_of(std::string name) { return RoleExpr(Kind::Inverse, std::move(name)); }

  Kind kind() const { return kind_; }
  bool is_universal() const { return kind_ == Kind::Universal; }
  bool is_inverse() const { return kind_ == Kind::Inverse; }
  // Role name; empty for the universal role.
  const std::string& name() const { return name_; }

  // R⁻ for a name, S for S⁻. The universal role is returned unchanged, which
  // is its semantic inverse.
  RoleExpr inverse() const;

  friend auto operator<=>(const RoleExpr&, const RoleExpr&) = default;
  friend bool operator==(const RoleExpr&, const RoleExpr&) = default;

 private:
  RoleExpr(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
};

class Concept {
 public:
  enum class Kind : std::uint8_t {
    Named, And, Or, Not, Top, Bottom, Exists, Forall, AtLeast, AtMost, Self, Nominal
  };

  static Concept named(std::string name);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept negation(Concept operand);
  static Concept top();
  static Concept bottom();
  static Concept exists(RoleExpr role, Concept filler);
  static Concept forall(RoleExpr role, Concept filler);
  static Concept at_least(std::uint32_t n, RoleExpr role, Concept filler);
  static Concept at_most(std::uint32_t n, RoleExpr role, Concept filler);
  static Concept self(RoleExpr role);
  static Concept nominal(std::string individual);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  // Concept name (Named) or individual name (Nominal).
  const std::string& name() const { return node_->name; }
  // Role of Exists, Forall, AtLeast, AtMost and Self.
  const RoleExpr& role() const { return node_->role; }
  std::uint32_t count() const { return node_->count; }
  // And/Or: both; Not: lhs() only; quantifiers: filler().
  const Concept& lhs() const { return node_->children[0]; }
  const Concept& rhs() const { return node_->children[1]; }
  const Concept& operand() const { return node_->children[0]; }
  const Concept& filler() const { return node_->children[0]; }

  std::size_t node_count() const;

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node {
    Node(Kind k, std::string n, RoleExpr r, std::uint32_t c, std::vector<Concept> ch)
        : kind(k), name(std::move(n)), role(std::move(r)), count(c), children(std::move(ch)) {}

    Kind kind;
    std::string name;
    RoleExpr role;
    std::uint32_t count;
    std::vector<Concept> children;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept make(Kind k, std::string name, RoleExpr role, std::uint32_t count, std::vector<Concept> children);

  std::shared_ptr<const Node> node_;
};

enum class Characteristic : std::uint8_t { Transitive, Symmetric, Asymmetric, Reflexive, Irreflexive };

const char* to_string(Characteristic c);

// C(a)
struct ConceptAssertion {
  Concept expr;
  std::string individual;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};
// R(a, b)
struct RoleAssertion {
  RoleExpr role;
  std::string subject;
  std::string object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};
// a ≈ b
struct SameIndividual {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const SameIndividual&, const SameIndividual&) = default;
};
// a ≉ b
struct DifferentIndividuals {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const DifferentIndividuals&, const DifferentIndividuals&) = default;
};
struct ConceptInclusion {
  Concept sub;
  Concept super;
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
};
struct ConceptEquivalence {
  Concept lhs;
  Concept rhs;
  friend bool operator==(const ConceptEquivalence&, const ConceptEquivalence&) = default;
};
struct RoleInclusion {
  RoleExpr sub;
  RoleExpr super;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};
struct RoleEquivalence {
  RoleExpr lhs;
  RoleExpr rhs;
  friend bool operator==(const RoleEquivalence&, const RoleEquivalence&) = default;
};
// first ∘ second ⊑ super; composition is binary and never on the right.
struct RoleChainInclusion {
  RoleExpr first;
  RoleExpr second;
  RoleExpr super;
  friend bool operator==(const RoleChainInclusion&, const RoleChainInclusion&) = default;
};
struct RoleDisjointness {
  RoleExpr lhs;
  RoleExpr rhs;
  friend bool operator==(const RoleDisjointness&, const RoleDisjointness&) = default;
};
// Sugar; removed by rewrite::desugar.
struct RoleCharacteristic {
  Characteristic kind;
  RoleExpr role;
  friend bool operator==(const RoleCharacteristic&, const RoleCharacteristic&) = default;
};

using AxiomBody = std::variant<ConceptAssertion, RoleAssertion, SameIndividual, DifferentIndividuals,
                               ConceptInclusion, ConceptEquivalence, RoleInclusion, RoleEquivalence,
                               RoleChainInclusion, RoleDisjointness, RoleCharacteristic>;

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct Axiom {
  AxiomBody body;
  // Set by the parser and carried through rewrites; not part of equality.
  std::optional<SourceLocation> where;

  template <class T>
    requires std::is_constructible_v<AxiomBody, T&&>
  Axiom(T&& b, std::optional<SourceLocation> loc = std::nullopt)  // NOLINT(google-explicit-constructor)
      : body(std::forward<T>(b)), where(loc) {}

  template <class T>
  const T* as() const { return std::get_if<T>(&body); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(body); }

  bool is_abox() const;
  bool is_tbox() const;
  bool is_rbox() const;

  friend bool operator==(const Axiom& a, const Axiom& b) { return a.body == b.body; }
};

struct Ontology {
  Signature signature;
  std::vector<Axiom> axioms;

  bool empty() const { return axioms.empty(); }
  friend bool operator==(const Ontology&, const Ontology&) = default;
};

// Names occurring in the axiom, partitioned by the kind their position implies.
Signature free_names(const Axiom& axiom);
Signature free_names(const Concept& c);

// Signature is the union of free names; throws NameKindConflict.
Ontology build_ontology(std::vector<Axiom> axioms);

}  // namespace dlkit
