#pragma once

// Slot-addressed evaluator shared by the model checker and the model
// enumerator. Names are resolved to dense slots once; evaluation then runs
// over flat bitset arrays.

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "dlkit/ast.hpp"
#include "dlkit/semantics.hpp"

namespace dlkit::detail {

// Dense view of an interpretation. Role rows are laid out role-major:
// successors of element x under role slot r are role_rows[r * size + x].
struct Structure {
  std::size_t size = 0;
  std::span<const ElementSet> concepts;
  std::span<const ElementSet> role_rows;
  std::span<const Element> individuals;
};

// Partial interpretation used while searching: every extension is bracketed
// by what is already known to hold (lo) and what may still hold (hi).
struct Bounds {
  ElementSet lo;
  ElementSet hi;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

inline constexpr Element kUnassigned = ~Element{0};

struct PartialStructure {
  std::size_t size = 0;
  std::span<const Bounds> concepts;
  std::span<const Bounds> role_rows;
  std::span<const Element> individuals;  // kUnassigned when not yet fixed
};

enum class Truth : std::uint8_t { False, Unknown, True };

struct RoleRef {
  RoleExpr::Kind kind;
  std::uint32_t slot;

  RoleRef inverse() const;
};

using SlotResolver = std::function<std::uint32_t(const std::string&, NameKind)>;

class Program {
 public:
  explicit Program(SlotResolver resolve) : resolve_(std::move(resolve)) {}

  // Each returns a handle used by the evaluation calls below.
  std::uint32_t add_concept(const Concept& c);
  std::uint32_t add_axiom(const Axiom& a);
  RoleRef add_role(const RoleExpr& r);

  // Evaluates every compiled concept into `values`.
  void evaluate(const Structure& s, std::vector<ElementSet>& values) const;
  // Requires evaluate() to have filled `values` for the same structure.
  bool axiom_holds(std::uint32_t axiom, const Structure& s, const std::vector<ElementSet>& values) const;
  // evaluate() followed by all axioms; stops at the first failure.
  bool all_hold(const Structure& s, std::vector<ElementSet>& values) const;

  // Three-valued counterparts: every completion of the partial structure
  // evaluates within the computed bounds, and a True/False verdict holds
  // for every completion.
  void evaluate(const PartialStructure& s, std::vector<Bounds>& values) const;
  Truth axiom_truth(std::uint32_t axiom, const PartialStructure& s, const std::vector<Bounds>& values) const;

  std::size_t axiom_count() const { return axioms_.size(); }

 private:
  struct Op {
    Concept::Kind kind;
    std::uint32_t a = 0;  // child / slot
    std::uint32_t b = 0;  // second child
    std::uint32_t n = 0;
    RoleRef role{RoleExpr::Kind::Universal, 0};
  };
  enum class AxiomKind : std::uint8_t {
    ConceptAssertion, RoleAssertion, Same, Different, ConceptIncl, ConceptEquiv,
    RoleIncl, RoleEquiv, Chain, RoleDisjoint, Transitive, Symmetric, Asymmetric, Reflexive, Irreflexive
  };
  struct CompiledAxiom {
    AxiomKind kind;
    std::uint32_t c1 = 0, c2 = 0;  // concept ops
    std::uint32_t i1 = 0, i2 = 0;  // individual slots
    RoleRef r1{RoleExpr::Kind::Universal, 0}, r2{RoleExpr::Kind::Universal, 0}, r3{RoleExpr::Kind::Universal, 0};
  };

  std::uint32_t emit(Op op);

  SlotResolver resolve_;
  std::vector<Op> ops_;
  std::vector<CompiledAxiom> axioms_;
};

ElementSet successors(const Structure& s, RoleRef r, Element x);
Bounds successors(const PartialStructure& s, RoleRef r, Element x);

// Dense copy of an interpretation, with slots in map order.
class DenseInterpretation {
 public:
  explicit DenseInterpretation(const Interpretation& i);

  Structure view() const;
  std::uint32_t slot(const std::string& name, NameKind kind) const;

 private:
  const Interpretation& source_;
  std::vector<ElementSet> concepts_;
  std::vector<ElementSet> role_rows_;
  std::vector<Element> individuals_;
};

}  // namespace dlkit::detail
