#pragma once

// Bounded model search.
//
// Interpretations over a signature with domain {e0, ..., e(n-1)} are
// numbered in a fixed order: the individual map is the most significant
// part, then concept extensions, then role extensions; within each part the
// names follow signature order. A concept extension is read as the bitmask
// with bit k for e(k); a role extension as the bitmask with bit x*n+y for
// the pair (e(x), e(y)). Searches walk sizes 1..max and indices upward, so a
// reported witness is the first one of the smallest size.
//
// Finding nothing up to the bound proves nothing beyond the bound: some
// ontologies only have large or infinite models.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "dlkit/ast.hpp"
#include "dlkit/semantics.hpp"

namespace dlkit {

struct SearchConfig {
  std::size_t max_domain_size = 3;
  // Total candidate interpretations a search may visit; unset means no cap.
  std::optional<std::uint64_t> max_interpretations;
  // When false, parallel workers may report any witness they find.
  bool deterministic = true;
  unsigned workers = 1;
  // Consistency and entailment checks skip subtrees of the enumeration that
  // provably hold no witness; each visited node of that tree counts as one
  // candidate. When false they test every interpretation in order.
  bool prune = true;
};

struct Witness {
  Interpretation interpretation;
  // Position in the enumeration of its domain size; empty when that
  // enumeration has more than 2^64 members.
  std::optional<std::uint64_t> index;
};

struct NoneUpTo {
  std::size_t bound;
};

using BoundedVerdict = std::variant<Witness, NoneUpTo>;

inline const Witness* witness(const BoundedVerdict& v) { return std::get_if<Witness>(&v); }

namespace detail {
struct Structure;
}

class InterpretationSpace {
 public:
  InterpretationSpace(Signature sig, std::size_t size);

  const Signature& signature() const { return sig_; }
  std::size_t domain_size() const { return size_; }
  // Number of interpretations; empty when it does not fit in 64 bits.
  std::optional<std::uint64_t> count() const { return count_; }

  Interpretation at(std::uint64_t index) const;

  class Cursor;
  Cursor cursor(std::uint64_t index = 0) const;

 private:
  friend class Cursor;

  Signature sig_;
  std::size_t size_;
  std::optional<std::uint64_t> count_;
};

// Walks the enumeration from a start index, one interpretation at a time.
class InterpretationSpace::Cursor {
 public:
  Cursor(const InterpretationSpace& space, std::uint64_t index);
  Cursor(Cursor&&) noexcept;
  Cursor& operator=(Cursor&&) noexcept;
  ~Cursor();

  std::uint64_t index() const;
  // False once the enumeration is exhausted.
  bool valid() const;
  void advance();

  const detail::Structure& structure() const;
  Interpretation interpretation() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Calls `fn` for each interpretation in order until it returns false.
void enumerate_interpretations(const Signature& sig, std::size_t size,
                               const std::function<bool(const Interpretation&)>& fn);

// Witness: the first model of the smallest size.
BoundedVerdict check_consistency(const Ontology& o, const SearchConfig& cfg = {});

// Witness: a countermodel, i.e. a model of `o` where `query` fails, which
// refutes the entailment. NoneUpTo: no countermodel up to the bound.
BoundedVerdict check_entailment(const Ontology& o, const Axiom& query, const SearchConfig& cfg = {});

// Models of `o` with domain {e0..e(size-1)} over `sig`, which must contain
// the ontology's signature. Throws CapExceeded when the space is larger than
// cfg.max_interpretations.
std::vector<Interpretation> all_models(const Ontology& o, std::size_t size, const SearchConfig& cfg = {});
std::vector<Interpretation> all_models(const Ontology& o, const Signature& sig, std::size_t size,
                                       const SearchConfig& cfg = {});

// Enumeration indices of the models that all_models would return.
std::vector<std::uint64_t> model_indices(const Ontology& o, const Signature& sig, std::size_t size,
                                         const SearchConfig& cfg = {});

}  // namespace dlkit
