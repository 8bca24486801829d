#pragma once

// Finite interpretations and the satisfaction relation.
//
// Domain elements are addressed by their position in the domain. Sets of
// elements are bitsets, so a domain holds at most kMaxDomainSize elements.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlkit/ast.hpp"
#include "dlkit/error.hpp"

namespace dlkit {

inline constexpr std::size_t kMaxDomainSize = 64;

using Element = std::uint32_t;

class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(std::size_t domain_size) {
    return ElementSet(domain_size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << domain_size) - 1);
  }
  static constexpr ElementSet single(Element e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Element> elements() const;

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  // Complement relative to a domain.
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A binary relation over a domain, stored as one successor set per element.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t domain_size) : rows_(domain_size) {}

  std::size_t domain_size() const { return rows_.size(); }
  ElementSet successors(Element x) const { return rows_[x]; }
  bool contains(Element x, Element y) const { return rows_[x].contains(y); }
  void insert(Element x, Element y) { rows_[x].insert(y); }
  std::size_t size() const;
  std::vector<std::pair<Element, Element>> pairs() const;

  const std::vector<ElementSet>& rows() const { return rows_; }
  std::vector<ElementSet>& rows() { return rows_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<ElementSet> rows_;
};

class Interpretation {
 public:
  // Element ids must be unique and non-empty; 1 to kMaxDomainSize of them.
  explicit Interpretation(std::vector<std::string> domain);

  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& id(Element e) const { return domain_[e]; }
  std::optional<Element> element(std::string_view id) const;

  void set_concept(std::string name, ElementSet extension);
  void set_role(std::string name, Relation extension);
  void set_individual(std::string name, Element e);

  const std::map<std::string, ElementSet, std::less<>>& concepts() const { return concepts_; }
  const std::map<std::string, Relation, std::less<>>& roles() const { return roles_; }
  const std::map<std::string, Element, std::less<>>& individuals() const { return individuals_; }

  // True when every name of `sig` has an extension here.
  bool maps(const Signature& sig) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::vector<std::string> domain_;
  std::map<std::string, ElementSet, std::less<>> concepts_;
  std::map<std::string, Relation, std::less<>> roles_;
  std::map<std::string, Element, std::less<>> individuals_;
};

// All of these throw UnmappedName for names the interpretation does not map.
Relation eval_role(const RoleExpr& r, const Interpretation& i);
ElementSet eval_concept(const Concept& c, const Interpretation& i);
// Characteristic axioms are checked against the relational property they
// name (transitive, symmetric, ...), not their rewritten form.
bool satisfies_axiom(const Axiom& a, const Interpretation& i);
bool is_model(const Ontology& o, const Interpretation& i);
// satisfies_axiom for each axiom of `o`, in order.
std::vector<bool> check_axioms(const Ontology& o, const Interpretation& i);

}  // namespace dlkit
