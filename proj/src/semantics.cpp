#include "dlkit/semantics.hpp"

#include <set>

#include "evaluator.hpp"

namespace dlkit {

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Element>(std::countr_zero(b)));
  return out;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto row : rows_) n += row.size();
  return n;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < rows_.size(); ++x) {
    for (Element y : rows_[x].elements()) out.emplace_back(x, y);
  }
  return out;
}

Interpretation::Interpretation(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.empty()) throw InterpretationError("interpretation domain must not be empty");
  if (domain_.size() > kMaxDomainSize) {
    throw InterpretationError("interpretation domain has " + std::to_string(domain_.size()) +
                              " elements; at most " + std::to_string(kMaxDomainSize) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& id : domain_) {
    if (id.empty()) throw InterpretationError("domain element ids must be non-empty");
    if (!seen.insert(id).second) throw InterpretationError("duplicate domain element '" + id + "'");
  }
}

std::optional<Element> Interpretation::element(std::string_view id) const {
  for (Element e = 0; e < domain_.size(); ++e) {
    if (domain_[e] == id) return e;
  }
  return std::nullopt;
}

void Interpretation::set_concept(std::string name, ElementSet extension) {
  if (!extension.subset_of(ElementSet::full(size()))) {
    throw InterpretationError("extension of concept '" + name + "' leaves the domain");
  }
  concepts_.insert_or_assign(std::move(name), extension);
}

void Interpretation::set_role(std::string name, Relation extension) {
  if (extension.domain_size() != size()) {
    throw InterpretationError("extension of role '" + name + "' has the wrong domain size");
  }
  for (auto row : extension.rows()) {
    if (!row.subset_of(ElementSet::full(size()))) {
      throw InterpretationError("extension of role '" + name + "' leaves the domain");
    }
  }
  roles_.insert_or_assign(std::move(name), std::move(extension));
}

void Interpretation::set_individual(std::string name, Element e) {
  if (e >= size()) throw InterpretationError("individual '" + name + "' is mapped outside the domain");
  individuals_.insert_or_assign(std::move(name), e);
}

bool Interpretation::maps(const Signature& sig) const {
  for (const auto& n : sig.concepts) {
    if (!concepts_.contains(n)) return false;
  }
  for (const auto& n : sig.roles) {
    if (!roles_.contains(n)) return false;
  }
  for (const auto& n : sig.individuals) {
    if (!individuals_.contains(n)) return false;
  }
  return true;
}

namespace {

detail::Program program_for(const detail::DenseInterpretation& dense) {
  return detail::Program([&dense](const std::string& name, NameKind kind) { return dense.slot(name, kind); });
}

void require_mapped(const Signature& sig, const Interpretation& i) {
  for (const auto& n : sig.concepts) {
    if (!i.concepts().contains(n)) throw UnmappedName(n, NameKind::Concept);
  }
  for (const auto& n : sig.roles) {
    if (!i.roles().contains(n)) throw UnmappedName(n, NameKind::Role);
  }
  for (const auto& n : sig.individuals) {
    if (!i.individuals().contains(n)) throw UnmappedName(n, NameKind::Individual);
  }
}

}  // namespace

Relation eval_role(const RoleExpr& r, const Interpretation& i) {
  detail::DenseInterpretation dense(i);
  auto program = program_for(dense);
  auto ref = program.add_role(r);
  auto s = dense.view();
  Relation out(i.size());
  for (Element x = 0; x < i.size(); ++x) out.rows()[x] = detail::successors(s, ref, x);
  return out;
}

ElementSet eval_concept(const Concept& c, const Interpretation& i) {
  detail::DenseInterpretation dense(i);
  auto program = program_for(dense);
  auto root = program.add_concept(c);
  std::vector<ElementSet> values;
  program.evaluate(dense.view(), values);
  return values[root];
}

bool satisfies_axiom(const Axiom& a, const Interpretation& i) {
  detail::DenseInterpretation dense(i);
  auto program = program_for(dense);
  auto index = program.add_axiom(a);
  std::vector<ElementSet> values;
  auto s = dense.view();
  program.evaluate(s, values);
  return program.axiom_holds(index, s, values);
}

std::vector<bool> check_axioms(const Ontology& o, const Interpretation& i) {
  require_mapped(o.signature, i);
  detail::DenseInterpretation dense(i);
  auto program = program_for(dense);
  for (const auto& a : o.axioms) program.add_axiom(a);
  std::vector<ElementSet> values;
  auto s = dense.view();
  program.evaluate(s, values);
  std::vector<bool> out;
  for (std::uint32_t k = 0; k < program.axiom_count(); ++k) out.push_back(program.axiom_holds(k, s, values));
  return out;
}

bool is_model(const Ontology& o, const Interpretation& i) {
  require_mapped(o.signature, i);
  detail::DenseInterpretation dense(i);
  auto program = program_for(dense);
  for (const auto& a : o.axioms) program.add_axiom(a);
  std::vector<ElementSet> values;
  return program.all_hold(dense.view(), values);
}

}  // namespace dlkit
