#include "dlkit/reasoner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "evaluator.hpp"

namespace dlkit {

namespace {

constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();

enum class Part : std::uint8_t { Individual, Concept, Role };

struct Digit {
  Part part;
  std::uint32_t slot;
  std::uint64_t base;
};

std::vector<std::string> element_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < n; ++k) ids.push_back("e" + std::to_string(k));
  return ids;
}

// Digits from most to least significant; empty when some base overflows.
std::optional<std::vector<Digit>> layout(const Signature& sig, std::size_t n) {
  std::vector<Digit> digits;
  const std::size_t pairs = n * n;
  if ((!sig.concepts.empty() && n >= 64) || (!sig.roles.empty() && pairs >= 64)) return std::nullopt;
  std::uint32_t slot = 0;
  for (std::size_t k = 0; k < sig.individuals.size(); ++k) digits.push_back({Part::Individual, slot++, n});
  slot = 0;
  for (std::size_t k = 0; k < sig.concepts.size(); ++k) digits.push_back({Part::Concept, slot++, std::uint64_t{1} << n});
  slot = 0;
  for (std::size_t k = 0; k < sig.roles.size(); ++k) digits.push_back({Part::Role, slot++, std::uint64_t{1} << pairs});
  return digits;
}

std::uint32_t slot_in(const std::set<std::string, std::less<>>& names, const std::string& name, NameKind kind) {
  auto it = names.find(name);
  if (it == names.end()) throw UnmappedName(name, kind);
  return static_cast<std::uint32_t>(std::distance(names.begin(), it));
}

detail::SlotResolver resolver_for(const Signature& sig) {
  return [&sig](const std::string& name, NameKind kind) {
    switch (kind) {
      case NameKind::Individual: return slot_in(sig.individuals, name, kind);
      case NameKind::Concept: return slot_in(sig.concepts, name, kind);
      case NameKind::Role: return slot_in(sig.roles, name, kind);
    }
    throw UnmappedName(name, kind);
  };
}

}  // namespace

// --- InterpretationSpace ----------------------------------------------------

InterpretationSpace::InterpretationSpace(Signature sig, std::size_t size) : sig_(std::move(sig)), size_(size) {
  if (size_ == 0 || size_ > kMaxDomainSize) throw Error("domain size must be between 1 and 64");
  auto digits = layout(sig_, size_);
  if (!digits) return;
  unsigned __int128 total = 1;
  for (const auto& d : *digits) {
    total *= d.base;
    if (total > std::numeric_limits<std::uint64_t>::max()) return;
  }
  count_ = static_cast<std::uint64_t>(total);
}

struct InterpretationSpace::Cursor::State {
  const InterpretationSpace* space;
  std::vector<Digit> digits;
  std::vector<std::uint64_t> values;
  std::vector<Element> individuals;
  std::vector<ElementSet> concepts;
  std::vector<ElementSet> role_rows;
  detail::Structure view;
  std::uint64_t index = 0;
  bool valid = true;

  void apply(std::size_t k) {
    const Digit& d = digits[k];
    const std::uint64_t v = values[k];
    const std::size_t n = space->size_;
    switch (d.part) {
      case Part::Individual: individuals[d.slot] = static_cast<Element>(v); break;
      case Part::Concept: concepts[d.slot] = ElementSet(v); break;
      case Part::Role: {
        const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
        for (std::size_t x = 0; x < n; ++x) role_rows[d.slot * n + x] = ElementSet((v >> (x * n)) & row_mask);
        break;
      }
    }
  }
};

InterpretationSpace::Cursor::Cursor(const InterpretationSpace& space, std::uint64_t index)
    : state_(std::make_unique<State>()) {
  if (!space.count_) throw CapExceeded(std::numeric_limits<std::uint64_t>::max());
  auto& st = *state_;
  st.space = &space;
  st.digits = *layout(space.sig_, space.size_);
  st.values.assign(st.digits.size(), 0);
  st.individuals.assign(space.sig_.individuals.size(), 0);
  st.concepts.assign(space.sig_.concepts.size(), ElementSet{});
  st.role_rows.assign(space.sig_.roles.size() * space.size_, ElementSet{});
  st.view = detail::Structure{space.size_, st.concepts, st.role_rows, st.individuals};
  st.index = index;
  st.valid = index < *space.count_;
  std::uint64_t rest = index;
  for (std::size_t k = st.digits.size(); k-- > 0;) {
    st.values[k] = rest % st.digits[k].base;
    rest /= st.digits[k].base;
    st.apply(k);
  }
}

InterpretationSpace::Cursor::Cursor(Cursor&&) noexcept = default;
InterpretationSpace::Cursor& InterpretationSpace::Cursor::operator=(Cursor&&) noexcept = default;
InterpretationSpace::Cursor::~Cursor() = default;

std::uint64_t InterpretationSpace::Cursor::index() const { return state_->index; }
bool InterpretationSpace::Cursor::valid() const { return state_->valid; }
const detail::Structure& InterpretationSpace::Cursor::structure() const { return state_->view; }

void InterpretationSpace::Cursor::advance() {
  auto& st = *state_;
  if (!st.valid) return;
  ++st.index;
  for (std::size_t k = st.digits.size(); k-- > 0;) {
    if (++st.values[k] < st.digits[k].base) {
      st.apply(k);
      return;
    }
    st.values[k] = 0;
    st.apply(k);
  }
  st.valid = false;
}

Interpretation InterpretationSpace::Cursor::interpretation() const {
  const auto& st = *state_;
  const auto& sig = st.space->sig_;
  const std::size_t n = st.space->size_;
  Interpretation out(element_ids(n));
  std::size_t k = 0;
  for (const auto& name : sig.individuals) out.set_individual(name, st.individuals[k++]);
  k = 0;
  for (const auto& name : sig.concepts) out.set_concept(name, st.concepts[k++]);
  k = 0;
  for (const auto& name : sig.roles) {
    Relation rel(n);
    for (std::size_t x = 0; x < n; ++x) rel.rows()[x] = st.role_rows[k * n + x];
    out.set_role(name, std::move(rel));
    ++k;
  }
  return out;
}

InterpretationSpace::Cursor InterpretationSpace::cursor(std::uint64_t index) const { return Cursor(*this, index); }

Interpretation InterpretationSpace::at(std::uint64_t index) const { return cursor(index).interpretation(); }

void enumerate_interpretations(const Signature& sig, std::size_t size,
                               const std::function<bool(const Interpretation&)>& fn) {
  InterpretationSpace space(sig, size);
  for (auto c = space.cursor(); c.valid(); c.advance()) {
    if (!fn(c.interpretation())) return;
  }
}

// --- Search -----------------------------------------------------------------

namespace {

using Predicate = std::function<bool(const detail::Structure&, std::vector<ElementSet>&)>;

std::optional<std::uint64_t> scan(const InterpretationSpace& space, std::uint64_t begin, std::uint64_t end,
                                  const Predicate& pred, const std::atomic<std::uint64_t>* stop_below = nullptr) {
  std::vector<ElementSet> values;
  for (auto c = space.cursor(begin); c.valid() && c.index() < end; c.advance()) {
    if (stop_below && (c.index() & 0x3ff) == 0 && stop_below->load(std::memory_order_relaxed) < c.index()) {
      return std::nullopt;
    }
    if (pred(c.structure(), values)) return c.index();
  }
  return std::nullopt;
}

// First index in [0, limit) satisfying pred. With several workers, chunks are
// claimed in increasing order and the smallest hit wins, so the answer does
// not depend on scheduling unless cfg.deterministic is off.
std::optional<std::uint64_t> find_first(const InterpretationSpace& space, std::uint64_t limit, const Predicate& pred,
                                        const SearchConfig& cfg) {
  const unsigned workers = std::max(1U, cfg.workers);
  if (workers == 1 || limit < 4096) return scan(space, 0, limit, pred);

  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kNoIndex};
  auto work = [&] {
    while (true) {
      const std::uint64_t start = next_chunk.fetch_add(1) * kChunk;
      if (start >= limit) return;
      const std::uint64_t current = best.load();
      if (cfg.deterministic ? start > current : current != kNoIndex) return;
      auto hit = scan(space, start, std::min(limit, start + kChunk), pred, cfg.deterministic ? &best : nullptr);
      if (hit) {
        std::uint64_t seen = best.load();
        while (*hit < seen && !best.compare_exchange_weak(seen, *hit)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
  pool.clear();
  if (best.load() == kNoIndex) return std::nullopt;
  return best.load();
}

std::uint64_t cap_of(const SearchConfig& cfg) { return cfg.max_interpretations.value_or(kNoIndex); }

// --- Pruned search ----------------------------------------------------------
//
// Depth-first walk over the same enumeration, one digit or bit at a time from
// the most significant end, trying smaller values first. A branch is cut only
// when the three-valued evaluator shows that no completion satisfies the goal,
// so the first complete assignment reached is the first witness in
// enumeration order.

using Requirement = std::pair<std::uint32_t, bool>;  // axiom, truth value wanted

struct Var {
  Part part;
  std::uint32_t slot;
  std::uint32_t bit;  // element for concepts, x*n+y for roles
};

struct TrailEntry {
  Part part;
  std::uint32_t index;
  detail::Bounds bounds;
  Element individual;
};

struct PartialState {
  std::vector<Element> individuals;
  std::vector<detail::Bounds> concepts;
  std::vector<detail::Bounds> role_rows;
  std::vector<TrailEntry> trail;
};

struct Abort {};

class PrunedSearch {
 public:
  PrunedSearch(const detail::Program& program, std::vector<Requirement> goal, const Signature& sig, std::size_t n)
      : program_(program), goal_(std::move(goal)), sig_(sig), n_(n) {
    for (std::uint32_t k = 0; k < sig.individuals.size(); ++k) vars_.push_back({Part::Individual, k, 0});
    for (std::uint32_t k = 0; k < sig.concepts.size(); ++k) {
      for (std::uint32_t e = static_cast<std::uint32_t>(n); e-- > 0;) vars_.push_back({Part::Concept, k, e});
    }
    for (std::uint32_t k = 0; k < sig.roles.size(); ++k) {
      for (std::uint32_t p = static_cast<std::uint32_t>(n * n); p-- > 0;) vars_.push_back({Part::Role, k, p});
    }
  }

  std::size_t var_count() const { return vars_.size(); }
  std::uint32_t choices(std::size_t v) const { return vars_[v].part == Part::Individual ? static_cast<std::uint32_t>(n_) : 2; }

  PartialState initial() const {
    const ElementSet domain = ElementSet::full(n_);
    PartialState st;
    st.individuals.assign(sig_.individuals.size(), detail::kUnassigned);
    st.concepts.assign(sig_.concepts.size(), detail::Bounds{ElementSet{}, domain});
    st.role_rows.assign(sig_.roles.size() * n_, detail::Bounds{ElementSet{}, domain});
    return st;
  }

  void assign(PartialState& st, std::size_t v, std::uint32_t value) const {
    const Var& var = vars_[v];
    switch (var.part) {
      case Part::Individual:
        st.trail.push_back({var.part, var.slot, {}, st.individuals[var.slot]});
        st.individuals[var.slot] = value;
        break;
      case Part::Concept: set_bit(st, Part::Concept, var.slot, var.bit, value); break;
      case Part::Role:
        set_bit(st, Part::Role, static_cast<std::uint32_t>(var.slot * n_ + var.bit / n_),
                static_cast<Element>(var.bit % n_), value);
        break;
    }
  }

  void undo_to(PartialState& st, std::size_t mark) const {
    while (st.trail.size() > mark) {
      const TrailEntry& t = st.trail.back();
      switch (t.part) {
        case Part::Individual: st.individuals[t.index] = t.individual; break;
        case Part::Concept: st.concepts[t.index] = t.bounds; break;
        case Part::Role: st.role_rows[t.index] = t.bounds; break;
      }
      st.trail.pop_back();
    }
  }

  bool assigned(const PartialState& st, std::size_t v) const {
    const Var& var = vars_[v];
    switch (var.part) {
      case Part::Individual: return st.individuals[var.slot] != detail::kUnassigned;
      case Part::Concept: return fixed(st.concepts[var.slot], var.bit);
      case Part::Role: return fixed(st.role_rows[var.slot * n_ + var.bit / n_], static_cast<Element>(var.bit % n_));
    }
    return false;
  }

  // Runs from `pos` on. Leaves the witness in `st` when it returns true.
  bool dfs(PartialState& st, std::size_t pos, std::uint64_t& nodes, std::uint64_t budget,
           const std::function<bool()>& cancelled) const {
    if (++nodes > budget || ((nodes & 0xff) == 0 && cancelled())) throw Abort{};
    const std::size_t mark = st.trail.size();
    auto fail = [&] {
      undo_to(st, mark);
      return false;
    };
    detail::Truth t = status(st);
    if (t == detail::Truth::False) return fail();
    if (t != detail::Truth::True && unassigned_from(st, pos) >= kProbeThreshold) {
      if (!probe(st, pos)) return fail();
      t = status(st);
      if (t == detail::Truth::False) return fail();
    }
    if (t == detail::Truth::True) {
      // Every completion qualifies; the smallest one comes first.
      for (std::size_t v = pos; v < vars_.size(); ++v) {
        if (!assigned(st, v)) assign(st, v, 0);
      }
      return true;
    }
    while (pos < vars_.size() && assigned(st, pos)) ++pos;
    if (pos == vars_.size()) return fail();
    for (std::uint32_t value = 0; value < choices(pos); ++value) {
      const std::size_t before = st.trail.size();
      assign(st, pos, value);
      if (dfs(st, pos + 1, nodes, budget, cancelled)) return true;
      undo_to(st, before);
    }
    return fail();
  }

  Witness witness_of(const PartialState& st) const {
    Interpretation out(element_ids(n_));
    std::size_t k = 0;
    for (const auto& name : sig_.individuals) out.set_individual(name, st.individuals[k++]);
    k = 0;
    for (const auto& name : sig_.concepts) out.set_concept(name, st.concepts[k++].lo);
    k = 0;
    for (const auto& name : sig_.roles) {
      Relation rel(n_);
      for (std::size_t x = 0; x < n_; ++x) rel.rows()[x] = st.role_rows[k * n_ + x].lo;
      out.set_role(name, std::move(rel));
      ++k;
    }
    return Witness{std::move(out), index_of(st)};
  }

 private:
  std::optional<std::uint64_t> index_of(const PartialState& st) const {
    std::uint64_t index = 0;
    auto push = [&index](std::uint64_t base, std::uint64_t digit) {
      return !__builtin_mul_overflow(index, base, &index) && !__builtin_add_overflow(index, digit, &index);
    };
    for (Element e : st.individuals) {
      if (!push(n_, e)) return std::nullopt;
    }
    for (const auto& c : st.concepts) {
      if (!push(std::uint64_t{1} << n_, c.lo.bits())) return std::nullopt;
    }
    for (std::size_t r = 0; r < sig_.roles.size(); ++r) {
      if (n_ * n_ >= 64) return std::nullopt;
      std::uint64_t digit = 0;
      for (std::size_t x = 0; x < n_; ++x) digit |= st.role_rows[r * n_ + x].lo.bits() << (x * n_);
      if (!push(std::uint64_t{1} << (n_ * n_), digit)) return std::nullopt;
    }
    return index;
  }

  static constexpr std::size_t kProbeThreshold = 6;

  static bool fixed(const detail::Bounds& b, Element e) { return b.lo.contains(e) || !b.hi.contains(e); }

  void set_bit(PartialState& st, Part part, std::uint32_t index, Element e, std::uint32_t value) const {
    auto& b = part == Part::Concept ? st.concepts[index] : st.role_rows[index];
    st.trail.push_back({part, index, b, 0});
    if (value) {
      b.lo.insert(e);
    } else {
      b.hi = b.hi.minus(ElementSet::single(e));
    }
  }

  detail::Truth status(const PartialState& st) const {
    detail::PartialStructure view{n_, st.concepts, st.role_rows, st.individuals};
    program_.evaluate(view, values_);
    bool all = true;
    for (const auto& [axiom, wanted] : goal_) {
      const detail::Truth t = program_.axiom_truth(axiom, view, values_);
      if (t == detail::Truth::Unknown) {
        all = false;
      } else if ((t == detail::Truth::True) != wanted) {
        return detail::Truth::False;
      }
    }
    return all ? detail::Truth::True : detail::Truth::Unknown;
  }

  std::size_t unassigned_from(const PartialState& st, std::size_t pos) const {
    std::size_t count = 0;
    for (std::size_t v = pos; v < vars_.size(); ++v) count += assigned(st, v) ? 0 : 1;
    return count;
  }

  // Failed-value probing: values that make the goal fail outright are
  // removed; a variable left with one value is fixed to it. Only branches
  // without witnesses disappear, so the enumeration order is unaffected.
  bool probe(PartialState& st, std::size_t pos) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = pos; v < vars_.size(); ++v) {
        if (assigned(st, v)) continue;
        std::uint32_t alive = 0;
        std::uint32_t last = 0;
        for (std::uint32_t value = 0; value < choices(v); ++value) {
          const std::size_t before = st.trail.size();
          assign(st, v, value);
          if (status(st) != detail::Truth::False) {
            ++alive;
            last = value;
          }
          undo_to(st, before);
        }
        if (alive == 0) return false;
        if (alive == 1) {
          assign(st, v, last);
          changed = true;
        }
      }
    }
    return true;
  }

  const detail::Program& program_;
  std::vector<Requirement> goal_;
  const Signature& sig_;
  std::size_t n_;
  std::vector<Var> vars_;
  mutable std::vector<detail::Bounds> values_;
};

struct TaskResult {
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::optional<Witness> hit;
};

// Splits the search into subtrees fixed by a prefix of the variables. The
// split does not depend on the worker count, so neither do node counts.
std::vector<std::vector<std::uint32_t>> split(const PrunedSearch& search) {
  constexpr std::uint64_t kTasks = 64;
  std::size_t k = 0;
  std::uint64_t product = 1;
  while (k < search.var_count() && product < kTasks) product *= search.choices(k++);
  std::vector<std::vector<std::uint32_t>> prefixes;
  std::vector<std::uint32_t> prefix(k, 0);
  while (true) {
    prefixes.push_back(prefix);
    std::size_t d = k;
    while (d > 0 && ++prefix[d - 1] == search.choices(d - 1)) prefix[--d] = 0;
    if (d == 0) break;
  }
  return prefixes;
}

// Returns the first witness at this size, or nothing; adds the nodes charged
// before the decision to `used`.
std::optional<Witness> pruned_size(const detail::Program& program, const std::vector<Requirement>& goal,
                                         const Signature& sig, std::size_t n, std::uint64_t cap, std::uint64_t& used,
                                         const SearchConfig& cfg) {
  PrunedSearch search(program, goal, sig, n);
  const auto prefixes = split(search);
  const std::uint64_t budget = cap - used;
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<std::size_t> decisive{prefixes.size()};
  std::atomic<std::size_t> next{0};

  auto run_task = [&](std::size_t t, const detail::Program& local_program) {
    PrunedSearch local(local_program, goal, sig, n);
    PartialState st = local.initial();
    for (std::size_t v = 0; v < prefixes[t].size(); ++v) local.assign(st, v, prefixes[t][v]);
    auto cancelled = [&] { return cfg.deterministic ? decisive.load() < t : decisive.load() != prefixes.size(); };
    TaskResult& r = results[t];
    try {
      if (local.dfs(st, prefixes[t].size(), r.nodes, budget, cancelled)) r.hit = local.witness_of(st);
    } catch (const Abort&) {
      r.aborted = true;
    }
    if (r.hit || (r.aborted && !cancelled())) {
      std::size_t seen = decisive.load();
      while (t < seen && !decisive.compare_exchange_weak(seen, t)) {
      }
    }
  };
  auto work = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= prefixes.size()) return;
      const std::size_t d = decisive.load();
      if (cfg.deterministic ? t > d : d != prefixes.size()) return;
      run_task(t, program);
    }
  };
  const unsigned workers = std::max(1U, cfg.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
  }

  if (!cfg.deterministic) {
    for (const auto& r : results) {
      if (r.hit) return r.hit;
    }
  }
  std::uint64_t spent = 0;
  for (const auto& r : results) {
    spent += r.nodes;
    if (r.aborted || spent > budget) throw CapExceeded(cap);
    if (r.hit) {
      used += spent;
      return r.hit;
    }
  }
  used += spent;
  return std::nullopt;
}

// Walks sizes 1..max_domain_size charging the visited candidates to the cap.
BoundedVerdict bounded_search(const Signature& sig, const detail::Program& program, std::vector<Requirement> goal,
                              const SearchConfig& cfg) {
  if (cfg.max_domain_size == 0) throw Error("max domain size must be at least 1");
  const std::uint64_t cap = cap_of(cfg);
  std::uint64_t used = 0;
  const Predicate pred = [&](const detail::Structure& s, std::vector<ElementSet>& v) {
    program.evaluate(s, v);
    for (const auto& [axiom, wanted] : goal) {
      if (program.axiom_holds(axiom, s, v) != wanted) return false;
    }
    return true;
  };
  for (std::size_t n = 1; n <= cfg.max_domain_size; ++n) {
    if (cfg.prune) {
      if (auto hit = pruned_size(program, goal, sig, n, cap, used, cfg)) return std::move(*hit);
      continue;
    }
    InterpretationSpace space(sig, n);
    if (!space.count()) throw CapExceeded(cap);
    const std::uint64_t available = cap - used;
    const std::uint64_t limit = std::min(*space.count(), available);
    if (auto hit = find_first(space, limit, pred, cfg)) return Witness{space.at(*hit), *hit};
    if (*space.count() > available) throw CapExceeded(cap);
    used += limit;
  }
  return NoneUpTo{cfg.max_domain_size};
}

}  // namespace

BoundedVerdict check_consistency(const Ontology& o, const SearchConfig& cfg) {
  const Signature& sig = o.signature;
  detail::Program program(resolver_for(sig));
  std::vector<Requirement> goal;
  for (const auto& a : o.axioms) goal.emplace_back(program.add_axiom(a), true);
  return bounded_search(sig, program, std::move(goal), cfg);
}

BoundedVerdict check_entailment(const Ontology& o, const Axiom& query, const SearchConfig& cfg) {
  Signature sig = o.signature;
  sig.merge(free_names(query));
  detail::Program program(resolver_for(sig));
  std::vector<Requirement> goal;
  for (const auto& a : o.axioms) goal.emplace_back(program.add_axiom(a), true);
  goal.emplace_back(program.add_axiom(query), false);
  return bounded_search(sig, program, std::move(goal), cfg);
}

namespace {

template <class Fn>
void for_each_model(const Ontology& o, const Signature& sig, std::size_t size, const SearchConfig& cfg, Fn&& fn) {
  if (!sig.contains(o.signature)) throw Error("signature does not cover the ontology");
  InterpretationSpace space(sig, size);
  const std::uint64_t cap = cap_of(cfg);
  if (!space.count() || *space.count() > cap) throw CapExceeded(cap);
  detail::Program program(resolver_for(sig));
  for (const auto& a : o.axioms) program.add_axiom(a);
  std::vector<ElementSet> values;
  for (auto c = space.cursor(); c.valid(); c.advance()) {
    if (program.all_hold(c.structure(), values)) fn(c);
  }
}

}  // namespace

std::vector<Interpretation> all_models(const Ontology& o, const Signature& sig, std::size_t size,
                                       const SearchConfig& cfg) {
  std::vector<Interpretation> out;
  for_each_model(o, sig, size, cfg, [&](const InterpretationSpace::Cursor& c) { out.push_back(c.interpretation()); });
  return out;
}

std::vector<Interpretation> all_models(const Ontology& o, std::size_t size, const SearchConfig& cfg) {
  return all_models(o, o.signature, size, cfg);
}

std::vector<std::uint64_t> model_indices(const Ontology& o, const Signature& sig, std::size_t size,
                                         const SearchConfig& cfg) {
  std::vector<std::uint64_t> out;
  for_each_model(o, sig, size, cfg, [&](const InterpretationSpace::Cursor& c) { out.push_back(c.index()); });
  return out;
}

}  // namespace dlkit
