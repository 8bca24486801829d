#include <gtest/gtest.h>

#include <random>

#include "dlkit/parser.hpp"
#include "dlkit/reasoner.hpp"
#include "dlkit/rewrite.hpp"
#include "generators.hpp"

using namespace dlkit;

namespace {

Signature sig_of(std::initializer_list<const char*> inds, std::initializer_list<const char*> concepts,
                 std::initializer_list<const char*> roles) {
  Signature s;
  for (const char* n : inds) s.add(n, NameKind::Individual);
  for (const char* n : concepts) s.add(n, NameKind::Concept);
  for (const char* n : roles) s.add(n, NameKind::Role);
  return s;
}

std::uint64_t count_all(const Signature& s, std::size_t n) {
  std::uint64_t k = 0;
  enumerate_interpretations(s, n, [&](const Interpretation&) {
    ++k;
    return true;
  });
  return k;
}

std::size_t size_of(const BoundedVerdict& v) {
  const Witness* w = witness(v);
  return w ? w->interpretation.size() : 0;
}

const NoneUpTo* none(const BoundedVerdict& v) { return std::get_if<NoneUpTo>(&v); }

SearchConfig exhaustive(std::size_t bound = 3) {
  SearchConfig cfg;
  cfg.max_domain_size = bound;
  cfg.prune = false;
  return cfg;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(count_all(sig_of({}, {"A"}, {}), 1), 2U);
  EXPECT_EQ(count_all(sig_of({}, {}, {"r"}), 2), 16U);
  EXPECT_EQ(count_all(sig_of({"julia"}, {"Mother"}, {}), 2), 8U);
  EXPECT_EQ(InterpretationSpace(sig_of({"a", "b"}, {"A"}, {"r"}), 3).count(), 9U * 8U * 512U);
}

TEST(Enumerate, OrderAndUniqueness) {
  Signature s = sig_of({"a"}, {"A"}, {"r"});
  InterpretationSpace space(s, 2);
  std::vector<Interpretation> seen;
  enumerate_interpretations(s, 2, [&](const Interpretation& i) {
    seen.push_back(i);
    return true;
  });
  ASSERT_EQ(seen.size(), *space.count());
  for (std::size_t k = 0; k < seen.size(); ++k) {
    ASSERT_EQ(space.at(k), seen[k]);
    for (std::size_t j = 0; j < k; ++j) ASSERT_NE(seen[j], seen[k]);
  }
  // Most significant digit first: the individual map changes last.
  EXPECT_EQ(seen.front().individuals().at("a"), Element{0});
  EXPECT_EQ(seen.back().individuals().at("a"), Element{1});
  // Concept bit k is element e(k); role bit x*n+y is (e(x), e(y)).
  Interpretation second = space.at(16);
  EXPECT_EQ(second.concepts().at("A"), ElementSet::single(0));
  Interpretation third = space.at(2);
  EXPECT_TRUE(third.roles().at("r").contains(0, 1));
  EXPECT_EQ(third.roles().at("r").size(), 1U);
}

TEST(Consistency, Examples) {
  Ontology contradiction = parse_ontology("bob : Male\nbob : Female\n(Male and Female) SubClassOf Bottom");
  const BoundedVerdict v = check_consistency(contradiction);
  ASSERT_NE(none(v), nullptr);
  EXPECT_EQ(none(v)->bound, 3U);

  Ontology julia = parse_ontology("(julia, john) : parentOf\njulia : manyChildren\nmanyChildren SubClassOf >= 3 parentOf.Top");
  const BoundedVerdict found = check_consistency(julia);
  EXPECT_EQ(size_of(found), 3U);
  EXPECT_TRUE(is_model(julia, witness(found)->interpretation));
  SearchConfig two;
  two.max_domain_size = 2;
  ASSERT_NE(none(check_consistency(julia, two)), nullptr);

  const BoundedVerdict empty = check_consistency(build_ontology({}));
  EXPECT_EQ(size_of(empty), 1U);
  EXPECT_EQ(witness(empty)->index, 0U);
}

TEST(Entailment, Examples) {
  auto refuted = [](const char* onto, const char* query) {
    Ontology o = parse_ontology(onto);
    return witness(check_entailment(o, parse_axiom(query, o.signature))) != nullptr;
  };
  EXPECT_FALSE(refuted("julia : Mother\nMother SubClassOf Parent", "julia : Parent"));
  EXPECT_FALSE(refuted("(julia, john) : parentOf\nparentOf SubRoleOf ancestorOf", "(julia, john) : ancestorOf"));
  EXPECT_TRUE(refuted("julia : Mother", "julia : Female"));
  const char* sons = "(john, julia) : sonOf\nexists sonOf.Top SubClassOf Male\nTop SubClassOf forall sonOf.Parent";
  EXPECT_FALSE(refuted(sons, "john : Male"));
  EXPECT_FALSE(refuted(sons, "julia : Parent"));
  EXPECT_FALSE(refuted("(charles, julia) : brotherOf\n(julia, john) : parentOf\nbrotherOf o parentOf SubRoleOf uncleOf",
                       "(charles, john) : uncleOf"));
}

TEST(Entailment, CountermodelIsSmallAndValid) {
  Ontology o = parse_ontology("julia : Mother");
  Axiom q = parse_axiom("julia : Female", o.signature);
  const BoundedVerdict v = check_entailment(o, q);
  ASSERT_EQ(size_of(v), 1U);
  const Interpretation& i = witness(v)->interpretation;
  EXPECT_TRUE(is_model(o, i));
  EXPECT_FALSE(satisfies_axiom(q, i));
  EXPECT_TRUE(i.concepts().at("Female").empty());
}

TEST(AllModels, Examples) {
  EXPECT_EQ(all_models(build_ontology({}), sig_of({}, {"A"}, {}), 1).size(), 2U);
  EXPECT_EQ(all_models(parse_ontology("A EquivalentTo B"), 1).size(), 2U);
  EXPECT_EQ(all_models(parse_ontology("Top SubClassOf A"), 1).size(), 1U);
  EXPECT_THROW(all_models(build_ontology({}), sig_of({}, {}, {"r"}), 3, SearchConfig{3, 100}), CapExceeded);
  EXPECT_THROW(all_models(parse_ontology("A SubClassOf B"), sig_of({}, {"A"}, {}), 1), Error);
}

TEST(Search, CapIsEnforced) {
  Ontology o = parse_ontology("(a, b) : r\n(b, c) : s\nr o s SubRoleOf t");
  Axiom q = parse_axiom("(c, a) : t", o.signature);
  SearchConfig cfg;
  cfg.max_interpretations = 5;
  EXPECT_THROW(check_entailment(o, q, cfg), CapExceeded);
  cfg.prune = false;
  EXPECT_THROW(check_entailment(o, q, cfg), CapExceeded);
  cfg.max_interpretations.reset();
  EXPECT_NE(witness(check_entailment(o, q, cfg)), nullptr);
}

TEST(Search, PrunedSearchMatchesExhaustiveSearch) {
  std::mt19937 rng(99);
  gen::Vocabulary v{{"a", "b"}, {"A"}, {"r"}, true, true};
  gen::AxiomShape shape;
  shape.concepts.depth = 2;
  shape.concepts.max_count = 2;
  for (int k = 0; k < 150; ++k) {
    Ontology o = gen::random_ontology(rng, v, gen::pick(rng, 1, 4), shape);
    Axiom q = gen::random_axiom(rng, v, shape);
    for (bool entail : {false, true}) {
      SearchConfig fast;
      const BoundedVerdict a = entail ? check_entailment(o, q, fast) : check_consistency(o, fast);
      const BoundedVerdict b = entail ? check_entailment(o, q, exhaustive()) : check_consistency(o, exhaustive());
      ASSERT_EQ(a.index(), b.index()) << render(o);
      if (witness(a)) {
        ASSERT_EQ(witness(a)->index, witness(b)->index) << render(o);
        ASSERT_EQ(witness(a)->interpretation, witness(b)->interpretation);
        ASSERT_TRUE(is_model(o, witness(a)->interpretation));
        if (entail) ASSERT_FALSE(satisfies_axiom(q, witness(a)->interpretation));
      }
    }
  }
}

TEST(Search, DeterministicAcrossWorkers) {
  std::mt19937 rng(17);
  gen::Vocabulary v{{"a", "b"}, {"A", "B"}, {"r", "s"}, false, true};
  for (int k = 0; k < 40; ++k) {
    Ontology o = gen::random_ontology(rng, v, gen::pick(rng, 1, 5));
    Axiom q = gen::random_axiom(rng, v);
    std::optional<std::uint64_t> first;
    for (unsigned workers : {1U, 2U, 4U}) {
      for (bool prune : {true, false}) {
        SearchConfig cfg;
        cfg.workers = workers;
        cfg.prune = prune;
        cfg.max_domain_size = 2;
        const BoundedVerdict r = check_entailment(o, q, cfg);
        const std::uint64_t code = witness(r) ? *witness(r)->index + 100 * witness(r)->interpretation.size() : 0;
        if (!first) first = code;
        ASSERT_EQ(*first, code) << render(o) << render(q);
      }
    }
  }
}

TEST(Search, WitnessBeyondSixtyFourBits) {
  std::string text;
  for (int k = 0; k < 12; ++k) text += "(a, b) : r" + std::to_string(k) + "\n";
  const Ontology small = parse_ontology(text);
  const BoundedVerdict v = check_consistency(small);
  ASSERT_NE(witness(v), nullptr);
  EXPECT_EQ(witness(v)->interpretation.size(), 1U);
  EXPECT_EQ(witness(v)->index, 4095U);

  const Ontology o = parse_ontology(text + "a : >= 3 r0.Top\n");
  EXPECT_FALSE(InterpretationSpace(o.signature, 3).count().has_value());
  const BoundedVerdict far = check_consistency(o);
  ASSERT_NE(witness(far), nullptr);
  EXPECT_EQ(witness(far)->interpretation.size(), 3U);
  EXPECT_FALSE(witness(far)->index.has_value());
  EXPECT_TRUE(is_model(o, witness(far)->interpretation));

  SearchConfig exhaustive;
  exhaustive.prune = false;
  exhaustive.max_interpretations = 1000000;
  EXPECT_THROW(check_consistency(o, exhaustive), CapExceeded);
}

TEST(Search, InconsistencyEntailsEverything) {
  std::mt19937 rng(23);
  Ontology o = parse_ontology("a : A\na : not A");
  gen::Vocabulary v{{"a", "b"}, {"A", "B"}, {"r"}, true, true};
  ASSERT_NE(none(check_consistency(o)), nullptr);
  for (int k = 0; k < 30; ++k) {
    Axiom q = gen::random_axiom(rng, v);
    EXPECT_NE(none(check_entailment(o, q)), nullptr) << render(q);
  }
}

TEST(Search, MonotoneModelSets) {
  std::mt19937 rng(31);
  gen::Vocabulary v{{"a"}, {"A", "B"}, {"r"}, false, true};
  Signature sig = gen::signature_of(v);
  for (int k = 0; k < 30; ++k) {
    Ontology o = gen::random_ontology(rng, v, gen::pick(rng, 0, 3));
    std::vector<Axiom> more = o.axioms;
    more.push_back(gen::random_axiom(rng, v));
    Ontology bigger = build_ontology(more);
    for (std::size_t n = 1; n <= 2; ++n) {
      auto small = model_indices(o, sig, n);
      auto big = model_indices(bigger, sig, n);
      EXPECT_TRUE(std::includes(small.begin(), small.end(), big.begin(), big.end()));
    }
  }
}
