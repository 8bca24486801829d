// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dlkit/cli.hpp"
#include "dlkit/fragments.hpp"
#include "dlkit/owl_export.hpp"
#include "dlkit/parser.hpp"
#include "dlkit/reasoner.hpp"
#include "dlkit/rewrite.hpp"
#include "dlkit/semantics.hpp"
#include "dlkit/structural.hpp"
#include "evaluator.hpp"
#include "generators.hpp"

using namespace dlkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("dlkit_accept_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".dl");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ontology with(const Ontology& o, const Axiom& extra) {
  std::vector<Axiom> axioms = o.axioms;
  axioms.push_back(extra);
  return build_ontology(std::move(axioms));
}

std::uint64_t space_size(const Signature& sig, std::size_t n) {
  return InterpretationSpace(sig, n).count().value_or(~std::uint64_t{0});
}

Outcome inference_suite() {
  struct Case {
    const char* ontology;
    const char* query;
  };
  const std::vector<Case> cases = {
      {"julia : Mother\nMother SubClassOf Parent\n", "julia : Parent"},
      {"(julia, john) : parentOf\nparentOf SubRoleOf ancestorOf\n", "(julia, john) : ancestorOf"},
      {"(charles, julia) : brotherOf\n(julia, john) : parentOf\nbrotherOf o parentOf SubRoleOf uncleOf\n",
       "(charles, john) : uncleOf"},
      {"(john, julia) : sonOf\n(exists sonOf.Top) SubClassOf Male\nTop SubClassOf forall sonOf.Parent\n",
       "john : Male"},
      {"(john, julia) : sonOf\n(exists sonOf.Top) SubClassOf Male\nTop SubClassOf forall sonOf.Parent\n",
       "julia : Parent"},
  };
  Outcome r;
  for (const auto& c : cases) {
    TempFile file(c.ontology);
    std::ostringstream out, err;
    const int code = cli::run({"entails", file.path(), "--axiom", c.query, "--max-domain", "3"}, out, err);
    r.require(code == 0 && out.str() == "no countermodel up to size 3\n",
              std::string(c.query) + ": exit " + std::to_string(code) + ", " + out.str() + err.str());
  }
  if (r.pass) r.detail = "5/5 inferences: no countermodel up to size 3";
  return r;
}

Outcome misconception_example() {
  const Ontology o = parse_ontology(
      "(julia, john) : parentOf\njulia : manyChildren\nmanyChildren SubClassOf >= 3 parentOf.Top\n");
  Outcome r;
  SearchConfig cfg;
  const BoundedVerdict found = check_consistency(o, cfg);
  const Witness* w = witness(found);
  r.require(w && w->interpretation.size() == 3 && is_model(o, w->interpretation), "no model of size 3 found");
  cfg.max_domain_size = 2;
  r.require(std::holds_alternative<NoneUpTo>(check_consistency(o, cfg)), "search reports a model below size 3");
  SearchConfig exhaustive;
  exhaustive.prune = false;
  exhaustive.max_domain_size = 2;
  r.require(std::holds_alternative<NoneUpTo>(check_consistency(o, exhaustive)),
            "exhaustive search reports a model below size 3");
  for (std::size_t n = 1; n <= 2; ++n) {
    r.require(all_models(o, n).empty(), "all_models nonempty at size " + std::to_string(n));
  }
  if (r.pass) r.detail = "model at size 3, none at sizes 1-2";
  return r;
}

Outcome inconsistency() {
  const Ontology o = parse_ontology("bob : Male\nbob : Female\n(Male and Female) SubClassOf Bottom\n");
  Outcome r;
  r.require(std::holds_alternative<NoneUpTo>(check_consistency(o)), "a model was found");
  for (std::size_t n = 1; n <= 3; ++n) {
    r.require(all_models(o, n).empty(), "all_models nonempty at size " + std::to_string(n));
  }
  std::mt19937 rng(2024);
  gen::Vocabulary v{{"bob", "alice"}, {"Male", "Female", "Person"}, {"r", "s"}, true, true};
  for (int k = 0; k < 20; ++k) {
    const Axiom q = gen::random_axiom(rng, v);
    r.require(std::holds_alternative<NoneUpTo>(check_entailment(o, q)), "refuted: " + render(q));
  }
  if (r.pass) r.detail = "no model at sizes 1-3; 20/20 random queries not refuted";
  return r;
}

std::uint32_t slot_in(const std::set<std::string, std::less<>>& names, const std::string& name) {
  return static_cast<std::uint32_t>(std::distance(names.begin(), names.find(name)));
}

// The extension of a concept depends only on the names occurring in it, so
// every interpretation of the 2-concept/2-role signature is covered by
// enumerating the interpretations of the concept's own names.
Outcome duality() {
  std::mt19937 rng(4);
  const gen::Vocabulary v{{}, {"A", "B"}, {"r", "s"}, false, true};
  gen::ConceptShape shape;
  shape.nominals = false;
  shape.max_count = 2;
  Outcome r;
  // Concepts over the same names share one pass over their interpretations.
  std::map<std::string, std::pair<Signature, std::vector<std::pair<Concept, Concept>>>> groups;
  for (int k = 0; k < 200; ++k) {
    const RoleExpr role = gen::random_role(rng, v);
    const Concept filler = gen::random_concept(rng, v, shape);
    Concept lhs = Concept::forall(role, filler);
    Concept rhs = Concept::negation(Concept::exists(role, Concept::negation(filler)));
    // The compiled evaluator is checked against the public one on a sample.
    for (int j = 0; j < 5; ++j) {
      const Interpretation i = gen::random_interpretation(rng, gen::signature_of(v), 3);
      r.require(eval_concept(lhs, i) == eval_concept(rhs, i), "public evaluator disagrees on " + render(lhs));
    }
    Signature sig = free_names(lhs);
    std::string key;
    for (const auto& n : sig.concepts) key += n + ",";
    for (const auto& n : sig.roles) key += n + ",";
    auto& group = groups[key];
    group.first = std::move(sig);
    group.second.emplace_back(std::move(lhs), std::move(rhs));
  }
  std::uint64_t checked = 0;
  for (const auto& [key, group] : groups) {
    const Signature& sig = group.first;
    detail::Program program([&sig](const std::string& name, NameKind kind) {
      return kind == NameKind::Concept ? slot_in(sig.concepts, name) : slot_in(sig.roles, name);
    });
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (const auto& [lhs, rhs] : group.second) slots.emplace_back(program.add_concept(lhs), program.add_concept(rhs));
    std::vector<ElementSet> values;
    for (std::size_t n = 1; n <= 3; ++n) {
      InterpretationSpace space(sig, n);
      for (auto cursor = space.cursor(); cursor.valid(); cursor.advance()) {
        program.evaluate(cursor.structure(), values);
        checked += slots.size();
        for (std::size_t k = 0; k < slots.size(); ++k) {
          if (values[slots[k].first] != values[slots[k].second]) {
            r.require(false, "discrepancy on " + render(group.second[k].first));
          }
        }
      }
    }
  }
  if (r.pass) {
    r.detail = "200 concepts, " + std::to_string(checked) + " concept/interpretation checks, 0 discrepancies";
  }
  return r;
}

// Small enough that exhaustive enumeration at size 3 stays cheap.
constexpr std::uint64_t kSpaceLimit = 1u << 17;

Ontology small_ontology(std::mt19937& rng, int axioms) {
  gen::Vocabulary v{{"a", "b"}, {"A", "B"}, {"r", "s"}, true, true};
  gen::AxiomShape shape;
  shape.concepts.depth = 2;
  shape.concepts.max_count = 2;
  for (;;) {
    Ontology o = gen::random_ontology(rng, v, axioms, shape);
    if (space_size(o.signature, 3) <= kSpaceLimit) return o;
  }
}

Outcome rewrite_equivalence() {
  std::mt19937 rng(5);
  Outcome r;
  std::size_t models = 0;
  for (int k = 0; k < 100 && r.pass; ++k) {
    const Ontology o = small_ontology(rng, gen::pick(rng, 1, 4));
    const std::vector<std::pair<const char*, Ontology>> rewrites = {
        {"desugar", desugar(o)}, {"split_equivalences", split_equivalences(o)}, {"nominalize_abox", nominalize_abox(o)}};
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto base = model_indices(o, o.signature, n);
      models += base.size();
      for (const auto& [name, rewritten] : rewrites) {
        r.require(rewritten.signature == o.signature && model_indices(rewritten, o.signature, n) == base,
                  std::string(name) + " changes the models of:\n" + render(o));
      }
    }
  }
  if (r.pass) r.detail = "100 ontologies x 3 rewrites, " + std::to_string(models) + " models compared";
  return r;
}

Outcome monotonicity() {
  std::mt19937 rng(6);
  gen::Vocabulary v{{"a", "b"}, {"A", "B"}, {"r", "s"}, true, true};
  gen::AxiomShape shape;
  shape.concepts.max_count = 2;
  Outcome r;
  for (int k = 0; k < 100 && r.pass; ++k) {
    const Ontology o = small_ontology(rng, gen::pick(rng, 0, 3));
    Axiom alpha = gen::random_axiom(rng, v, shape);
    Ontology bigger = with(o, alpha);
    while (space_size(bigger.signature, 3) > kSpaceLimit) {
      alpha = gen::random_axiom(rng, v, shape);
      bigger = with(o, alpha);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto small = model_indices(bigger, bigger.signature, n);
      const auto large = model_indices(o, bigger.signature, n);
      r.require(std::includes(large.begin(), large.end(), small.begin(), small.end()),
                "adding " + render(alpha) + " gains models of:\n" + render(o));
    }
  }
  if (r.pass) r.detail = "100 pairs, model sets shrink at sizes 1-3";
  return r;
}

Outcome simplicity() {
  const RoleExpr uncle = RoleExpr::named("uncleOf");
  const RoleExpr relative = RoleExpr::named("relativeOf");
  const std::string rbox = "brotherOf o parentOf SubRoleOf uncleOf\nparentOf SubRoleOf ancestorOf\n";
  Outcome r;
  const auto base = compute_nonsimple(parse_ontology(rbox));
  r.require(base == std::set<RoleExpr>{uncle, uncle.inverse()}, "unexpected non-simple set for the RBox");
  const std::string extended = rbox + "uncleOf SubRoleOf relativeOf\n";
  const auto grown = compute_nonsimple(parse_ontology(extended));
  r.require(grown == std::set<RoleExpr>{uncle, uncle.inverse(), relative, relative.inverse()},
            "unexpected non-simple set after uncleOf SubRoleOf relativeOf");
  const auto report = validate_simplicity(parse_ontology(extended + "Disjoint(uncleOf, auntOf)\n"));
  r.require(report.violations.size() == 1 && report.violations[0].construct == "Disjoint" &&
                report.violations[0].axiom_index == 3,
            "expected exactly one violation at the Disjoint axiom");
  if (r.pass) r.detail = "{uncleOf, inv(uncleOf)} grows by {relativeOf, inv(relativeOf)}; 1 violation";
  return r;
}

Outcome fragment_naming() {
  Outcome r;
  const std::string alchiq = dl_name(detect_features(
      parse_ontology("parentOf SubRoleOf ancestorOf\nPerson SubClassOf >= 2 inv(parentOf).(Male or not Female)\n")));
  r.require(alchiq == "ALCHIQ", "got " + alchiq + " instead of ALCHIQ");
  const std::string sroiq = dl_name(detect_features(parse_ontology(
      "Transitive(ancestorOf)\nbrotherOf o parentOf SubRoleOf uncleOf\n"
      "Beatle SubClassOf {john} or exists inv(parentOf).Top\nPerson SubClassOf <= 2 parentOf.Top\n")));
  r.require(sroiq == "SROIQ", "got " + sroiq + " instead of SROIQ");
  r.require(is_el(parse_ontology("Parent EquivalentTo exists parentOf.Top\n")), "Parent EquivalentTo exists parentOf.Top is not EL");
  r.require(!is_el(parse_ontology("Parent EquivalentTo exists parentOf.Top\nParent EquivalentTo Father or Mother\n")),
            "union did not break EL");
  if (r.pass) r.detail = "ALCHIQ, SROIQ, EL yes, EL with union no";
  return r;
}

Outcome round_trip() {
  std::mt19937 rng(9);
  gen::Vocabulary v{{"a", "b", "c", "d"}, {"A", "B", "C", "D"}, {"r", "s", "t", "u"}, true, true};
  Outcome r;
  for (int k = 0; k < 500 && r.pass; ++k) {
    const Ontology o = gen::random_ontology(rng, v, gen::pick(rng, 0, 8));
    const std::string text = render(o);
    const Ontology back = parse_ontology(text);
    r.require(back == o, "parse(render(o)) differs from o:\n" + text);
    r.require(render(back) == text, "render is not stable:\n" + text);
  }
  if (r.pass) r.detail = "500 ontologies round-trip exactly";
  return r;
}

Outcome owl_export() {
  Outcome r;
  const std::string line = export_functional(parse_ontology("Mother EquivalentTo (Female and Parent)\n"));
  r.require(line.find("\nEquivalentClasses( :Mother ObjectIntersectionOf( :Female :Parent ) )\n") != std::string::npos,
            "Mother axiom exported as:\n" + line);
  const std::string data = DLKIT_TEST_DATA;
  ExportConfig cfg;
  cfg.ontology_iri = "http://example.org/family";
  const std::string golden = slurp(data + "/family.ofn");
  r.require(!golden.empty() && export_functional(parse_ontology(slurp(data + "/family.dl")), cfg) == golden,
            "family.dl export differs from family.ofn");
  if (r.pass) r.detail = "EquivalentClasses( :Mother ObjectIntersectionOf( :Female :Parent ) ); golden file matches";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"inference suite", inference_suite},
      {"consistent ontology without small models", misconception_example},
      {"inconsistent ontology entails everything", inconsistency},
      {"forall/exists duality", duality},
      {"rewrites preserve models", rewrite_equivalence},
      {"monotonicity", monotonicity},
      {"role simplicity", simplicity},
      {"fragment naming", fragment_naming},
      {"parse/render round trip", round_trip},
      {"OWL export", owl_export},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %-42s %s (%.2fs) %s\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
