#include "dlkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlkit/fragments.hpp"
#include "dlkit/interpretation_json.hpp"
#include "dlkit/owl_export.hpp"
#include "dlkit/parser.hpp"
#include "dlkit/reasoner.hpp"
#include "dlkit/rewrite.hpp"
#include "dlkit/semantics.hpp"
#include "dlkit/structural.hpp"

namespace dlkit::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultCap = 100'000'000;

constexpr const char* kFooter = R"(Exit codes:
  0  success; `consistent` found a model; `entails` found no countermodel
  1  check failed; `consistent` found no model up to the bound; `entails`
     found a countermodel
  2  parse, usage or input error, or the enumeration cap was exceeded

Bounded search only looks at domains up to --max-domain elements, so
"no model" and "no countermodel" are inconclusive beyond that size.
DLKIT_MAX_INTERPRETATIONS caps the candidates a search may visit (default 1e8).)";

// Reported on stderr with exit code 2.
struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("DLKIT_MAX_INTERPRETATIONS");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("DLKIT_MAX_INTERPRETATIONS is not a number: '") + env + "'");
  }
}

json axiom_list(const Ontology& o) {
  json list = json::array();
  for (const auto& a : o.axioms) list.push_back(render(a));
  return list;
}

json signature_json(const Signature& s) {
  return json{{"individuals", s.individuals}, {"concepts", s.concepts}, {"roles", s.roles}};
}

std::string location(const Axiom& a, std::size_t index) {
  if (a.where) return "line " + std::to_string(a.where->line);
  return "axiom " + std::to_string(index + 1);
}

struct Options {
  std::string file;
  bool json = false;
  bool universal_simple = false;
  std::size_t max_domain = 3;
  unsigned workers = 1;
  std::string emit_model;
  std::string axiom;
  std::string interpretation;
  bool partial_as_empty = false;
  std::string iri;
  std::string prefix;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  Ontology load() {
    text_ = read_file(opt_.file);
    return parse_ontology(text_);
  }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int parse() {
    Ontology o = load();
    if (opt_.json) {
      emit({{"axioms", axiom_list(o)}, {"signature", signature_json(o.signature)}});
    } else {
      out_ << render(o);
    }
    return kSuccess;
  }

  int rewrite(Ontology (*fn)(const Ontology&)) {
    Ontology o = fn(load());
    if (opt_.json) {
      emit({{"axioms", axiom_list(o)}});
    } else {
      out_ << render(o);
    }
    return kSuccess;
  }

  int check() {
    Ontology o = load();
    StructuralConfig cfg;
    cfg.universal_role_simple = opt_.universal_simple;
    SimplicityReport report = validate_simplicity(o, cfg);
    const bool chains = has_role_chains(o);
    if (chains) err_ << "warning: role chains present; regularity is not checked\n";

    if (opt_.json) {
      json ns = json::array();
      for (const auto& r : report.non_simple) ns.push_back(render(r));
      json violations = json::array();
      for (const auto& v : report.violations) {
        json entry{{"axiom", v.axiom_index + 1}, {"construct", v.construct}, {"role", render(v.role)}};
        if (v.where) {
          entry["line"] = v.where->line;
          entry["column"] = v.where->column;
        }
        violations.push_back(std::move(entry));
      }
      emit({{"non_simple", ns}, {"violations", violations}, {"ok", report.ok()}, {"regularity_checked", !chains}});
    } else {
      out_ << "non-simple roles:";
      if (report.non_simple.empty()) out_ << " none";
      bool first = true;
      for (const auto& r : report.non_simple) {
        out_ << (first ? " " : ", ") << render(r);
        first = false;
      }
      out_ << '\n';
      for (const auto& v : report.violations) {
        out_ << "violation: " << location(o.axioms[v.axiom_index], v.axiom_index) << ": " << v.construct
             << " uses non-simple role " << render(v.role) << '\n';
      }
      out_ << (report.ok() ? "simplicity: ok\n" : "simplicity: violated\n");
    }
    return report.ok() ? kSuccess : kNegative;
  }

  SearchConfig search_config() const {
    SearchConfig cfg;
    cfg.max_domain_size = opt_.max_domain;
    cfg.max_interpretations = enumeration_cap();
    cfg.workers = opt_.workers;
    return cfg;
  }

  int consistent() {
    Ontology o = desugar(load());
    BoundedVerdict v = check_consistency(o, search_config());
    if (const Witness* w = witness(v)) {
      if (!opt_.emit_model.empty()) write_file(opt_.emit_model, interpretation_to_json(w->interpretation) + "\n");
      const std::size_t size = w->interpretation.size();
      if (opt_.json) {
        emit({{"verdict", "model"},
              {"domain_size", size},
              {"model", json::parse(interpretation_to_json(w->interpretation))}});
      } else {
        out_ << "model found with domain size " << size << '\n';
      }
      return kSuccess;
    }
    if (opt_.json) {
      emit({{"verdict", "none"}, {"bound", opt_.max_domain}});
    } else {
      out_ << "no model up to size " << opt_.max_domain << '\n';
    }
    return kNegative;
  }

  int entails() {
    Ontology o = desugar(load());
    std::optional<Axiom> parsed;
    try {
      parsed = parse_axiom(opt_.axiom, o.signature);
    } catch (const ParseError& e) {
      throw InputError("--axiom: column " + std::to_string(e.column()) + ": " + e.message());
    }
    const Axiom& query = *parsed;
    BoundedVerdict v = check_entailment(o, query, search_config());
    if (const Witness* w = witness(v)) {
      if (!opt_.emit_model.empty()) write_file(opt_.emit_model, interpretation_to_json(w->interpretation) + "\n");
      const std::size_t size = w->interpretation.size();
      if (opt_.json) {
        emit({{"verdict", "countermodel"},
              {"axiom", render(query)},
              {"domain_size", size},
              {"countermodel", json::parse(interpretation_to_json(w->interpretation))}});
      } else {
        out_ << "countermodel found with domain size " << size << '\n';
        out_ << interpretation_to_json(w->interpretation) << '\n';
      }
      return kNegative;
    }
    if (opt_.json) {
      emit({{"verdict", "none"}, {"axiom", render(query)}, {"bound", opt_.max_domain}});
    } else {
      out_ << "no countermodel up to size " << opt_.max_domain << '\n';
    }
    return kSuccess;
  }

  int model_check() {
    Ontology o = load();
    Interpretation i = interpretation_from_json(read_file(opt_.interpretation));
    if (opt_.partial_as_empty) fill_missing_as_empty(i, o.signature);
    std::vector<bool> results = check_axioms(o, i);
    bool all = true;
    json rows = json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
      all = all && results[k];
      if (opt_.json) {
        rows.push_back({{"axiom", render(o.axioms[k])}, {"holds", static_cast<bool>(results[k])}});
      } else {
        out_ << (results[k] ? "holds  " : "fails  ") << render(o.axioms[k]) << '\n';
      }
    }
    if (opt_.json) {
      emit({{"axioms", rows}, {"model", all}});
    } else {
      out_ << (all ? "model: yes\n" : "model: no\n");
    }
    return all ? kSuccess : kNegative;
  }

  int fragment() {
    Ontology o = load();
    FeatureSet f = detect_features(o);
    const std::string name = dl_name(f);
    const bool el = is_el(o);
    const bool elpp = is_elpp(o);
    const bool abox_only = f.has_abox && !f.has_tbox && !std::any_of(o.axioms.begin(), o.axioms.end(), [](const Axiom& a) {
      return a.is_rbox();
    });
    if (opt_.json) {
      emit({{"name", name}, {"el", el}, {"elpp", elpp}, {"abox_only", abox_only}});
    } else {
      out_ << "name: " << name << '\n';
      out_ << "EL: " << (el ? "yes" : "no") << '\n';
      out_ << "EL++: " << (elpp ? "yes" : "no") << '\n';
      if (abox_only) out_ << "note: assertions do not affect the constructor-based name\n";
    }
    return kSuccess;
  }

  int export_owl() {
    Ontology o = load();
    ExportConfig cfg;
    if (!opt_.iri.empty()) cfg.ontology_iri = opt_.iri;
    if (!opt_.prefix.empty()) cfg.prefix = opt_.prefix;
    std::string text;
    try {
      text = export_functional(o, cfg);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (opt_.json) {
      emit({{"owl", text}});
    } else {
      out_ << text;
    }
    return kSuccess;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::string text_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Description logic toolkit: parse, check, reason over and export SROIQ ontologies", "dlkit"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Print a structured JSON report");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", opt.file, "Ontology file")->required(); };

  auto* parse = app.add_subcommand("parse", "Print the canonical rendering of an ontology");
  file_arg(parse);
  auto* check = app.add_subcommand("check", "Check simple-role restrictions");
  file_arg(check);
  check->add_flag("--universal-simple", opt.universal_simple, "Treat the universal role as simple");
  auto* consistent = app.add_subcommand("consistent", "Search for a model up to a domain size");
  file_arg(consistent);
  auto* entails = app.add_subcommand("entails", "Search for a countermodel to an axiom");
  file_arg(entails);
  entails->add_option("--axiom", opt.axiom, "Axiom to test, in ontology syntax")->required();
  for (auto* sub : {consistent, entails}) {
    sub->add_option("--max-domain", opt.max_domain, "Largest domain size to search")
        ->check(CLI::Range(std::size_t{1}, kMaxDomainSize))
        ->capture_default_str();
    sub->add_option("--emit-model", opt.emit_model, "Write the witness interpretation as JSON");
    sub->add_option("--workers", opt.workers, "Parallel search workers")->check(CLI::Range(1U, 256U));
  }
  auto* model_check = app.add_subcommand("model-check", "Check each axiom against an interpretation");
  file_arg(model_check);
  model_check->add_option("--interpretation", opt.interpretation, "Interpretation JSON file")->required();
  model_check->add_flag("--partial-as-empty", opt.partial_as_empty,
                        "Give unlisted concept and role names an empty extension");
  auto* desugar_cmd = app.add_subcommand("desugar", "Replace role characteristics by core axioms");
  file_arg(desugar_cmd);
  auto* nominalize = app.add_subcommand("nominalize", "Turn assertions into inclusions with nominals");
  file_arg(nominalize);
  auto* fragment = app.add_subcommand("fragment", "Name the DL fragment an ontology uses");
  file_arg(fragment);
  auto* export_owl = app.add_subcommand("export-owl", "Write OWL 2 Functional-Style Syntax");
  file_arg(export_owl);
  export_owl->add_option("--iri", opt.iri, "Ontology IRI");
  export_owl->add_option("--prefix", opt.prefix, "IRI the ':' prefix expands to");

  std::vector<const char*> argv{"dlkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*parse) return runner.parse();
    if (*check) return runner.check();
    if (*consistent) return runner.consistent();
    if (*entails) return runner.entails();
    if (*model_check) return runner.model_check();
    if (*desugar_cmd) return runner.rewrite(&desugar);
    if (*nominalize) return runner.rewrite(&nominalize_abox);
    if (*fragment) return runner.fragment();
    if (*export_owl) return runner.export_owl();
  } catch (const ParseError& e) {
    err << opt.file << ":" << e.line() << ":" << e.column() << ": " << to_string(e.kind())
        << " error: " << e.message() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dlkit::cli
