#pragma once

// OWL 2 Functional-Style Syntax output. Every name is written as ":name";
// the ":" prefix expands to ExportConfig::prefix.

#include <optional>
#include <string>

#include "dlkit/ast.hpp"

namespace dlkit {

inline constexpr const char* kDefaultOwlPrefix = "http://example.org/ontology#";

struct ExportConfig {
  std::optional<std::string> ontology_iri;
  std::optional<std::string> prefix;
};

// True for an absolute IRI: scheme ":" followed by characters allowed
// unescaped inside <...> in Functional-Style Syntax.
bool is_valid_iri(std::string_view iri);

// Throws std::invalid_argument for an invalid IRI or prefix, or for a role
// characteristic of the universal role.
std::string export_functional(const Ontology& o, const ExportConfig& cfg = {});

}  // namespace dlkit
