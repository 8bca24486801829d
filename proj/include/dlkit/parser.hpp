#pragma once

// Text format for ontologies, one axiom per line:
//
//   julia : Mother                      (julia, john) : parentOf
//   julia != john                       john = johnny
//   Mother EquivalentTo (Female and Parent)
//   exists sonOf.Top SubClassOf Male    Person SubClassOf >= 2 childOf.Parent
//   parentOf SubRoleOf ancestorOf       parentOf EquivalentRole inv(childOf)
//   brotherOf o parentOf SubRoleOf uncleOf
//   Disjoint(parentOf, childOf)         Transitive(ancestorOf)
//
// Concept operators bind as: not / quantifiers > and > or, both binary
// operators associating to the left. '#' starts a comment.

#include <cstddef>
#include <string>
#include <string_view>

#include "dlkit/ast.hpp"
#include "dlkit/error.hpp"

namespace dlkit {

class ParseError : public Error {
 public:
  enum class Kind { Lexical, Syntax, NameKindConflict };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

const char* to_string(ParseError::Kind kind);

Ontology parse_ontology(std::string_view text);

// Parses a single axiom. Names not yet in `signature` get the kind implied by
// their position; names already there must be used consistently.
Axiom parse_axiom(std::string_view text, const Signature& signature = {});

Concept parse_concept(std::string_view text, const Signature& signature = {});

std::string render(const RoleExpr& role);
std::string render(const Concept& concept_expr);
std::string render(const Axiom& axiom);
// One axiom per line, each terminated by '\n'.
std::string render(const Ontology& ontology);

}  // namespace dlkit
