#pragma once

// JSON form of an interpretation:
//
//   {"domain": ["e0", "e1"],
//    "concepts": {"Female": ["e0"]},
//    "roles": {"parentOf": [["e0", "e1"]]},
//    "individuals": {"julia": "e0"}}
//
// Unknown keys are rejected.

#include <string>
#include <string_view>

#include "dlkit/ast.hpp"
#include "dlkit/semantics.hpp"

namespace dlkit {

// Throws InterpretationError on malformed input.
Interpretation interpretation_from_json(std::string_view text);

// Gives concept and role names of `sig` missing from `i` an empty extension.
// Individuals cannot be defaulted; a missing one raises UnmappedName.
void fill_missing_as_empty(Interpretation& i, const Signature& sig);

// Keys are sorted; pairs appear in (subject, object) order.
std::string interpretation_to_json(const Interpretation& i, int indent = 2);

}  // namespace dlkit
