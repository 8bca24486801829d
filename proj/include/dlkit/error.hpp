#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlkit {

// Base for every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NameKind { Individual, Concept, Role };

const char* to_string(NameKind kind);

// One name used in two syntactic positions of different kinds.
class NameKindConflict : public Error {
 public:
  NameKindConflict(std::string name, NameKind first, NameKind second);

  const std::string& name() const { return name_; }
  NameKind first() const { return first_; }
  NameKind second() const { return second_; }

 private:
  std::string name_;
  NameKind first_;
  NameKind second_;
};

// Evaluation touched a name the interpretation does not map.
class UnmappedName : public Error {
 public:
  UnmappedName(std::string name, NameKind kind);

  const std::string& name() const { return name_; }
  NameKind kind() const { return kind_; }

 private:
  std::string name_;
  NameKind kind_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(unsigned long long cap);
  unsigned long long cap() const { return cap_; }

 private:
  unsigned long long cap_;
};

// Symmetric/Asymmetric characteristics of the universal role need U⁻,
// which the role grammar cannot express.
class InverseOfUniversal : public Error {
 public:
  explicit InverseOfUniversal(std::size_t axiom_index);
  std::size_t axiom_index() const { return axiom_index_; }

 private:
  std::size_t axiom_index_;
};

class InterpretationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlkit
