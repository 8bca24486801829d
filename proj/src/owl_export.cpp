#include "dlkit/owl_export.hpp"

#include <stdexcept>

namespace dlkit {

namespace {

std::string entity(const std::string& name) { return ":" + name; }

std::string role(const RoleExpr& r) {
  switch (r.kind()) {
    case RoleExpr::Kind::Universal: return "owl:topObjectProperty";
    case RoleExpr::Kind::Named: return entity(r.name());
    case RoleExpr::Kind::Inverse: return "ObjectInverseOf( " + entity(r.name()) + " )";
  }
  return {};
}

std::string concept_expr(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Named: return entity(c.name());
    case K::Top: return "owl:Thing";
    case K::Bottom: return "owl:Nothing";
    case K::And: return "ObjectIntersectionOf( " + concept_expr(c.lhs()) + " " + concept_expr(c.rhs()) + " )";
    case K::Or: return "ObjectUnionOf( " + concept_expr(c.lhs()) + " " + concept_expr(c.rhs()) + " )";
    case K::Not: return "ObjectComplementOf( " + concept_expr(c.operand()) + " )";
    case K::Exists: return "ObjectSomeValuesFrom( " + role(c.role()) + " " + concept_expr(c.filler()) + " )";
    case K::Forall: return "ObjectAllValuesFrom( " + role(c.role()) + " " + concept_expr(c.filler()) + " )";
    case K::AtLeast:
      return "ObjectMinCardinality( " + std::to_string(c.count()) + " " + role(c.role()) + " " +
             concept_expr(c.filler()) + " )";
    case K::AtMost:
      return "ObjectMaxCardinality( " + std::to_string(c.count()) + " " + role(c.role()) + " " +
             concept_expr(c.filler()) + " )";
    case K::Self: return "ObjectHasSelf( " + role(c.role()) + " )";
    case K::Nominal: return "ObjectOneOf( " + entity(c.name()) + " )";
  }
  return {};
}

const char* characteristic_operator(Characteristic c) {
  switch (c) {
    case Characteristic::Transitive: return "TransitiveObjectProperty";
    case Characteristic::Symmetric: return "SymmetricObjectProperty";
    case Characteristic::Asymmetric: return "AsymmetricObjectProperty";
    case Characteristic::Reflexive: return "ReflexiveObjectProperty";
    case Characteristic::Irreflexive: return "IrreflexiveObjectProperty";
  }
  return "";
}

struct AxiomWriter {
  std::string operator()(const ConceptAssertion& a) const {
    return "ClassAssertion( " + concept_expr(a.expr) + " " + entity(a.individual) + " )";
  }
  std::string operator()(const RoleAssertion& a) const {
    return "ObjectPropertyAssertion( " + role(a.role) + " " + entity(a.subject) + " " + entity(a.object) + " )";
  }
  std::string operator()(const SameIndividual& a) const {
    return "SameIndividual( " + entity(a.lhs) + " " + entity(a.rhs) + " )";
  }
  std::string operator()(const DifferentIndividuals& a) const {
    return "DifferentIndividuals( " + entity(a.lhs) + " " + entity(a.rhs) + " )";
  }
  std::string operator()(const ConceptInclusion& a) const {
    return "SubClassOf( " + concept_expr(a.sub) + " " + concept_expr(a.super) + " )";
  }
  std::string operator()(const ConceptEquivalence& a) const {
    return "EquivalentClasses( " + concept_expr(a.lhs) + " " + concept_expr(a.rhs) + " )";
  }
  std::string operator()(const RoleInclusion& a) const {
    return "SubObjectPropertyOf( " + role(a.sub) + " " + role(a.super) + " )";
  }
  std::string operator()(const RoleEquivalence& a) const {
    return "EquivalentObjectProperties( " + role(a.lhs) + " " + role(a.rhs) + " )";
  }
  std::string operator()(const RoleChainInclusion& a) const {
    return "SubObjectPropertyOf( ObjectPropertyChain( " + role(a.first) + " " + role(a.second) + " ) " +
           role(a.super) + " )";
  }
  std::string operator()(const RoleDisjointness& a) const {
    return "DisjointObjectProperties( " + role(a.lhs) + " " + role(a.rhs) + " )";
  }
  std::string operator()(const RoleCharacteristic& a) const {
    if (a.role.is_universal()) {
      throw std::invalid_argument("cannot export a characteristic of the universal role");
    }
    return std::string(characteristic_operator(a.kind)) + "( " + role(a.role) + " )";
  }
};

bool scheme_char(char c, bool first) {
  const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  if (first) return alpha;
  return alpha || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

}  // namespace

bool is_valid_iri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t k = 0; k < colon; ++k) {
    if (!scheme_char(iri[k], k == 0)) return false;
  }
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '\\' ||
        c == '^' || c == '`') {
      return false;
    }
  }
  return true;
}

std::string export_functional(const Ontology& o, const ExportConfig& cfg) {
  const std::string prefix = cfg.prefix.value_or(kDefaultOwlPrefix);
  if (!is_valid_iri(prefix)) throw std::invalid_argument("invalid prefix IRI '" + prefix + "'");
  if (cfg.ontology_iri && !is_valid_iri(*cfg.ontology_iri)) {
    throw std::invalid_argument("invalid ontology IRI '" + *cfg.ontology_iri + "'");
  }

  std::string out;
  out += "Prefix(:=<" + prefix + ">)\n";
  out += "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
  out += "Ontology(";
  if (cfg.ontology_iri) out += "<" + *cfg.ontology_iri + ">";
  out += '\n';
  for (const auto& n : o.signature.concepts) out += "Declaration( Class( " + entity(n) + " ) )\n";
  for (const auto& n : o.signature.roles) out += "Declaration( ObjectProperty( " + entity(n) + " ) )\n";
  for (const auto& n : o.signature.individuals) out += "Declaration( NamedIndividual( " + entity(n) + " ) )\n";
  for (const auto& a : o.axioms) {
    out += std::visit(AxiomWriter{}, a.body);
    out += '\n';
  }
  out += ")\n";
  return out;
}

}  // namespace dlkit
