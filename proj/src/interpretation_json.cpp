#include "dlkit/interpretation_json.hpp"

#include <json.hpp>

namespace dlkit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw InterpretationError("interpretation JSON: " + what); }

Element lookup(const Interpretation& i, const json& id, const std::string& context) {
  if (!id.is_string()) bad(context + ": element ids must be strings");
  auto e = i.element(id.get<std::string>());
  if (!e) bad(context + ": unknown domain element '" + id.get<std::string>() + "'");
  return *e;
}

}  // namespace

Interpretation interpretation_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "domain" && key != "concepts" && key != "roles" && key != "individuals") {
      bad("unknown key '" + key + "'");
    }
  }
  if (!doc.contains("domain") || !doc["domain"].is_array()) bad("'domain' must be an array");

  std::vector<std::string> domain;
  for (const auto& id : doc["domain"]) {
    if (!id.is_string()) bad("domain entries must be strings");
    domain.push_back(id.get<std::string>());
  }
  Interpretation out(std::move(domain));

  auto section = [&](const char* key) -> const json* {
    if (!doc.contains(key)) return nullptr;
    const json& s = doc[key];
    if (!s.is_object()) bad(std::string("'") + key + "' must be an object");
    return &s;
  };

  if (const json* concepts = section("concepts")) {
    for (const auto& [name, members] : concepts->items()) {
      if (!members.is_array()) bad("concept '" + name + "' must map to an array");
      ElementSet ext;
      for (const auto& id : members) ext.insert(lookup(out, id, "concept '" + name + "'"));
      out.set_concept(name, ext);
    }
  }
  if (const json* roles = section("roles")) {
    for (const auto& [name, pairs] : roles->items()) {
      if (!pairs.is_array()) bad("role '" + name + "' must map to an array of pairs");
      Relation rel(out.size());
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) bad("role '" + name + "' entries must be [subject, object] pairs");
        rel.insert(lookup(out, p[0], "role '" + name + "'"), lookup(out, p[1], "role '" + name + "'"));
      }
      out.set_role(name, std::move(rel));
    }
  }
  if (const json* inds = section("individuals")) {
    for (const auto& [name, id] : inds->items()) out.set_individual(name, lookup(out, id, "individual '" + name + "'"));
  }
  return out;
}

void fill_missing_as_empty(Interpretation& i, const Signature& sig) {
  for (const auto& n : sig.concepts) {
    if (!i.concepts().contains(n)) i.set_concept(n, ElementSet{});
  }
  for (const auto& n : sig.roles) {
    if (!i.roles().contains(n)) i.set_role(n, Relation(i.size()));
  }
  for (const auto& n : sig.individuals) {
    if (!i.individuals().contains(n)) throw UnmappedName(n, NameKind::Individual);
  }
}

std::string interpretation_to_json(const Interpretation& i, int indent) {
  json doc = json::object();
  doc["domain"] = i.domain();
  json concepts = json::object();
  for (const auto& [name, ext] : i.concepts()) {
    json members = json::array();
    for (Element e : ext.elements()) members.push_back(i.id(e));
    concepts[name] = std::move(members);
  }
  json roles = json::object();
  for (const auto& [name, rel] : i.roles()) {
    json pairs = json::array();
    for (auto [x, y] : rel.pairs()) pairs.push_back({i.id(x), i.id(y)});
    roles[name] = std::move(pairs);
  }
  json inds = json::object();
  for (const auto& [name, e] : i.individuals()) inds[name] = i.id(e);
  doc["concepts"] = std::move(concepts);
  doc["roles"] = std::move(roles);
  doc["individuals"] = std::move(inds);
  return doc.dump(indent);
}

}  // namespace dlkit
