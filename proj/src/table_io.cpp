#include "isolab/table_io.hpp"

#include <algorithm>
#include <fstream>

#include "isolab/errors.hpp"
#include "isolab/rules.hpp"

namespace isolab {

namespace {

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw LoadError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_field(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_string()) throw LoadError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool flag(const Json& obj, const char* key) {
  if (!obj.contains(key)) return false;
  const Json& v = obj.at(key);
  if (!v.is_boolean()) throw LoadError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace

std::vector<LabelDecl> labels_from_json(const Json& labels) {
  if (!labels.is_array()) throw LoadError("'labels' must be an array");
  std::vector<LabelDecl> decls;
  for (const auto& l : labels) {
    LabelDecl d;
    d.id = string_field(l, "id");
    d.sign = parse_sign(string_field(l, "sign"));
    if (l.contains("inverse")) {
      if (d.sign == Sign::negative)
        throw LoadError("negative label '" + d.id + "' must not declare an inverse");
      d.inverse = string_field(l, "inverse");
    } else if (d.sign == Sign::positive) {
      throw LoadError("positive label '" + d.id + "' needs an inverse");
    }
    decls.push_back(std::move(d));
  }
  return decls;
}

Json labels_to_json(const SignedAlphabet& a) {
  Json out = Json::array();
  for (const auto& d : a.decls()) {
    Json l = {{"id", d.id}, {"sign", std::string(to_string(d.sign))}};
    if (d.sign == Sign::positive) l["inverse"] = d.inverse;
    out.push_back(std::move(l));
  }
  return out;
}

MultiTable table_from_json(const Json& doc, std::optional<std::size_t> window) {
  if (!doc.is_object()) throw LoadError("table document must be a JSON object");
  try {
    if (doc.contains("rule")) {
      const Json& r = doc.at("rule");
      auto name = string_field(r, "name");
      std::optional<std::size_t> w = window;
      if (!w && r.contains("window")) w = r.at("window").get<std::size_t>();
      auto t = rule_table(name, w);
      if (!t) throw LoadError("unknown rule '" + name + "'");
      return *t;
    }
    SignedAlphabet a(labels_from_json(member(doc, "labels")));
    const Json& products = member(doc, "products");
    if (!products.is_array()) throw LoadError("'products' must be an array");
    TableBuilder b(a);
    for (const auto& p : products) {
      LabelIndex u = a.index(string_field(p, "left"));
      LabelIndex v = a.index(string_field(p, "right"));
      if (b.is_set(u, v))
        throw LoadError("duplicate product " + a.id(u) + "·" + a.id(v));
      const Json& res = member(p, "result");
      if (!res.is_array()) throw LoadError("'result' must be an array");
      Cell c{a.empty_set(), flag(p, "infinite"), flag(p, "truncated")};
      for (const auto& id : res) {
        if (!id.is_string()) throw LoadError("result entries must be label ids");
        c.labels.insert(a.index(id.get<std::string>()));
      }
      if (c.labels.empty() && !c.exceeds_window)
        throw LoadError("empty result for " + a.id(u) + "·" + a.id(v));
      b.set(u, v, std::move(c));
    }
    return b.build();
  } catch (const LoadError&) {
    throw;
  } catch (const Error& e) {
    throw LoadError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(e.what());
  }
}

Json table_to_json(const MultiTable& t) {
  const auto& a = t.alphabet();
  if (const RuleInfo* r = t.rule()) {
    const auto& reg = rule_registry();
    if (std::any_of(reg.begin(), reg.end(), [&](const RuleEntry& e) { return e.name == r->name; }))
      return Json{{"rule", {{"name", r->name}, {"window", r->window}}}};
  }
  Json products = Json::array();
  for (LabelIndex u = 0; u < a.size(); ++u) {
    for (LabelIndex v = 0; v < a.size(); ++v) {
      const Cell& c = t.cell(u, v);
      Json p = {{"left", a.id(u)}, {"right", a.id(v)}, {"result", a.ids_of(c.labels)}};
      if (c.infinite) p["infinite"] = true;
      if (c.exceeds_window) p["truncated"] = true;
      products.push_back(std::move(p));
    }
  }
  return Json{{"labels", labels_to_json(a)}, {"products", std::move(products)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

MultiTable load_table(const std::filesystem::path& path, std::optional<std::size_t> window) {
  return table_from_json(read_json_file(path), window);
}

}  // namespace isolab
