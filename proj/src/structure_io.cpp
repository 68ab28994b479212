#include "isolab/structure_io.hpp"

#include "isolab/errors.hpp"

namespace isolab {

RelationalStructure structure_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw LoadError("structure document must be a JSON object");
    for (const char* key : {"universe", "relations", "window"})
      if (!doc.contains(key)) throw LoadError(std::string("missing field '") + key + "'");
    RelationalStructure s;
    s.universe = doc.at("universe").get<std::vector<Element>>();
    s.window = doc.at("window").get<std::vector<Element>>();
    const Json& rel = doc.at("relations");
    if (!rel.is_object()) throw LoadError("'relations' must be an object");
    for (const auto& [label, pairs] : rel.items()) {
      s.labels.push_back(label);
      s.relations.emplace_back();
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) throw LoadError("relation entries must be [a, b]");
        s.relations.back().emplace_back(p[0].get<Element>(), p[1].get<Element>());
      }
    }
    if (doc.contains("signs"))
      for (const auto& [label, sign] : doc.at("signs").items())
        s.signs[label] = parse_sign(sign.get<std::string>());
    if (doc.contains("inverses"))
      for (const auto& [label, inv] : doc.at("inverses").items())
        s.inverses[label] = inv.get<std::string>();
    if (doc.contains("zero")) s.zero = doc.at("zero").get<std::string>();
    return s;
  } catch (const LoadError&) {
    throw;
  } catch (const Error& e) {
    throw LoadError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(e.what());
  }
}

Json structure_to_json(const RelationalStructure& s) {
  Json rel = Json::object();
  for (std::size_t l = 0; l < s.labels.size(); ++l) {
    Json pairs = Json::array();
    for (const auto& [a, b] : s.relations[l]) pairs.push_back({a, b});
    rel[s.labels[l]] = std::move(pairs);
  }
  Json doc = {{"universe", s.universe}, {"relations", std::move(rel)}, {"window", s.window}};
  if (!s.signs.empty()) {
    Json signs = Json::object();
    for (const auto& [l, sg] : s.signs) signs[l] = std::string(to_string(sg));
    doc["signs"] = std::move(signs);
  }
  if (!s.inverses.empty()) doc["inverses"] = s.inverses;
  if (s.zero != "0") doc["zero"] = s.zero;
  return doc;
}

RelationalStructure load_structure(const std::filesystem::path& path) {
  return structure_from_json(read_json_file(path));
}

}  // namespace isolab
