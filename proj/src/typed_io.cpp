#include "isolab/typed_io.hpp"

#include "isolab/errors.hpp"

namespace isolab {

namespace {

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw LoadError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string str(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_string()) throw LoadError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> strings(const Json& v, const char* what) {
  if (!v.is_array()) throw LoadError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw LoadError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

template <class F>
auto wrap_errors(F&& f) {
  try {
    return f();
  } catch (const LoadError&) {
    throw;
  } catch (const Error& e) {
    throw LoadError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(e.what());
  }
}

}  // namespace

TypedTable typed_from_json(const Json& doc) {
  return wrap_errors([&] {
    auto sorts = strings(member(doc, "sorts"), "'sorts'");
    SignedAlphabet a(labels_from_json(member(doc, "labels")));
    const std::size_t k = sorts.size();
    auto sort_of = [&](const std::string& name) {
      for (std::size_t i = 0; i < k; ++i)
        if (sorts[i] == name) return i;
      throw LoadError("unknown sort '" + name + "'");
    };
    std::vector<LabelSet> mu(k * k, a.empty_set());
    for (const auto& m : member(doc, "mu")) {
      const std::size_t p = sort_of(str(m, "from")), q = sort_of(str(m, "to"));
      mu[p * k + q] |= a.set_of(strings(member(m, "labels"), "'labels'"));
    }
    std::map<TypedTable::Key, TypedCell> products;
    for (const auto& pr : member(doc, "products")) {
      TypedTable::Key key{sort_of(str(pr, "from")), a.index(str(pr, "left")),
                          sort_of(str(pr, "via")), a.index(str(pr, "right")),
                          sort_of(str(pr, "to"))};
      TypedCell c{a.set_of(strings(member(pr, "result"), "'result'")),
                  pr.contains("infinite") && pr.at("infinite").get<bool>()};
      if (!products.emplace(key, std::move(c)).second)
        throw LoadError("duplicate product " + str(pr, "left") + "·" + str(pr, "right"));
    }
    return TypedTable(std::move(sorts), std::move(a), std::move(mu), std::move(products));
  });
}

Json typed_to_json(const TypedTable& t) {
  const auto& a = t.alphabet();
  const auto& sorts = t.sorts();
  const std::size_t k = t.sort_count();
  Json mu = Json::array();
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      if (!t.mu(p, q).empty())
        mu.push_back({{"from", sorts[p]}, {"to", sorts[q]}, {"labels", a.ids_of(t.mu(p, q))}});
  Json products = Json::array();
  const LabelIndex z = a.zero();
  for (const auto& [key, cell] : t.products()) {
    auto [p, u, q, v, r] = key;
    if ((u == z || v == z) && cell.labels == a.singleton(u == z ? v : u) && !cell.infinite)
      continue;  // unit law
    Json e = {{"from", sorts[p]}, {"via", sorts[q]}, {"to", sorts[r]},
              {"left", a.id(u)},  {"right", a.id(v)}, {"result", a.ids_of(cell.labels)}};
    if (cell.infinite) e["infinite"] = true;
    products.push_back(std::move(e));
  }
  return Json{{"sorts", sorts}, {"labels", labels_to_json(a)}, {"mu", mu}, {"products", products}};
}

JoinSpec join_spec_from_json(const Json& doc, const std::filesystem::path& base) {
  return wrap_errors([&] {
    JoinSpec spec;
    spec.sorts = strings(member(doc, "sorts"), "'sorts'");
    const Json& comps = member(doc, "components");
    for (const auto& s : spec.sorts) {
      if (!comps.contains(s)) throw LoadError("no component for sort '" + s + "'");
      const Json& c = comps.at(s);
      if (c.is_string())
        spec.components.push_back(load_table(base / c.get<std::string>()));
      else
        spec.components.push_back(table_from_json(c));
    }
    if (doc.contains("cross_labels")) {
      for (const auto& l : doc.at("cross_labels")) {
        CrossLabel cl{str(l, "id"), parse_sign(str(l, "sign")), {}, str(l, "from"), str(l, "to")};
        if (l.contains("inverse")) cl.inverse = str(l, "inverse");
        spec.cross_labels.push_back(std::move(cl));
      }
    }
    if (doc.contains("cross_products")) {
      for (const auto& p : doc.at("cross_products")) {
        spec.cross_products.push_back({str(p, "from"), str(p, "via"), str(p, "to"), str(p, "left"),
                                       str(p, "right"), strings(member(p, "result"), "'result'")});
      }
    }
    return spec;
  });
}

}  // namespace isolab
