#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutinv/dioph.hpp"
#include "mutinv/mutclass.hpp"

namespace mutinv {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
inline Json integer_to_json(const Integer& x) {
  if (fits_long(x)) return x.get_si();
  return x.get_str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json tuple_to_json(const std::vector<Integer>& t) {
  Json a = Json::array();
  for (const auto& x : t) a.push_back(integer_to_json(x));
  return a;
}

inline std::vector<Integer> tuple_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  std::vector<Integer> t;
  for (const auto& x : j) t.push_back(integer_from_json(x));
  return t;
}

inline Json matrix_to_json(const ExchangeMatrix& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows()) rows.push_back(tuple_to_json(r));
  return Json{{"n", b.rank()}, {"rows", rows}};
}

inline ExchangeMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("matrix JSON needs \"rows\"");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(tuple_from_json(r));
  ExchangeMatrix b = ExchangeMatrix::from_rows(rows);
  if (j.contains("n") && j.at("n").get<std::size_t>() != b.rank()) throw std::invalid_argument("matrix JSON rank mismatch");
  return b;
}

inline Json catalog_to_json(const SignEquivalentCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.found) {
    Json je = matrix_to_json(e.matrix);
    je["orbit_size"] = e.orbit_size;
    je["negation_in_orbit"] = e.negation_in_orbit;
    je["skew_symmetrizer"] = e.skew_symmetrizer ? tuple_to_json(*e.skew_symmetrizer) : Json(nullptr);
    entries.push_back(je);
  }
  return Json{{"rank", c.rank},
              {"entry_bound", c.entry_bound},
              {"require_skew_symmetrizable", c.require_skew_symmetrizable},
              {"candidates_examined", c.candidates_examined},
              {"scope", c.scope},
              {"representatives", entries}};
}

inline SignEquivalentCatalog catalog_from_json(const Json& j) {
  SignEquivalentCatalog c;
  c.rank = j.at("rank").get<std::size_t>();
  c.entry_bound = j.at("entry_bound").get<long>();
  c.require_skew_symmetrizable = j.at("require_skew_symmetrizable").get<bool>();
  c.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
  c.scope = j.at("scope").get<std::string>();
  for (const auto& je : j.at("representatives")) {
    CatalogEntry e;
    e.matrix = matrix_from_json(je);
    e.orbit_size = je.at("orbit_size").get<std::size_t>();
    e.negation_in_orbit = je.at("negation_in_orbit").get<bool>();
    if (!je.at("skew_symmetrizer").is_null()) e.skew_symmetrizer = tuple_from_json(je.at("skew_symmetrizer"));
    c.found.push_back(std::move(e));
  }
  return c;
}

inline Json tree_to_json(const SolutionTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    nodes.push_back(Json{{"t", tuple_to_json(n.tuple)},
                         {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                         {"dir", n.dir ? Json(*n.dir) : Json(nullptr)}});
  }
  Json j{{"family", to_string(t.family)}, {"k", integer_to_json(t.k)}, {"bound", integer_to_json(t.bound)}};
  j["root"] = t.nodes.empty() ? Json::array() : tuple_to_json(t.nodes.front().tuple);
  j["nodes"] = nodes;
  j["pruned_edges"] = t.pruned_edges;
  return j;
}

inline SolutionTree tree_from_json(const Json& j) {
  SolutionTree t;
  t.family = parse_family(j.at("family").get<std::string>());
  t.k = integer_from_json(j.at("k"));
  t.bound = integer_from_json(j.at("bound"));
  t.pruned_edges = j.at("pruned_edges").get<std::size_t>();
  for (const auto& jn : j.at("nodes")) {
    SolutionNode n;
    n.tuple = tuple_from_json(jn.at("t"));
    if (!jn.at("parent").is_null()) n.parent = jn.at("parent").get<std::size_t>();
    if (!jn.at("dir").is_null()) n.dir = jn.at("dir").get<std::size_t>();
    t.nodes.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& p = t.nodes[i].parent;
    if (!p) continue;
    if (*p >= i) throw std::invalid_argument("tree JSON parent must precede its child");
    t.nodes[*p].children.emplace_back(*t.nodes[i].dir, i);
  }
  return t;
}

}  // namespace mutinv
