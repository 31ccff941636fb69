#include "lzpath/export.hpp"

namespace lzpath {

using nlohmann::json;

json graph_to_json(const CrystalGraph& g) {
  json elements = json::array();
  for (int idx = 0; idx < g.size(); ++idx) elements.push_back(g.key(idx));
  json edges = json::object();
  for (int j = 0; j < g.datum().num_nodes(); ++j) {
    json list = json::array();
    for (int idx = 0; idx < g.size(); ++idx) {
      int t = g.lower_edge(j, idx);
      if (t >= 0) list.push_back(json::array({idx, t}));
    }
    edges[std::to_string(j)] = std::move(list);
  }
  return json{{"elements", std::move(elements)},
              {"edges", std::move(edges)},
              {"source", g.source()}};
}

json poly_to_json(const LaurentPolynomial& p) {
  json o = json::object();
  for (const auto& [e, c] : p.coefficients()) o[std::to_string(e)] = c;
  return o;
}

json energy_table_to_json(TableSet& ts, const LevelZeroDominantWeight& a,
                          const LevelZeroDominantWeight& b) {
  const TableSet::PairTables& pt = ts.pair(a, b);
  json h = json::object();
  for (int idx = 0; idx < pt.forward->size(); ++idx) h[pt.forward->key(idx)] = pt.energy[idx];
  return json{{"shape", json::array({a.key(), b.key()})}, {"H", std::move(h)}};
}

json degree_table_to_json(TableSet& ts, const LevelZeroDominantWeight& shape) {
  const CrystalGraph& g = ts.path_crystal(shape);
  const std::vector<long long>& deg = ts.degree(shape);
  json d = json::object();
  for (int idx = 0; idx < g.size(); ++idx) d[g.key(idx)] = deg[idx];
  return json{{"shape", shape.key()}, {"Deg", std::move(d)}};
}

json report_to_json(const CheckReport& rep) {
  return json{{"name", rep.name},
              {"ok", rep.ok},
              {"checked", rep.checked},
              {"counterexamples", rep.counterexamples}};
}

}  // namespace lzpath
