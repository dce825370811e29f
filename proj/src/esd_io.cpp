#include <json.hpp>

#include "treealpha/errors.hpp"
#include "treealpha/esd.hpp"
#include "treealpha/io.hpp"

namespace ta {

namespace {

using nlohmann::json;

std::vector<int> split_ints(const std::string& key, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto pos = key.find(sep, start);
    std::string tok = key.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("esd: bad key '" + key + "'");
    out.push_back(std::stoi(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Edge parse_edge_key(const std::string& key) {
  auto ids = split_ints(key, '-');
  if (ids.size() != 2) throw FormatError("esd: edge key '" + key + "' needs two ids");
  return Edge(ids[0], ids[1]);
}

VertexSet parse_set(const json& j) {
  if (!j.is_array()) throw FormatError("esd: zone must be an array");
  std::vector<Vertex> ids;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError("esd: zone members must be integers");
    ids.push_back(x.get<int>());
  }
  return VertexSet(std::move(ids));
}

Graph parse_graph_json(const json& j, const char* what) {
  if (j.is_string()) return parse_graph(j.get<std::string>(), GraphFormat::graph6);
  if (!j.is_object() || !j.contains("edges")) throw FormatError(std::string("esd: ") + what + " needs an edge list");
  std::vector<Edge> es;
  int n = j.value("n", 0);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw FormatError(std::string("esd: bad edge in ") + what);
    int a = e[0].get<int>();
    int b = e[1].get<int>();
    if (a < 0 || b < 0 || a == b) throw FormatError(std::string("esd: bad edge in ") + what);
    n = std::max({n, a + 1, b + 1});
    es.emplace_back(a, b);
  }
  return Graph(n, es);
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

json set_json(const VertexSet& s) { return json(s.ids()); }

const json& section(const json& eta, const char* key) {
  static const json empty = json::object();
  auto it = eta.find(key);
  return it == eta.end() ? empty : *it;
}

}  // namespace

ExtendedStripDecomposition parse_esd(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("esd: ") + e.what());
  }
  try {
    ExtendedStripDecomposition esd;
    esd.host = parse_graph_json(j.at("host"), "host");
    esd.pattern = parse_graph_json(j.at("pattern"), "pattern");
    esd.terminals = parse_set(j.value("Z", json::array()));
    if (j.at("pattern").is_object() && j.at("pattern").contains("triangles")) {
      std::vector<Triangle> supplied;
      for (const auto& t : j.at("pattern").at("triangles")) {
        auto ids = t.get<std::vector<int>>();
        if (ids.size() != 3) throw FormatError("esd: triangle needs three ids");
        std::sort(ids.begin(), ids.end());
        supplied.push_back({ids[0], ids[1], ids[2]});
      }
      std::sort(supplied.begin(), supplied.end());
      if (supplied != triangles(esd.pattern)) throw FormatError("esd: supplied triangle list differs from the pattern");
    }
    const json eta = j.value("eta", json::object());
    for (const auto& [key, val] : section(eta, "vertices").items()) {
      auto ids = split_ints(key, '-');
      if (ids.size() != 1) throw FormatError("esd: vertex key '" + key + "'");
      esd.eta_vertex[ids[0]] = parse_set(val);
    }
    for (const auto& [key, val] : section(eta, "edges").items()) esd.eta_edge[parse_edge_key(key)] = parse_set(val);
    for (const auto& [key, val] : section(eta, "triangles").items()) {
      auto ids = split_ints(key, '-');
      if (ids.size() != 3) throw FormatError("esd: triangle key '" + key + "'");
      std::sort(ids.begin(), ids.end());
      esd.eta_triangle[Triangle{ids[0], ids[1], ids[2]}] = parse_set(val);
    }
    for (const auto& [key, val] : section(eta, "edge_ends").items()) {
      auto colon = key.find(':');
      if (colon == std::string::npos) throw FormatError("esd: edge-end key '" + key + "' needs 'u-v:x'");
      auto end = split_ints(key.substr(colon + 1), '-');
      if (end.size() != 1) throw FormatError("esd: edge-end key '" + key + "'");
      esd.eta_end[{parse_edge_key(key.substr(0, colon)), end[0]}] = parse_set(val);
    }
    return esd;
  } catch (const json::exception& e) {
    throw FormatError(std::string("esd: ") + e.what());
  }
}

std::string emit_esd(const ExtendedStripDecomposition& esd) {
  json vertices = json::object();
  json edges = json::object();
  json tris = json::object();
  json ends = json::object();
  for (const auto& [v, s] : esd.eta_vertex) vertices[std::to_string(v)] = set_json(s);
  for (const auto& [e, s] : esd.eta_edge) edges[to_string(e)] = set_json(s);
  for (const auto& [t, s] : esd.eta_triangle) tris[to_string(t)] = set_json(s);
  for (const auto& [k, s] : esd.eta_end) ends[to_string(k.first) + ":" + std::to_string(k.second)] = set_json(s);
  json j = {{"host", graph_json(esd.host)},
            {"Z", set_json(esd.terminals)},
            {"pattern", graph_json(esd.pattern)},
            {"eta", {{"vertices", vertices}, {"edges", edges}, {"triangles", tris}, {"edge_ends", ends}}}};
  return j.dump();
}

}  // namespace ta
