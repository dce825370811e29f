#include "treealpha/treedecomp.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "treealpha/alpha.hpp"
#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/separators.hpp"

namespace ta {

TreeDecomposition TreeDecomposition::single_bag(const VertexSet& bag) { return TreeDecomposition{Graph(1), {bag}}; }

bool TdVerdict::has_condition(int c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const TdViolation& v) { return v.condition == c; });
}

TdVerdict validate_td(const Graph& g, const TreeDecomposition& td) {
  TdVerdict r;
  auto fail = [&r](int c, std::string detail) {
    r.ok = false;
    r.violations.push_back({c, std::move(detail)});
  };
  const int nodes = td.nodes();
  if (td.tree.order() != nodes) {
    fail(0, "tree has " + std::to_string(td.tree.order()) + " nodes but " + std::to_string(nodes) + " bags");
    return r;
  }
  if (nodes == 0) {
    fail(0, "no bags");
    return r;
  }
  if (!is_connected(td.tree) || static_cast<int>(td.tree.size()) != nodes - 1) fail(0, "tree is not a tree");
  for (int t = 0; t < nodes; ++t)
    for (auto v : td.bags[t])
      if (v < 0 || v >= g.order()) {
        fail(0, "bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
        return r;
      }
  if (r.has_condition(0)) return r;
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < nodes; ++t)
    for (auto v : td.bags[t]) holders[v].push_back(t);
  for (int v = 0; v < g.order(); ++v)
    if (holders[v].empty()) fail(1, "vertex " + std::to_string(v) + " is in no bag");
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (auto t : holders[e.u])
      if (td.bags[t].contains(e.v)) covered = true;
    if (!covered) fail(2, "edge " + to_string(e) + " is in no bag");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (holders[v].size() < 2) continue;
    auto parts = components_within(td.tree, VertexSet(holders[v]));
    if (parts.size() > 1)
      fail(3, "bags holding " + std::to_string(v) + " split into " + std::to_string(parts.size()) + " subtrees: " +
                  to_string(parts[0]) + " and " + to_string(parts[1]));
  }
  return r;
}

TdStats td_stats(const Graph& g, const TreeDecomposition& td) {
  TdStats s;
  for (const auto& bag : td.bags) {
    s.width = std::max(s.width, static_cast<int>(bag.size()) - 1);
    s.independence = std::max(s.independence, alpha_exact(g, bag));
  }
  return s;
}

TreeDecomposition elimination_td(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination_td: order must list every vertex once");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    const Vertex v = order[p];
    if (v < 0 || v >= n || position[v] >= 0) throw PreconditionError("elimination_td: order must list every vertex once");
    position[v] = p;
  }
  if (n == 0) return TreeDecomposition::single_bag({});
  std::vector<VertexSet> fill(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) fill[v] = VertexSet(std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
  std::vector<VertexSet> bags;
  std::vector<Edge> tree_edges;
  std::vector<int> roots;
  for (int p = 0; p < n; ++p) {
    const Vertex v = order[p];
    std::vector<Vertex> later;
    Vertex parent = -1;
    for (auto u : fill[v])
      if (position[u] > p) {
        later.push_back(u);
        if (parent < 0 || position[u] < position[parent]) parent = u;
      }
    const VertexSet clique(later);
    for (auto u : later) fill[u] |= clique - VertexSet{u};
    bags.push_back(clique | VertexSet{v});
    if (parent >= 0)
      tree_edges.emplace_back(p, position[parent]);
    else
      roots.push_back(p);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) tree_edges.emplace_back(roots[i - 1], roots[i]);
  return TreeDecomposition{Graph(n, tree_edges), std::move(bags)};
}

int tree_alpha_exact(const Graph& g) {
  const int n = g.order();
  if (n > caps().tree_alpha) throw CapExceeded("tree_alpha", caps().tree_alpha, n);
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  // alpha of every vertex subset, by the recurrence on the lowest vertex.
  std::vector<std::uint8_t> alpha(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & ~(1U << v);
    alpha[s] = static_cast<std::uint8_t>(std::max<int>(alpha[rest], 1 + alpha[rest & ~adj[v]]));
  }
  // Eliminating v after the set `before` creates the clique {v} plus the vertices outside reachable through `before`.
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t set = 1; set <= full; ++set) {
    int value = 255;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t before = set & ~(1U << v);
      if (best[before] >= value) continue;
      std::uint32_t reach = 1U << v;
      std::uint32_t nb = adj[v];
      while (true) {
        const std::uint32_t grow = nb & before & ~reach;
        if (!grow) break;
        reach |= grow;
        for (std::uint32_t r = grow; r; r &= r - 1) nb |= adj[std::countr_zero(r)];
      }
      const std::uint32_t bag = (nb & ~before & ~(1U << v)) | (1U << v);
      value = std::min(value, std::max<int>(best[before], alpha[bag]));
    }
    best[set] = static_cast<std::uint8_t>(value);
    if (set == full) break;
  }
  return best[full];
}

namespace {

struct Assembler {
  const Graph& g;
  const SetOracle& oracle;
  const AssembleParams& params;
  AssembleResult& out;
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;

  VertexSet call(const VertexSet& universe, const VertexSet& support) {
    const InducedSubgraph sub = induced(g, universe);
    const WeightFn w = WeightFn::uniform_on(sub.graph.order(), sub.localize(support));
    const VertexSet local = oracle(sub.graph, w);
    ++out.oracle_calls;
    if (!local.empty() && (local.front() < 0 || local.ids().back() >= sub.graph.order()))
      throw ContractViolation("assemble_td: oracle returned ids outside the graph");
    if (!check_balanced(sub.graph, w, local, params.c).ok)
      throw ContractViolation("assemble_td: oracle set " + to_string(sub.lift(local)) + " is not (w," +
                              to_string(params.c) + ")-balanced on " + to_string(universe));
    const int a = alpha_exact(sub.graph, local);
    if (params.d && a > *params.d)
      throw ContractViolation("assemble_td: oracle set has alpha " + std::to_string(a) + " > d = " +
                              std::to_string(*params.d));
    out.d = std::max(out.d, a);
    return sub.lift(local);
  }

  // Decomposes G[universe] with a root bag containing boundary; returns the root node.
  int build(const VertexSet& universe, const VertexSet& boundary) {
    const int node = static_cast<int>(bags.size());
    bags.push_back(boundary);
    if (boundary == universe) return node;
    const VertexSet stable = max_stable_set(g, boundary);
    const int d = params.d ? *params.d : std::max(out.d, 1);
    // Split a large boundary's stable set; otherwise split the interior.
    const bool split_boundary = Rational(static_cast<long long>(stable.size())) * (1 - params.c) > d;
    const VertexSet sep = call(universe, split_boundary ? stable : universe - boundary);
    const VertexSet bag = boundary | sep;
    bags[node] = bag;
    const InducedSubgraph sub = induced(g, universe);
    for (const auto& comp : components(sub.graph, sub.localize(bag))) {
      const VertexSet piece = sub.lift(comp);
      const VertexSet attach = open_nbhd(g, piece) & bag;
      const VertexSet child_universe = piece | attach;
      if (child_universe == universe && attach == boundary)
        throw ContractViolation("assemble_td: no progress on " + to_string(universe));
      const int child = build(child_universe, attach);
      edges.emplace_back(node, child);
    }
    return node;
  }
};

}  // namespace

AssembleResult assemble_td(const Graph& g, const SetOracle& oracle, const AssembleParams& params) {
  if (params.c < Rational(1, 2) || params.c >= 1) throw PreconditionError("assemble_td: c must lie in [1/2, 1)");
  if (params.d && *params.d < 1) throw PreconditionError("assemble_td: d must be positive");
  AssembleResult out;
  if (g.order() == 0) {
    out.td = TreeDecomposition::single_bag({});
    return out;
  }
  Assembler a{g, oracle, params, out, {}, {}};
  a.build(g.vertices(), {});
  out.td = TreeDecomposition{Graph(static_cast<int>(a.bags.size()), a.edges), std::move(a.bags)};
  const TdVerdict verdict = validate_td(g, out.td);
  if (!verdict.ok) throw ContractViolation("assemble_td: result fails validation: " + verdict.violations[0].detail);
  out.stats = td_stats(g, out.td);
  out.bound = (3 - params.c) / (1 - params.c) * std::max(out.d, 1);
  if (Rational(out.stats.independence) > out.bound)
    throw ContractViolation("assemble_td: bag independence " + std::to_string(out.stats.independence) +
                            " exceeds " + to_string(out.bound));
  return out;
}

SetOracle treewidth_set_oracle() {
  return [](const Graph& g, const WeightFn& w) { return treewidth_separator(g, w); };
}

MwisResult mwis_brute(const Graph& g, const std::vector<double>& weights) {
  const int n = g.order();
  if (static_cast<int>(weights.size()) != n) throw PreconditionError("mwis: one weight per vertex required");
  for (double x : weights)
    if (!(x >= 0) || !std::isfinite(x)) throw PreconditionError("mwis: weights must be finite and nonnegative");
  if (n > caps().mwis_brute) throw CapExceeded("mwis_brute", caps().mwis_brute, n);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  double best = 0;
  std::uint32_t best_set = 0;
  auto rec = [&](auto&& self, int v, std::uint32_t chosen, std::uint32_t blocked, double value) -> void {
    if (v == n) {
      if (value > best) {
        best = value;
        best_set = chosen;
      }
      return;
    }
    if (!(blocked >> v & 1U)) self(self, v + 1, chosen | 1U << v, blocked | adj[v], value + weights[v]);
    self(self, v + 1, chosen, blocked, value);
  };
  rec(rec, 0, 0, 0, 0.0);
  std::vector<Vertex> set;
  for (int v = 0; v < n; ++v)
    if (best_set >> v & 1U) set.push_back(v);
  return {VertexSet(std::move(set)), best};
}

namespace {

// Stable subsets of a bag as bitmasks over bag positions.
std::vector<std::uint64_t> stable_subsets(const Graph& g, const VertexSet& bag, std::uint64_t& budget) {
  const int s = static_cast<int>(bag.size());
  std::vector<std::uint64_t> conflict(static_cast<std::size_t>(s), 0);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      if (g.adjacent(bag[a], bag[b])) conflict[a] |= std::uint64_t{1} << b;
  std::vector<std::uint64_t> out;
  auto rec = [&](auto&& self, int i, std::uint64_t chosen, std::uint64_t blocked) -> void {
    if (i == s) {
      if (budget == 0) throw CapExceeded("mwis_states", static_cast<long long>(caps().mwis_states), -1);
      --budget;
      out.push_back(chosen);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (!(blocked & bit)) self(self, i + 1, chosen | bit, blocked | conflict[i]);
    self(self, i + 1, chosen, blocked);
  };
  rec(rec, 0, 0, 0);
  return out;
}

}  // namespace

MwisResult mwis_td(const Graph& g, const std::vector<double>& weights, const TreeDecomposition& td,
                   std::optional<int> max_alpha) {
  const int n = g.order();
  if (static_cast<int>(weights.size()) != n) throw PreconditionError("mwis: one weight per vertex required");
  for (double x : weights)
    if (!(x >= 0) || !std::isfinite(x)) throw PreconditionError("mwis: weights must be finite and nonnegative");
  const TdVerdict verdict = validate_td(g, td);
  if (!verdict.ok) throw PreconditionError("mwis: invalid tree decomposition: " + verdict.violations[0].detail);
  const int nodes = td.nodes();
  for (const auto& bag : td.bags) {
    if (bag.size() > 64) throw CapExceeded("mwis bag size", 64, static_cast<long long>(bag.size()));
    if (max_alpha && alpha_exact(g, bag) > *max_alpha)
      throw PreconditionError("mwis: a bag has independence number above " + std::to_string(*max_alpha));
  }
  std::uint64_t budget = caps().mwis_states;
  std::vector<std::vector<std::uint64_t>> states(static_cast<std::size_t>(nodes));
  for (int t = 0; t < nodes; ++t) states[t] = stable_subsets(g, td.bags[t], budget);

  // Root at 0, children in BFS order; process in reverse.
  std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
  std::vector<int> order{0};
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto u : td.tree.neighbors(order[i]))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = order[i];
        order.push_back(u);
      }
  auto mask_weight = [&](const VertexSet& bag, std::uint64_t mask) {
    double s = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) s += weights[bag[std::countr_zero(m)]];
    return s;
  };
  // Positions in `to` of the bag vertices shared with `from`, indexed by position in `from`.
  auto project = [](const VertexSet& from, const VertexSet& to, std::uint64_t mask) {
    std::uint64_t out = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      while (j < to.size() && to[j] < from[i]) ++j;
      if (j < to.size() && to[j] == from[i] && (mask >> i & 1U)) out |= std::uint64_t{1} << i;
    }
    return out;
  };

  // States with no compatible child state.
  constexpr double kDead = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> value(static_cast<std::size_t>(nodes));
  // For each node and each parent-side key: best child state index.
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> best_for_key(static_cast<std::size_t>(nodes));
  std::vector<std::vector<int>> children(static_cast<std::size_t>(nodes));
  for (int t = 1; t < nodes; ++t) children[parent[order[t]]].push_back(order[t]);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const VertexSet& bag = td.bags[t];
    auto& vals = value[t];
    vals.resize(states[t].size());
    for (std::size_t s = 0; s < states[t].size(); ++s) vals[s] = mask_weight(bag, states[t][s]);
    for (auto c : children[t]) {
      const VertexSet& cbag = td.bags[c];
      for (std::size_t s = 0; s < states[t].size(); ++s) {
        // Key on the shared vertices, expressed as a mask over the parent bag.
        if (vals[s] == kDead) continue;
        const std::uint64_t key = project(bag, cbag, states[t][s]);
        auto found = best_for_key[c].find(key);
        vals[s] = found == best_for_key[c].end() ? kDead : vals[s] + value[c][found->second] - mask_weight(bag, key);
      }
    }
    if (t != 0) {
      const VertexSet& pbag = td.bags[parent[t]];
      auto& table = best_for_key[t];
      for (std::size_t s = 0; s < states[t].size(); ++s) {
        if (vals[s] == kDead) continue;
        const std::uint64_t local = project(bag, pbag, states[t][s]);
        // Translate to a mask over the parent bag.
        std::uint64_t key = 0;
        for (std::uint64_t m = local; m; m &= m - 1) {
          const Vertex v = bag[std::countr_zero(m)];
          key |= std::uint64_t{1} << (std::lower_bound(pbag.begin(), pbag.end(), v) - pbag.begin());
        }
        auto [pos, inserted] = table.emplace(key, s);
        if (!inserted && vals[s] > vals[pos->second]) pos->second = s;
      }
    }
  }
  std::size_t root_best = 0;
  for (std::size_t s = 0; s < states[0].size(); ++s)
    if (value[0][s] > value[0][root_best]) root_best = s;
  MwisResult r;
  r.value = value[0][root_best];
  // Reconstruct top-down.
  std::vector<std::size_t> pick(static_cast<std::size_t>(nodes), 0);
  pick[0] = root_best;
  std::vector<Vertex> chosen;
  for (auto t : order) {
    const VertexSet& bag = td.bags[t];
    for (std::uint64_t m = states[t][pick[t]]; m; m &= m - 1) chosen.push_back(bag[std::countr_zero(m)]);
    for (auto c : children[t]) pick[c] = best_for_key[c].at(project(bag, td.bags[c], states[t][pick[t]]));
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  r.set = VertexSet(std::move(chosen));
  return r;
}

TreeDecomposition parse_td(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("td: ") + e.what());
  }
  try {
    const int nodes = j.at("nodes").get<int>();
    if (nodes < 0) throw FormatError("td: negative node count");
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) throw FormatError("td: bad tree edge");
      es.emplace_back(a, b);
    }
    std::vector<VertexSet> bags;
    for (const auto& bag : j.at("bags")) {
      std::vector<Vertex> ids = bag.get<std::vector<Vertex>>();
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      bags.emplace_back(std::move(ids));
    }
    return TreeDecomposition{Graph(nodes, es), std::move(bags)};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("td: ") + e.what());
  }
}

std::string emit_td(const TreeDecomposition& td) {
  nlohmann::ordered_json j;
  j["nodes"] = td.nodes();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : td.tree.edges()) j["edges"].push_back({e.u, e.v});
  j["bags"] = nlohmann::ordered_json::array();
  for (const auto& b : td.bags) j["bags"].push_back(b.ids());
  return j.dump();
}

}  // namespace ta
