#include "treealpha/separators.hpp"

#include <numeric>

#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"

namespace ta {

namespace {

Rational power_of_two(int e) {
  BigInt p = 1;
  p <<= e;
  return Rational(p);
}

std::uint64_t saturating_binomial_sum(int n, int k) {
  // sum_{i<k} C(n,i), saturating at UINT64_MAX.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  long double term = 1;
  for (int i = 0; i < k && i <= n; ++i) {
    if (i > 0) term = term * (n - i + 1) / i;
    if (term > static_cast<long double>(kMax) - total) return kMax;
    total += static_cast<std::uint64_t>(term + 0.5L);
  }
  return total;
}

// Heaviest-component weight of G - N[x]; 0 when nothing remains.
Rational heavy_weight(const Graph& g, const WeightFn& w, const VertexSet& x) {
  auto h = heaviest_component(g, w, closed_nbhd(g, x));
  return h ? h->weight : Rational(0);
}

}  // namespace

std::vector<WeightedComponent> weighted_components(const Graph& g, const WeightFn& w, const VertexSet& removed) {
  std::vector<WeightedComponent> out;
  for (auto& c : components(g, removed)) {
    Rational weight = w.of(c);
    out.push_back({std::move(c), std::move(weight)});
  }
  return out;
}

std::optional<WeightedComponent> heaviest_component(const Graph& g, const WeightFn& w, const VertexSet& removed) {
  std::optional<WeightedComponent> best;
  for (auto& c : weighted_components(g, w, removed))
    if (!best || c.weight > best->weight) best = std::move(c);
  return best;
}

BalanceReport check_balanced(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& c) {
  if (!(c > 0 && c <= 1)) throw PreconditionError("balance fraction must lie in (0,1]");
  BalanceReport r;
  r.c = c;
  r.components = weighted_components(g, w, x);
  for (const auto& comp : r.components)
    if (w.gt(comp.weight, c)) r.offending.push_back(comp);
  r.ok = r.offending.empty();
  return r;
}

SeparatorCert make_core_cert(const Graph& g, const WeightFn& w, const VertexSet& core, const Rational& c) {
  SeparatorCert cert;
  cert.core = core;
  cert.separator = closed_nbhd(g, core);
  cert.c = c;
  cert.core_based = true;
  cert.components = weighted_components(g, w, cert.separator);
  return cert;
}

SeparatorCert make_set_cert(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& c) {
  SeparatorCert cert;
  cert.separator = x;
  cert.c = c;
  cert.core_based = false;
  cert.components = weighted_components(g, w, x);
  return cert;
}

bool validate_cert(const Graph& g, const WeightFn& w, const SeparatorCert& cert) {
  for (auto v : cert.separator | cert.core)
    if (v < 0 || v >= g.order()) return false;
  if (cert.core_based && cert.separator != closed_nbhd(g, cert.core)) return false;
  auto report = check_balanced(g, w, cert.separator, cert.c);
  if (!report.ok) return false;
  if (report.components.size() != cert.components.size()) return false;
  for (std::size_t i = 0; i < report.components.size(); ++i)
    if (report.components[i].vertices != cert.components[i].vertices ||
        report.components[i].weight != cert.components[i].weight)
      return false;
  return true;
}

std::vector<Vertex> identity_origin(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Vertex> compose_origin(std::span<const Vertex> origin, const InducedSubgraph& sub) {
  if (origin.empty()) return sub.origin;
  std::vector<Vertex> out;
  out.reserve(sub.origin.size());
  for (auto v : sub.origin) out.push_back(origin[v]);
  return out;
}

std::optional<SeparatorCert> min_core_separator(const Graph& g, const WeightFn& w, int k, const Rational& c) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const int n = g.order();
  const auto needed = saturating_binomial_sum(n, k);
  if (needed > caps().mincore_subsets)
    throw CapExceeded("mincore_subsets", static_cast<long long>(caps().mincore_subsets),
                      needed > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())
                          ? std::numeric_limits<long long>::max()
                          : static_cast<long long>(needed));
  for (int size = 0; size < k && size <= n; ++size) {
    std::vector<Vertex> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    std::optional<VertexSet> best;
    Rational best_heavy;
    while (true) {
      VertexSet core(pick);
      auto report = check_balanced(g, w, closed_nbhd(g, core), c);
      if (report.ok) {
        Rational heavy = 0;
        for (const auto& comp : report.components) heavy = std::max(heavy, comp.weight);
        if (!best || heavy < best_heavy) {
          best = core;
          best_heavy = heavy;
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (best) return make_core_cert(g, w, *best, c);
  }
  return std::nullopt;
}

BreakOracle min_core_oracle(int k) {
  return [k](const Graph& g, const WeightFn& w, std::span<const Vertex>) {
    auto cert = min_core_separator(g, w, k, Rational(1, 2));
    if (!cert) throw ContractViolation("min_core_oracle: no core of size < " + std::to_string(k));
    return *cert;
  };
}

bool is_induced_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

namespace {

bool balanced_path(const Graph& g, const WeightFn& w, const Path& p) {
  return check_balanced(g, w, closed_nbhd(g, VertexSet(p)), Rational(1, 2)).ok;
}

std::optional<Path> exhaustive_path(const Graph& g, const WeightFn& w) {
  Path p;
  auto grow = [&](auto&& self) -> bool {
    if (balanced_path(g, w, p)) return true;
    for (auto x : g.neighbors(p.back())) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = x != p[i] && !g.adjacent(x, p[i]);
      if (!ok || x == p.back()) continue;
      p.push_back(x);
      if (self(self)) return true;
      p.pop_back();
    }
    return false;
  };
  for (int v = 0; v < g.order(); ++v) {
    p.assign(1, v);
    if (grow(grow)) return p;
  }
  return std::nullopt;
}

}  // namespace

Path path_separator(const Graph& g, const WeightFn& w) {
  if (g.order() == 0) return {};
  if (!is_connected(g)) throw PreconditionError("path_separator requires a connected graph");
  const Rational half(1, 2);
  Vertex start = 0;
  Rational best = heavy_weight(g, w, {0});
  for (int v = 1; v < g.order(); ++v) {
    Rational h = heavy_weight(g, w, {v});
    if (h < best) {
      best = h;
      start = v;
    }
  }
  // Invariant: region is a heavy component of G - N[p_1..p_{k-1}] - p_k, anticomplete to
  // p_1..p_{k-1} and touching p_k.
  Path p{start};
  auto first = heaviest_component(g, w, {start});
  std::optional<VertexSet> region;
  if (first && w.gt(first->weight, half)) region = first->vertices;
  while (region) {
    const Vertex tip = p.back();
    auto inner = heaviest_component(g, w, (g.vertices() - *region) | open_nbhd(g, {tip}));
    if (!inner || !w.gt(inner->weight, half)) break;
    const VertexSet& heavy = inner->vertices;
    const VertexSet border = open_nbhd(g, heavy);
    Vertex next = -1;
    Rational next_weight;
    for (auto x : g.neighbors(tip)) {
      if (!region->contains(x) || !border.contains(x)) continue;
      Path trial = p;
      trial.push_back(x);
      Rational h = heavy_weight(g, w, VertexSet(trial));
      if (next < 0 || h < next_weight) {
        next = x;
        next_weight = h;
      }
    }
    if (next < 0) break;  // cannot happen while the invariant holds; the checks below catch it
    p.push_back(next);
    region = heavy;
  }
  if (is_induced_path(g, p) && balanced_path(g, w, p)) return p;
  if (g.order() <= caps().path_fallback) {
    if (auto q = exhaustive_path(g, w)) return *q;
  }
  throw ContractViolation("path_separator: search exhausted without a balanced induced path");
}

SeparatorCert power_separator(const Graph& g, const WeightFn& w, int i, const BreakOracle& oracle, int k,
                              std::span<const Vertex> origin) {
  if (i < 1) throw PreconditionError("power_separator needs i >= 1");
  if (k < 1) throw PreconditionError("power_separator needs k >= 1");
  std::vector<Vertex> own;
  if (origin.empty() && g.order() > 0) {
    own = identity_origin(g.order());
    origin = own;
  }
  auto call = [&](const Graph& h, const WeightFn& wh, std::span<const Vertex> org) {
    SeparatorCert cert = oracle(h, wh, org);
    if (static_cast<int>(cert.core.size()) >= k || cert.c != Rational(1, 2) || !cert.core_based ||
        !validate_cert(h, wh, cert))
      throw ContractViolation("power_separator: oracle breach on subgraph {" +
                              to_string(VertexSet(std::vector<Vertex>(org.begin(), org.end()))) + "}");
    return cert;
  };
  if (i == 1) {
    SeparatorCert cert = call(g, w, origin);
    return make_core_cert(g, w, cert.core, Rational(1, 2));
  }
  SeparatorCert previous = power_separator(g, w, i - 1, oracle, k, origin);
  VertexSet core = previous.core;
  const Rational threshold = 1 / power_of_two(i);
  const Rational scale = power_of_two(i - 1);
  for (const auto& comp : weighted_components(g, w, previous.separator)) {
    if (!w.leq(threshold, comp.weight)) continue;
    InducedSubgraph sub = induced(g, comp.vertices);
    std::vector<Vertex> sub_origin;
    for (auto v : sub.origin) sub_origin.push_back(origin[v]);
    SeparatorCert piece = call(sub.graph, w.scaled(sub, scale), sub_origin);
    core |= sub.lift(piece.core);
  }
  const long long bound = (1LL << (i + 1)) * (k - 1);
  if (static_cast<long long>(core.size()) >= bound)
    throw ContractViolation("power_separator: core of size " + std::to_string(core.size()) + " reaches bound " +
                            std::to_string(bound));
  SeparatorCert out = make_core_cert(g, w, core, threshold);
  if (!validate_cert(g, w, out)) throw ContractViolation("power_separator: result not balanced at 1/2^i");
  return out;
}

namespace {

struct ComponentTd {
  std::vector<Vertex> order;              // elimination order, local ids
  int width = 0;
};

ComponentTd eliminate_exact(const std::vector<std::uint32_t>& adj) {
  const int s = static_cast<int>(adj.size());
  const std::uint32_t full = s == 32 ? ~0U : (1U << s) - 1;
  std::vector<std::uint8_t> tw(std::size_t{1} << s, 0);
  std::vector<std::uint8_t> choice(std::size_t{1} << s, 0);
  for (std::uint32_t set = 1; set <= full && set != 0; ++set) {
    int best = 255;
    int pick = 0;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t before = set & ~(1U << v);
      int sub = tw[before];
      if (sub >= best) continue;
      // Vertices outside before+v reachable from v through before.
      std::uint32_t reach = 1U << v;
      std::uint32_t nb = adj[v];
      while (true) {
        std::uint32_t grow = nb & before & ~reach;
        if (!grow) break;
        reach |= grow;
        for (std::uint32_t r = grow; r; r &= r - 1) nb |= adj[std::countr_zero(r)];
      }
      int q = std::popcount(nb & ~before & ~(1U << v));
      int value = std::max(sub, q);
      if (value < best) {
        best = value;
        pick = v;
      }
    }
    tw[set] = static_cast<std::uint8_t>(best);
    choice[set] = static_cast<std::uint8_t>(pick);
    if (set == full) break;
  }
  ComponentTd out;
  out.width = s == 0 ? 0 : tw[full];
  out.order.assign(static_cast<std::size_t>(s), 0);
  std::uint32_t set = full;
  for (int pos = s - 1; pos >= 0; --pos) {
    int v = choice[set];
    out.order[pos] = v;
    set &= ~(1U << v);
  }
  return out;
}

}  // namespace

TreeDecomposition optimal_tree_decomposition(const Graph& g) {
  const int limit = std::min(caps().treewidth, 24);
  std::vector<VertexSet> bags;
  std::vector<Edge> tree_edges;
  int previous_root = -1;
  for (const auto& comp : components(g)) {
    const int s = static_cast<int>(comp.size());
    if (s > limit) throw CapExceeded("treewidth", limit, s);
    std::vector<std::uint32_t> adj(comp.size(), 0);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (g.adjacent(comp[a], comp[b])) adj[a] |= 1U << b;
    ComponentTd elim = eliminate_exact(adj);
    std::vector<int> position(comp.size());
    for (int p = 0; p < s; ++p) position[elim.order[p]] = p;
    const int base = static_cast<int>(bags.size());
    std::vector<std::uint32_t> fill = adj;
    int root = -1;
    for (int p = 0; p < s; ++p) {
      const int v = elim.order[p];
      std::uint32_t later = 0;
      for (std::uint32_t r = fill[v]; r; r &= r - 1) {
        int u = std::countr_zero(r);
        if (position[u] > p) later |= 1U << u;
      }
      std::vector<Vertex> bag{comp[v]};
      int parent = -1;
      for (std::uint32_t r = later; r; r &= r - 1) {
        int u = std::countr_zero(r);
        bag.push_back(comp[u]);
        fill[u] |= later & ~(1U << u);
        if (parent < 0 || position[u] < position[parent]) parent = u;
      }
      bags.emplace_back(std::move(bag));
      if (parent >= 0)
        tree_edges.emplace_back(base + p, base + position[parent]);
      else
        root = base + p;
    }
    if (previous_root >= 0) tree_edges.emplace_back(previous_root, root);
    previous_root = root;
  }
  if (bags.empty()) return TreeDecomposition::single_bag({});
  return TreeDecomposition{Graph(static_cast<int>(bags.size()), tree_edges), std::move(bags)};
}

int treewidth_exact(const Graph& g) {
  int width = 0;
  for (const auto& bag : optimal_tree_decomposition(g).bags) width = std::max(width, static_cast<int>(bag.size()) - 1);
  return width;
}

VertexSet treewidth_separator(const Graph& g, const WeightFn& w) {
  const Rational half(1, 2);
  TreeDecomposition td = optimal_tree_decomposition(g);
  const int nodes = td.nodes();
  // Root at node 0; subtree vertex sets by post-order accumulation.
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
  std::vector<VertexSet> below(td.bags);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) below[parent[*it]] |= below[*it];
  int node = 0;
  while (true) {
    int heavy = -1;
    Rational heavy_weight_value;
    for (auto c : td.tree.neighbors(node)) {
      if (c == parent[node]) continue;
      Rational side = w.of(below[c] - td.bags[node]);
      if (w.gt(side, half) && (heavy < 0 || side > heavy_weight_value)) {
        heavy = c;
        heavy_weight_value = side;
      }
    }
    if (heavy < 0) break;
    node = heavy;
  }
  if (check_balanced(g, w, td.bags[node], half).ok) return td.bags[node];
  for (const auto& bag : td.bags)
    if (check_balanced(g, w, bag, half).ok) return bag;
  throw ContractViolation("treewidth_separator: no balanced bag");
}

}  // namespace ta
