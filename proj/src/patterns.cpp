#include "treealpha/patterns.hpp"

#include <numeric>
#include <queue>

#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/generators.hpp"

namespace ta {

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<Vertex> order)
      : g_(g), h_(h), order_(std::move(order)), map_(static_cast<std::size_t>(h.order()), -1), full_(g.order()) {
    for (int v = 0; v < g.order(); ++v) full_.set(v);
  }

  std::optional<Embedding> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (extend(0, full_)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth, const Bitset& free) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    Bitset cand = free;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      if (h_.adjacent(p, q))
        cand &= g_.row(map_[q]);
      else
        cand.subtract(g_.row(map_[q]));
    }
    for (int x = cand.first(); x >= 0; x = cand.next(x + 1)) {
      if (g_.degree(x) < h_.degree(p)) continue;
      map_[p] = x;
      Bitset rest = free;
      rest.reset(x);
      if (extend(depth + 1, rest)) return true;
    }
    map_[p] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  Embedding map_;
  Bitset full_;
};

// Breadth-first pattern order starting from a maximum-degree vertex in each component.
std::vector<Vertex> connected_order(const Graph& h) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
  while (static_cast<int>(order.size()) < h.order()) {
    Vertex root = -1;
    for (int v = 0; v < h.order(); ++v)
      if (!seen[v] && (root < 0 || h.degree(v) > h.degree(root))) root = v;
    std::queue<Vertex> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (auto u : h.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
  }
  return order;
}

std::optional<Embedding> match_uncapped(const Graph& g, const Graph& h) {
  return Matcher(g, h, connected_order(h)).run();
}

class SpiderSearch {
 public:
  SpiderSearch(const Graph& g, int t) : g_(g), t_(t), used_(g.order()) {}

  std::optional<Embedding> run() {
    for (int c = 0; c < g_.order(); ++c) {
      if (g_.degree(c) < 3) continue;
      map_.assign(1, c);
      used_.set(c);
      if (grow_leg(0)) return map_;
      used_.reset(c);
    }
    return std::nullopt;
  }

 private:
  // Only the parent may see x among the vertices placed so far.
  bool attachable(Vertex x, Vertex parent) const {
    if (used_.test(x)) return false;
    Bitset seen = g_.row(x) & used_;
    return seen.count() == 1 && seen.test(parent);
  }

  bool grow_leg(int leg) {
    if (leg == 3) return true;
    const Vertex centre = map_[0];
    Vertex floor = leg == 0 ? -1 : map_[1 + (leg - 1) * t_];
    for (auto a : g_.neighbors(centre)) {
      if (a <= floor || !attachable(a, centre)) continue;
      place(a);
      if (grow_path(leg, 1)) return true;
      unplace(a);
    }
    return false;
  }

  bool grow_path(int leg, int length) {
    if (length == t_) return grow_leg(leg + 1);
    const Vertex tip = map_.back();
    for (auto x : g_.neighbors(tip)) {
      if (!attachable(x, tip)) continue;
      place(x);
      if (grow_path(leg, length + 1)) return true;
      unplace(x);
    }
    return false;
  }

  void place(Vertex x) {
    map_.push_back(x);
    used_.set(x);
  }
  void unplace(Vertex x) {
    map_.pop_back();
    used_.reset(x);
  }

  const Graph& g_;
  int t_;
  Bitset used_;
  Embedding map_;
};

// Stable t-subsets of cand in increasing order; calls visit on each until it returns true.
template <class Visit>
bool stable_subsets(const Graph& g, const std::vector<Vertex>& cand, int t, std::vector<Vertex>& chosen,
                    std::size_t from, Visit&& visit) {
  if (static_cast<int>(chosen.size()) == t) return visit();
  for (std::size_t i = from; i < cand.size(); ++i) {
    if (cand.size() - i < static_cast<std::size_t>(t) - chosen.size()) return false;
    Vertex x = cand[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex y) { return g.adjacent(x, y); });
    if (!ok) continue;
    chosen.push_back(x);
    if (stable_subsets(g, cand, t, chosen, i + 1, visit)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<Embedding> find_biclique(const Graph& g, int t) {
  for (int a0 = 0; a0 < g.order(); ++a0) {
    if (g.degree(a0) < t) continue;
    std::vector<Vertex> nb(g.neighbors(a0).begin(), g.neighbors(a0).end());
    std::vector<Vertex> side_b;
    std::optional<Embedding> found;
    stable_subsets(g, nb, t, side_b, 0, [&] {
      Bitset common = g.row(side_b[0]);
      for (auto b : side_b) common &= g.row(b);
      std::vector<Vertex> rest;
      common.for_each([&](int x) {
        if (x > a0 && !g.adjacent(x, a0)) rest.push_back(x);
      });
      std::vector<Vertex> side_a{a0};
      return stable_subsets(g, rest, t, side_a, 0, [&] {
        found = side_a;
        found->insert(found->end(), side_b.begin(), side_b.end());
        return true;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

Graph PatternSpec::pattern() const {
  switch (kind) {
    case Kind::s_ttt:
      return ta::s_ttt(param);
    case Kind::k_tt:
      return complete_bipartite(param, param);
    case Kind::k_gamma_2:
      return ta::k_gamma_2(param);
    case Kind::explicit_graph:
      break;
  }
  return graph;
}

std::string PatternSpec::name() const {
  switch (kind) {
    case Kind::s_ttt:
      return "S_ttt(" + std::to_string(param) + ")";
    case Kind::k_tt:
      return "K_tt(" + std::to_string(param) + ")";
    case Kind::k_gamma_2:
      return "K_gamma_2(" + std::to_string(param) + ")";
    case Kind::explicit_graph:
      break;
  }
  return "explicit(n=" + std::to_string(graph.order()) + ")";
}

bool verify_embedding(const Graph& g, const Graph& h, const Embedding& map) {
  if (static_cast<int>(map.size()) != h.order()) return false;
  for (auto x : map)
    if (x < 0 || x >= g.order()) return false;
  for (int a = 0; a < h.order(); ++a)
    for (int b = a + 1; b < h.order(); ++b) {
      if (map[a] == map[b]) return false;
      if (h.adjacent(a, b) != g.adjacent(map[a], map[b])) return false;
    }
  return true;
}

std::optional<Embedding> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > caps().pattern) throw CapExceeded("pattern", caps().pattern, h.order());
  std::vector<Vertex> order(static_cast<std::size_t>(h.order()));
  std::iota(order.begin(), order.end(), 0);
  return Matcher(g, h, std::move(order)).run();
}

std::optional<Embedding> find_pattern(const Graph& g, const PatternSpec& spec) {
  if (spec.kind != PatternSpec::Kind::explicit_graph && spec.param < 1)
    throw PreconditionError("pattern parameter must be at least 1");
  switch (spec.kind) {
    case PatternSpec::Kind::s_ttt:
      return SpiderSearch(g, spec.param).run();
    case PatternSpec::Kind::k_tt:
      return find_biclique(g, spec.param);
    default:
      return match_uncapped(g, spec.pattern());
  }
}

LtResult lt_free_upto(const Graph& g, int t, int size_cap) {
  if (t < 1) throw PreconditionError("t must be at least 1");
  const Graph base = wall(t);
  const std::vector<Edge> edges = base.edges();
  const int m = static_cast<int>(edges.size());
  LtResult result;
  result.certified_cap = std::max(0, std::min(size_cap, g.order()));
  const int budget = result.certified_cap - m;  // subdivision vertices available
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  // Compositions of each total s over the m edges, in increasing s.
  auto visit = [&](auto&& self, int idx, int left) -> bool {
    if (idx == m - 1) {
      counts[idx] = left;
      std::map<Edge, int> extra;
      for (int i = 0; i < m; ++i)
        if (counts[i]) extra[edges[i]] = counts[i];
      ++result.members_tested;
      auto hit = match_uncapped(g, line_graph(subdivide(base, extra)).graph);
      if (hit) {
        result.witness = std::move(hit);
        result.subdivision = counts;
        return true;
      }
      return false;
    }
    for (int c = 0; c <= left; ++c) {
      counts[idx] = c;
      if (self(self, idx + 1, left - c)) return true;
    }
    counts[idx] = 0;
    return false;
  };
  for (int s = 0; s <= budget; ++s)
    if (visit(visit, 0, s)) {
      result.verdict = LtVerdict::witness;
      return result;
    }
  result.verdict = g.order() <= size_cap ? LtVerdict::free : LtVerdict::inconclusive;
  return result;
}

std::string to_string(LtVerdict v) {
  switch (v) {
    case LtVerdict::free:
      return "free";
    case LtVerdict::witness:
      return "witness";
    case LtVerdict::inconclusive:
      break;
  }
  return "inconclusive";
}

}  // namespace ta
