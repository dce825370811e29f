#pragma once

// Brute-force reference implementations. Deliberately naive and independent of the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include <treealpha/graph.hpp>

namespace ta::testing {

inline int naive_alpha(const Graph& g, const VertexSet& x) {
  const auto& ids = x.ids();
  const int n = static_cast<int>(ids.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1) && g.adjacent(ids[i], ids[j])) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Length of a shortest cycle, 0 for forests.
inline int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Exhaustive isomorphism test by permutation search (small graphs only).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x] || db[x] != da[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], x);
      if (!ok) continue;
      map[v] = x;
      used[x] = 1;
      if (self(self, v + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Tries every injective map of pattern vertices into host vertices.
inline bool naive_contains(const Graph& g, const Graph& h) {
  const int k = h.order();
  std::vector<int> map(k, -1);
  std::vector<char> used(g.order(), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (h.adjacent(a, b) != g.adjacent(map[a], map[b])) return false;
      return true;
    }
    for (int x = 0; x < g.order(); ++x) {
      if (used[x]) continue;
      used[x] = 1;
      map[i] = x;
      bool hit = self(self, i + 1);
      used[x] = 0;
      if (hit) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Some induced tree holds three vertices of z (subset enumeration per triple).
inline bool naive_has_tree_through_three(const Graph& g, const VertexSet& z) {
  const int n = g.order();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      for (std::size_t k = j + 1; k < z.size(); ++k) {
        const std::uint32_t need = (1U << z[i]) | (1U << z[j]) | (1U << z[k]);
        for (std::uint32_t s = 0; s < (1U << n); ++s) {
          if ((s & need) != need) continue;
          std::vector<Vertex> keep;
          for (int v = 0; v < n; ++v)
            if (s >> v & 1U) keep.push_back(v);
          Graph sub = induced(g, VertexSet(keep)).graph;
          if (is_connected(sub) && static_cast<int>(sub.size()) == sub.order() - 1) return true;
        }
      }
  return false;
}

// No induced cycle of length >= 4 (checked over every vertex subset).
inline bool naive_is_chordal(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (__builtin_popcount(s) < 4) continue;
    bool cycle = true;
    std::vector<Vertex> keep;
    for (int v = 0; v < n && cycle; ++v) {
      if (!(s >> v & 1U)) continue;
      keep.push_back(v);
      int deg = 0;
      for (int u = 0; u < n; ++u)
        if ((s >> u & 1U) && g.adjacent(u, v)) ++deg;
      cycle = deg == 2;
    }
    if (cycle && is_connected(induced(g, VertexSet(keep)).graph)) return false;
  }
  return true;
}

// Minimum over all chordal supergraphs H of the largest alpha_G over cliques of H (n <= 6 or so).
inline int naive_tree_alpha(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<Edge> missing;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b)) missing.emplace_back(a, b);
  int best = n;
  for (std::uint32_t add = 0; add < (1U << missing.size()); ++add) {
    std::vector<Edge> es = g.edges();
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (add >> i & 1U) es.push_back(missing[i]);
    Graph h(n, es);
    if (!naive_is_chordal(h)) continue;
    int worst = 0;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
      std::vector<Vertex> ids;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1U) ids.push_back(v);
      bool clique = true;
      for (std::size_t i = 0; i < ids.size() && clique; ++i)
        for (std::size_t j = i + 1; j < ids.size() && clique; ++j) clique = h.adjacent(ids[i], ids[j]);
      if (clique) worst = std::max(worst, naive_alpha(g, VertexSet(ids)));
    }
    best = std::min(best, worst);
  }
  return best;
}

// Maximum weight of a stable set by subset enumeration.
inline double naive_mwis(const Graph& g, const std::vector<double>& w) {
  const int n = g.order();
  double best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    double value = 0;
    for (int v = 0; v < n && ok; ++v) {
      if (!(s >> v & 1U)) continue;
      value += w[v];
      for (int u = v + 1; u < n && ok; ++u)
        if ((s >> u & 1U) && g.adjacent(u, v)) ok = false;
    }
    if (ok) best = std::max(best, value);
  }
  return best;
}

}  // namespace ta::testing
