#include "treealpha/generators.hpp"

#include "treealpha/errors.hpp"

namespace ta {

namespace {

void require_positive(int value, const char* name) {
  if (value <= 0) throw PreconditionError(std::string(name) + " must be positive");
}

}  // namespace

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(Rng& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Graph path_graph(int k) {
  require_positive(k, "path length");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return Graph(k, es);
}

Graph cycle_graph(int k) {
  if (k < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  return Graph(k, es);
}

Graph complete_graph(int k) {
  require_positive(k, "clique size");
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return Graph(k, es);
}

Graph complete_bipartite(int a, int b) {
  require_positive(a, "side a");
  require_positive(b, "side b");
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, es);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph grid_graph(int rows, int cols) {
  require_positive(rows, "rows");
  require_positive(cols, "cols");
  std::vector<Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) es.emplace_back(v, v + 1);
      if (r + 1 < rows) es.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, es);
}

Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

Graph s_ttt(int t) {
  require_positive(t, "t");
  std::vector<Edge> es;
  for (int j = 0; j < 3; ++j) {
    int prev = 0;
    for (int i = 0; i < t; ++i) {
      int v = 1 + j * t + i;
      es.emplace_back(prev, v);
      prev = v;
    }
  }
  return Graph(3 * t + 1, es);
}

Graph k_gamma_2(int gamma) {
  require_positive(gamma, "gamma");
  std::vector<Edge> es;
  int next = gamma;
  for (int i = 0; i < gamma; ++i)
    for (int j = i + 1; j < gamma; ++j) {
      es.emplace_back(i, next);
      es.emplace_back(next, next + 1);
      es.emplace_back(next + 1, j);
      next += 2;
    }
  return Graph(next, es);
}

Graph wall(int t) {
  require_positive(t, "t");
  const int rows = t + 1;
  const int cols = 2 * t + 2;
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows && (c % 2) == (r % 2)) es.emplace_back(id(r, c), id(r + 1, c));
    }
  Graph grid(rows * cols, es);
  std::vector<int> deg(static_cast<std::size_t>(grid.order()));
  std::vector<char> alive(static_cast<std::size_t>(grid.order()), 1);
  for (int v = 0; v < grid.order(); ++v) deg[v] = grid.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < grid.order(); ++v)
      if (alive[v] && deg[v] <= 1) {
        alive[v] = 0;
        changed = true;
        for (auto w : grid.neighbors(v))
          if (alive[w]) --deg[w];
      }
  }
  std::vector<Vertex> keep;
  for (int v = 0; v < grid.order(); ++v)
    if (alive[v]) keep.push_back(v);
  return induced(grid, VertexSet(keep)).graph;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require_positive(n, "n");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph gnp_connected(int n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = gnp(n, p, seed * 1'000'003ULL + attempt);
    if (is_connected(g)) return g;
    if (attempt > 100000) throw PreconditionError("gnp_connected: no connected draw");
  }
}

Graph random_tree(int n, Rng& rng) {
  require_positive(n, "n");
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(uniform_int(rng, 0, v - 1), v);
  return Graph(n, es);
}

Graph generate(const std::string& kind, const std::map<std::string, double>& params, std::uint64_t seed) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw PreconditionError("generate " + kind + ": missing parameter " + name);
    return it->second;
  };
  auto geti = [&](const char* name) { return static_cast<int>(get(name)); };
  if (kind == "path") return path_graph(geti("k"));
  if (kind == "cycle") return cycle_graph(geti("k"));
  if (kind == "complete") return complete_graph(geti("k"));
  if (kind == "complete_bipartite") return complete_bipartite(geti("a"), geti("b"));
  if (kind == "S_ttt") return s_ttt(geti("t"));
  if (kind == "K_gamma_2") return k_gamma_2(geti("gamma"));
  if (kind == "wall") return wall(geti("t"));
  if (kind == "gnp") return gnp(geti("n"), get("p"), seed);
  throw PreconditionError("unknown generator kind: " + kind);
}

}  // namespace ta
