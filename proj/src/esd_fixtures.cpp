#include "treealpha/esd_fixtures.hpp"

#include "treealpha/errors.hpp"

namespace ta {

namespace {

Graph with_extra(const Graph& g, int added, const std::vector<Edge>& extra) {
  auto es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(g.order() + added, es);
}

Vertex add_host_vertex(ExtendedStripDecomposition& esd, const std::vector<Vertex>& nbrs = {}) {
  const Vertex y = esd.host.order();
  std::vector<Edge> es;
  for (auto x : nbrs) es.emplace_back(x, y);
  esd.host = with_extra(esd.host, 1, es);
  return y;
}

void add_host_edge(ExtendedStripDecomposition& esd, Vertex a, Vertex b) { esd.host = with_extra(esd.host, 0, {Edge(a, b)}); }

// Fresh K2 strip p-q with host edge a-b; both new ends become terminals.
void add_k2_strip(ExtendedStripDecomposition& esd) {
  const Vertex p = esd.pattern.order();
  const Vertex q = p + 1;
  esd.pattern = with_extra(esd.pattern, 2, {Edge(p, q)});
  const Vertex a = add_host_vertex(esd);
  const Vertex b = add_host_vertex(esd, {a});
  Edge e(p, q);
  esd.eta_edge[e] = VertexSet{a, b};
  esd.eta_end[{e, p}] = VertexSet{a};
  esd.eta_end[{e, q}] = VertexSet{b};
  esd.terminals |= VertexSet{a, b};
}

// Pattern triangle a,b,c with single-vertex rungs and one triangle-zone vertex; returns that vertex.
Vertex add_triangle_gadget(ExtendedStripDecomposition& esd) {
  const Vertex a = esd.pattern.order();
  esd.pattern = with_extra(esd.pattern, 3, {Edge(a, a + 1), Edge(a, a + 2), Edge(a + 1, a + 2)});
  const Vertex r01 = add_host_vertex(esd);
  const Vertex r02 = add_host_vertex(esd, {r01});
  const Vertex r12 = add_host_vertex(esd, {r01, r02});
  const Vertex t = add_host_vertex(esd, {r01, r02, r12});
  auto rung = [&](Vertex u, Vertex v, Vertex x) {
    Edge e(u, v);
    esd.eta_edge[e] = VertexSet{x};
    esd.eta_end[{e, u}] = VertexSet{x};
    esd.eta_end[{e, v}] = VertexSet{x};
  };
  rung(a, a + 1, r01);
  rung(a, a + 2, r02);
  rung(a + 1, a + 2, r12);
  esd.eta_triangle[Triangle{a, a + 1, a + 2}] = VertexSet{t};
  return t;
}

VertexSet edge_zone_union(const ExtendedStripDecomposition& esd) {
  VertexSet all;
  for (const auto& [e, s] : esd.eta_edge) all |= s;
  return all;
}

bool allowed_pair(const ExtendedStripDecomposition& esd, Vertex x, const Edge& e, Vertex y, const Edge& f) {
  for (Vertex v : {e.u, e.v})
    if (f.has_end(v) && esd.end_zone(e, v).contains(x) && esd.end_zone(f, v).contains(y)) return true;
  return false;
}

}  // namespace

ExtendedStripDecomposition single_strip_esd(const Graph& g, Vertex a, Vertex b) {
  if (a == b || a < 0 || b < 0 || a >= g.order() || b >= g.order())
    throw PreconditionError("single_strip_esd: need two distinct host vertices");
  ExtendedStripDecomposition esd;
  esd.host = g;
  esd.pattern = Graph(2, {Edge(0, 1)});
  Edge e(0, 1);
  esd.eta_edge[e] = g.vertices();
  esd.eta_end[{e, 0}] = VertexSet{a};
  esd.eta_end[{e, 1}] = VertexSet{b};
  esd.terminals = VertexSet{a, b};
  return esd;
}

ExtendedStripDecomposition line_graph_of_tree_esd(const Graph& tree) {
  if (tree.order() < 3 || !is_connected(tree) || static_cast<int>(tree.size()) != tree.order() - 1)
    throw PreconditionError("line_graph_of_tree_esd: need a tree on at least 3 vertices");
  LineGraph lg = line_graph(tree);
  ExtendedStripDecomposition esd;
  esd.host = lg.graph;
  esd.pattern = tree;
  for (int x = 0; x < lg.graph.order(); ++x) {
    const Edge& e = lg.edge_of[x];
    esd.eta_edge[e] = VertexSet{x};
    esd.eta_end[{e, e.u}] = VertexSet{x};
    esd.eta_end[{e, e.v}] = VertexSet{x};
    if (tree.degree(e.u) == 1 || tree.degree(e.v) == 1) esd.terminals.insert(x);
  }
  return esd;
}

ExtendedStripDecomposition strip_esd(const Graph& pattern, const StripOptions& opts) {
  const auto pattern_edges = pattern.edges();
  if (!opts.lengths.empty() && opts.lengths.size() != pattern_edges.size())
    throw PreconditionError("strip_esd: one length per pattern edge");
  ExtendedStripDecomposition esd;
  esd.pattern = pattern;
  std::vector<Edge> host_edges;
  std::vector<std::vector<Vertex>> ends_at(static_cast<std::size_t>(pattern.order()));
  int next = 0;
  for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
    const Edge& e = pattern_edges[i];
    const int len = opts.lengths.empty() ? opts.length : opts.lengths[i];
    if (len < 1) throw PreconditionError("strip_esd: strip length must be positive");
    std::vector<Vertex> path;
    for (int j = 0; j < len; ++j) path.push_back(next++);
    for (int j = 0; j + 1 < len; ++j) host_edges.emplace_back(path[j], path[j + 1]);
    esd.eta_edge[e] = VertexSet(path);
    esd.eta_end[{e, e.u}] = VertexSet{path.front()};
    esd.eta_end[{e, e.v}] = VertexSet{path.back()};
    ends_at[e.u].push_back(path.front());
    ends_at[e.v].push_back(path.back());
  }
  for (int v = 0; v < pattern.order(); ++v) {
    const auto& ends = ends_at[v];
    for (std::size_t a = 0; a < ends.size(); ++a)
      for (std::size_t b = a + 1; b < ends.size(); ++b) host_edges.emplace_back(ends[a], ends[b]);
    if (pattern.degree(v) == 1) esd.terminals.insert(ends.front());
    if (opts.decorate && pattern.degree(v) >= 2) {
      const Vertex d = next++;
      for (auto x : ends) host_edges.emplace_back(d, x);
      esd.eta_vertex[v] = VertexSet{d};
    }
  }
  if (opts.triangle_vertices) {
    for (const auto& t : triangles(pattern)) {
      VertexSet doubly;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          Edge e(t[a], t[b]);
          doubly |= esd.end_zone(e, t[a]) & esd.end_zone(e, t[b]);
        }
      const Vertex d = next++;
      for (auto x : doubly) host_edges.emplace_back(d, x);
      esd.eta_triangle[t] = VertexSet{d};
    }
  }
  esd.host = Graph(next, host_edges);
  return esd;
}

std::vector<EsdFixture> esd_fixtures() {
  std::vector<EsdFixture> out;
  auto own = [](std::string name, ExtendedStripDecomposition esd) {
    EsdFixture f{std::move(name), esd, esd.host, identity_origin(esd.host.order())};
    return f;
  };
  out.push_back(own("single-strip", single_strip_esd(path_graph(3), 0, 2)));
  out.push_back(own("two-strip-path", strip_esd(path_graph(3), {.length = 2, .decorate = true})));
  // net: triangle 0,1,2 with pendants 3,4,5
  Graph net(6, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 4), Edge(2, 5)});
  out.push_back(own("triangle-pattern",
                    strip_esd(net, {.length = 1, .lengths = {1, 1, 2, 1, 2, 2}, .decorate = true, .triangle_vertices = true})));
  Graph tree(6, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(3, 4), Edge(3, 5)});
  out.push_back(own("line-graph-of-tree", line_graph_of_tree_esd(tree)));

  EsdFixture outside;
  outside.name = "with-outside-components";
  outside.esd = strip_esd(star_graph(3), {.length = 2, .decorate = true});
  const int hn = outside.esd.host.order();
  // g: a P2 at ids 0-1, the host shifted by 2, an isolated vertex at the end
  std::vector<Edge> es{Edge(0, 1)};
  for (const auto& e : outside.esd.host.edges()) es.emplace_back(e.u + 2, e.v + 2);
  outside.g = Graph(hn + 3, es);
  for (int i = 0; i < hn; ++i) outside.host_origin.push_back(i + 2);
  out.push_back(std::move(outside));
  return out;
}

std::vector<EsdMutation> esd_mutations(const ExtendedStripDecomposition& valid) {
  std::vector<EsdMutation> out;
  const Graph& h = valid.pattern;
  {
    auto m = valid;
    add_host_vertex(m);
    out.push_back({1, "uncovered isolated vertex", std::move(m)});
  }
  {
    auto m = valid;
    if (m.pattern.order() < 2) throw PreconditionError("esd_mutations: pattern needs two vertices");
    Vertex y = add_host_vertex(m);
    m.eta_vertex[0].insert(y);
    m.eta_vertex[1].insert(y);
    out.push_back({2, "vertex in two vertex zones", std::move(m)});
  }
  {
    auto m = valid;
    bool done = false;
    for (const auto& e : h.edges()) {
      for (Vertex v : {e.u, e.v})
        if (!done && h.degree(v) >= 2) {
          Vertex y = add_host_vertex(m);
          m.eta_end[{e, v}].insert(y);
          m.eta_vertex[v].insert(y);
          done = true;
        }
    }
    if (!done) {
      // Every end is a leaf: a fresh terminal replaces the old end set and lives outside the edge zone.
      const Edge e = h.edges().front();
      const Vertex v = e.u;
      const Vertex old = valid.end_zone(e, v).front();
      if (!valid.vertex_zone(v).empty()) throw PreconditionError("esd_mutations: leaf with a vertex zone");
      Vertex y = add_host_vertex(m);
      m.eta_end[{e, v}] = VertexSet{y};
      m.eta_vertex[v] = VertexSet{y};
      m.terminals.erase(old);
      m.terminals.insert(y);
    }
    out.push_back({3, "end set leaves its edge zone", std::move(m)});
  }
  {
    auto m = valid;
    auto find_pair = [&]() -> std::optional<std::pair<Vertex, Vertex>> {
      for (const auto& [e, s] : m.eta_edge)
        for (const auto& [f, t] : m.eta_edge) {
          if (!(e < f)) continue;
          for (auto x : s)
            for (auto y : t)
              if (x != y && !m.host.adjacent(x, y) && !allowed_pair(m, x, e, y, f) && !allowed_pair(m, y, f, x, e))
                return std::pair{x, y};
        }
      return std::nullopt;
    };
    auto pair = find_pair();
    if (!pair) {
      add_k2_strip(m);
      pair = find_pair();
    }
    add_host_edge(m, pair->first, pair->second);
    out.push_back({4, "edge between edge zones away from a shared end", std::move(m)});
  }
  {
    auto m = valid;
    std::optional<Vertex> pv;
    for (const auto& [v, s] : m.eta_vertex)
      if (!s.empty()) {
        pv = v;
        break;
      }
    if (!pv) {
      pv = 0;
      m.eta_vertex[0].insert(add_host_vertex(m));
    }
    VertexSet ends;
    for (auto u : h.neighbors(*pv)) ends |= m.end_zone(Edge(u, *pv), *pv);
    VertexSet candidates = edge_zone_union(m) - ends;
    if (candidates.empty()) throw PreconditionError("esd_mutations: no edge-zone vertex away from the vertex");
    add_host_edge(m, m.vertex_zone(*pv).front(), candidates.front());
    out.push_back({5, "vertex zone reaches past its end sets", std::move(m)});
  }
  {
    auto m = valid;
    std::optional<Vertex> tv;
    std::optional<Triangle> tri;
    for (const auto& [t, s] : m.eta_triangle)
      if (!s.empty()) {
        tv = s.front();
        tri = t;
        break;
      }
    if (!tv) {
      tv = add_triangle_gadget(m);
      tri = Triangle{m.pattern.order() - 3, m.pattern.order() - 2, m.pattern.order() - 1};
    }
    VertexSet doubly;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        Edge e((*tri)[a], (*tri)[b]);
        doubly |= m.end_zone(e, (*tri)[a]) & m.end_zone(e, (*tri)[b]);
      }
    VertexSet candidates = edge_zone_union(m) - doubly - closed_nbhd(m.host, VertexSet{*tv});
    if (candidates.empty()) throw PreconditionError("esd_mutations: no edge-zone vertex away from the triangle");
    add_host_edge(m, *tv, candidates.front());
    out.push_back({6, "triangle zone reaches past its doubly-ended sets", std::move(m)});
  }
  {
    auto m = valid;
    if (m.terminals.empty()) throw PreconditionError("esd_mutations: no terminal to drop");
    m.terminals.erase(m.terminals.front());
    out.push_back({7, "terminal dropped", std::move(m)});
  }
  return out;
}

ThreePathFixture three_path_fixture(std::uint64_t seed) {
  Rng rng(seed);
  Graph tree;
  std::vector<Vertex> leaves;
  do {
    tree = random_tree(uniform_int(rng, 4, 8), rng);
    leaves.clear();
    for (int v = 0; v < tree.order(); ++v)
      if (tree.degree(v) == 1) leaves.push_back(v);
  } while (leaves.size() < 3);
  StripOptions opts;
  for (std::size_t i = 0; i < tree.size(); ++i) opts.lengths.push_back(uniform_int(rng, 2, 4));
  opts.decorate = uniform01(rng) < 0.5;
  ThreePathFixture f;
  f.esd = strip_esd(tree, opts);
  for (std::size_t i = leaves.size() - 1; i > 0; --i)
    std::swap(leaves[i], leaves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i)))]);
  std::array<Path*, 3> qs{&f.q1, &f.q2, &f.q3};
  for (int i = 0; i < 3; ++i) {
    const Vertex leaf = leaves[i];
    const Edge e(leaf, tree.neighbors(leaf)[0]);
    // Strip vertices in order from the leaf end inward; the inner end is left out.
    std::vector<Vertex> strip = f.esd.edge_zone(e).ids();
    if (e.u != leaf) std::reverse(strip.begin(), strip.end());
    const int len = uniform_int(rng, 1, static_cast<int>(strip.size()) - 1);
    qs[i]->assign(strip.begin(), strip.begin() + len);
  }
  return f;
}

}  // namespace ta
