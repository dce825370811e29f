#include "treealpha/esd.hpp"

#include <queue>
#include <set>

#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"

namespace ta {

namespace {

const VertexSet kEmpty;

template <class Map, class Key>
const VertexSet& lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? kEmpty : it->second;
}

}  // namespace

std::vector<Triangle> triangles(const Graph& h) {
  std::vector<Triangle> out;
  for (int a = 0; a < h.order(); ++a)
    for (auto b : h.neighbors(a)) {
      if (b <= a) continue;
      for (auto c : h.neighbors(b))
        if (c > b && h.adjacent(a, c)) out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Triangle& t) {
  return std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

const VertexSet& ExtendedStripDecomposition::vertex_zone(Vertex v) const { return lookup(eta_vertex, v); }
const VertexSet& ExtendedStripDecomposition::edge_zone(const Edge& e) const { return lookup(eta_edge, e); }
const VertexSet& ExtendedStripDecomposition::triangle_zone(const Triangle& t) const {
  return lookup(eta_triangle, t);
}
const VertexSet& ExtendedStripDecomposition::end_zone(const Edge& e, Vertex v) const {
  return lookup(eta_end, EdgeEnd{e, v});
}

bool EsdVerdict::has_bullet(int b) const {
  return std::any_of(violations.begin(), violations.end(), [b](const EsdViolation& v) { return v.bullet == b; });
}

EsdVerdict validate_esd(const ExtendedStripDecomposition& esd) {
  EsdVerdict verdict;
  auto report = [&](int bullet, std::string detail, std::vector<Vertex> witness) {
    verdict.violations.push_back({bullet, std::move(detail), std::move(witness)});
  };
  const Graph& g = esd.host;
  const Graph& h = esd.pattern;
  const int n = g.order();
  auto in_range = [&](const VertexSet& s, const std::string& what) {
    for (auto x : s)
      if (x < 0 || x >= n) {
        report(0, what + " holds out-of-range vertex " + std::to_string(x), {x});
        return false;
      }
    return true;
  };

  // Domain: keys must be elements of the pattern, zones must hold host vertices.
  in_range(esd.terminals, "Z");
  std::map<Vertex, VertexSet> vz;
  std::map<Edge, VertexSet> ez;
  std::map<Triangle, VertexSet> tz;
  std::map<EdgeEnd, VertexSet> endz;
  for (const auto& [v, s] : esd.eta_vertex) {
    if (v < 0 || v >= h.order()) {
      report(0, "vertex zone key " + std::to_string(v) + " is not a pattern vertex", {});
      continue;
    }
    if (in_range(s, "eta(" + std::to_string(v) + ")")) vz[v] = s;
  }
  for (const auto& [e, s] : esd.eta_edge) {
    if (e.v >= h.order() || e.u < 0 || !h.adjacent(e.u, e.v)) {
      report(0, "edge zone key " + to_string(e) + " is not a pattern edge", {});
      continue;
    }
    if (in_range(s, "eta(" + to_string(e) + ")")) ez[e] = s;
  }
  const auto tri = triangles(h);
  for (const auto& [t, s] : esd.eta_triangle) {
    if (!std::binary_search(tri.begin(), tri.end(), t)) {
      report(0, "triangle zone key " + to_string(t) + " is not a triangle of the pattern", {});
      continue;
    }
    if (in_range(s, "eta(" + to_string(t) + ")")) tz[t] = s;
  }
  for (const auto& [key, s] : esd.eta_end) {
    const auto& [e, v] = key;
    if (e.v >= h.order() || e.u < 0 || !h.adjacent(e.u, e.v) || !e.has_end(v)) {
      report(0, "edge-end key (" + to_string(e) + "," + std::to_string(v) + ") is not an incident pair", {});
      continue;
    }
    if (in_range(s, "eta(" + to_string(e) + "," + std::to_string(v) + ")")) endz[key] = s;
  }
  auto end_of = [&](const Edge& e, Vertex v) -> const VertexSet& { return lookup(endz, EdgeEnd{e, v}); };

  // Bullets 1 and 2: zones over V, E, T cover V(G) and are pairwise disjoint.
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& [v, s] : vz)
    for (auto x : s) ++hits[x];
  for (const auto& [e, s] : ez)
    for (auto x : s) ++hits[x];
  for (const auto& [t, s] : tz)
    for (auto x : s) ++hits[x];
  for (int x = 0; x < n; ++x) {
    if (hits[x] == 0) report(1, "vertex " + std::to_string(x) + " lies in no zone", {x});
    if (hits[x] > 1) report(2, "vertex " + std::to_string(x) + " lies in " + std::to_string(hits[x]) + " zones", {x});
  }

  // Bullet 3: eta(e,v) inside eta(e).
  for (const auto& [key, s] : endz) {
    const VertexSet& zone = lookup(ez, key.first);
    for (auto x : s)
      if (!zone.contains(x))
        report(3, "vertex " + std::to_string(x) + " in eta(" + to_string(key.first) + "," + std::to_string(key.second) +
                      ") but not in eta(" + to_string(key.first) + ")",
               {x});
  }

  // Bullet 4: across distinct edge zones, adjacency exactly at shared ends.
  std::vector<std::pair<Vertex, Edge>> edge_members;
  for (const auto& [e, s] : ez)
    for (auto x : s) edge_members.emplace_back(x, e);
  for (std::size_t i = 0; i < edge_members.size(); ++i)
    for (std::size_t j = i + 1; j < edge_members.size(); ++j) {
      const auto& [x, e] = edge_members[i];
      const auto& [y, f] = edge_members[j];
      if (e == f || x == y) continue;
      bool allowed = false;
      for (Vertex v : {e.u, e.v})
        if (f.has_end(v) && end_of(e, v).contains(x) && end_of(f, v).contains(y)) allowed = true;
      bool adjacent = g.adjacent(x, y);
      if (adjacent && !allowed)
        report(4, "edge " + std::to_string(x) + "-" + std::to_string(y) + " joins eta(" + to_string(e) + ") and eta(" +
                      to_string(f) + ") outside a shared end",
               {x, y});
      if (!adjacent && allowed)
        report(4, "non-edge " + std::to_string(x) + "," + std::to_string(y) + " between end sets of eta(" + to_string(e) +
                      ") and eta(" + to_string(f) + ") at a shared end",
               {x, y});
    }

  // Bullet 5: neighbours leaving eta(v) land in some eta(e,v).
  for (const auto& [v, s] : vz)
    for (auto x : s)
      for (auto y : g.neighbors(x)) {
        if (s.contains(y)) continue;
        bool ok = false;
        for (auto u : h.neighbors(v))
          if (end_of(Edge(u, v), v).contains(y)) ok = true;
        if (!ok)
          report(5, "vertex " + std::to_string(x) + " of eta(" + std::to_string(v) + ") has neighbour " + std::to_string(y) +
                        " outside the end sets at " + std::to_string(v),
                 {x, y});
      }

  // Bullet 6: neighbours leaving eta(T) land in eta(e,u) and eta(e,v) for an edge e = uv of T.
  for (const auto& [t, s] : tz)
    for (auto x : s)
      for (auto y : g.neighbors(x)) {
        if (s.contains(y)) continue;
        bool ok = false;
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) {
            Edge e(t[a], t[b]);
            if (end_of(e, t[a]).contains(y) && end_of(e, t[b]).contains(y)) ok = true;
          }
        if (!ok)
          report(6, "vertex " + std::to_string(x) + " of eta(" + to_string(t) + ") has neighbour " + std::to_string(y) +
                        " outside the doubly-ended sets of the triangle",
                 {x, y});
      }

  // Bullet 7: terminals match degree-one pattern vertices through singleton end sets.
  std::vector<Vertex> leaves;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) == 1) leaves.push_back(v);
  if (esd.terminals.size() != leaves.size())
    report(7, "|Z| = " + std::to_string(esd.terminals.size()) + " but the pattern has " + std::to_string(leaves.size()) +
                  " degree-one vertices",
           {});
  for (auto z : esd.terminals) {
    bool matched = false;
    for (auto leaf : leaves) {
      const VertexSet& s = end_of(Edge(leaf, h.neighbors(leaf)[0]), leaf);
      if (s.size() == 1 && s.front() == z) matched = true;
    }
    if (!matched) report(7, "terminal " + std::to_string(z) + " is not the end set of any degree-one pattern vertex", {z});
  }

  std::stable_sort(verdict.violations.begin(), verdict.violations.end(),
                   [](const EsdViolation& a, const EsdViolation& b) { return a.bullet < b.bullet; });
  verdict.ok = verdict.violations.empty();
  return verdict;
}

std::optional<Path> find_rung(const ExtendedStripDecomposition& esd, const Edge& e) {
  const VertexSet& from = esd.end_zone(e, e.u);
  const VertexSet& to = esd.end_zone(e, e.v);
  const VertexSet& zone = esd.edge_zone(e);
  for (auto x : from)
    if (to.contains(x) && zone.contains(x)) return Path{x};
  const VertexSet interior = zone - (from | to);
  std::map<Vertex, Vertex> parent;
  std::queue<Vertex> q;
  for (auto x : from)
    if (zone.contains(x)) {
      parent[x] = -1;
      q.push(x);
    }
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (auto y : esd.host.neighbors(x)) {
      if (parent.count(y)) continue;
      if (to.contains(y) && zone.contains(y)) {
        Path p{y};
        for (Vertex c = x; c >= 0; c = parent[c]) p.push_back(c);
        std::reverse(p.begin(), p.end());
        return p;
      }
      if (!interior.contains(y)) continue;
      parent[y] = x;
      q.push(y);
    }
  }
  return std::nullopt;
}

FaithfulReport is_faithful(const ExtendedStripDecomposition& esd) {
  FaithfulReport r;
  for (const auto& e : esd.pattern.edges()) {
    if (auto p = find_rung(esd, e))
      r.rungs[e] = *p;
    else
      r.rungless.push_back(e);
  }
  r.faithful = r.rungless.empty();
  return r;
}

std::string to_string(AtomKind k) {
  switch (k) {
    case AtomKind::vertex:
      return "vertex";
    case AtomKind::triangle:
      return "triangle";
    case AtomKind::edge_interior:
      break;
  }
  return "edge";
}

std::vector<Atom> atoms_and_boundaries(const ExtendedStripDecomposition& esd) {
  auto verdict = validate_esd(esd);
  if (!verdict.ok)
    throw PreconditionError("atoms_and_boundaries: decomposition invalid (" + verdict.violations.front().detail + ")");
  auto faithful = is_faithful(esd);
  if (!faithful.faithful)
    throw PreconditionError("atoms_and_boundaries: not faithful, edge " + to_string(faithful.rungless.front()) +
                            " has no rung");
  const Graph& h = esd.pattern;
  // A rung endpoint in eta(e,v); faithful decompositions always have one.
  auto pick = [&](const Edge& e, Vertex v) {
    const Path& rung = faithful.rungs.at(e);
    return v == e.u ? rung.front() : rung.back();
  };
  std::vector<Atom> atoms;
  auto finish = [&](Atom a) {
    if (a.core.size() > 3 || !a.boundary.subset_of(closed_nbhd(esd.host, a.core)))
      throw ContractViolation("atoms_and_boundaries: core " + to_string(a.core) + " misses the boundary of atom " +
                              to_string(a.vertices));
    atoms.push_back(std::move(a));
  };
  for (int v = 0; v < h.order(); ++v) {
    Atom a;
    a.kind = AtomKind::vertex;
    a.vertex = v;
    a.vertices = esd.vertex_zone(v);
    for (auto u : h.neighbors(v)) a.boundary |= esd.end_zone(Edge(u, v), v);
    if (h.degree(v) == 1) {
      a.core = a.boundary;
    } else if (h.degree(v) >= 2) {
      Vertex e_other = h.neighbors(v)[0];
      Vertex f_other = h.neighbors(v)[1];
      a.core = VertexSet{pick(Edge(e_other, v), v), pick(Edge(f_other, v), v)};
    }
    finish(std::move(a));
  }
  for (const auto& e : h.edges()) {
    Atom a;
    a.kind = AtomKind::edge_interior;
    a.edge = e;
    a.vertices = esd.edge_zone(e) - (esd.end_zone(e, e.u) | esd.end_zone(e, e.v));
    a.boundary = esd.end_zone(e, e.u) | esd.end_zone(e, e.v);
    Vertex u = e.u;
    Vertex v = e.v;
    if (h.degree(u) < 2) std::swap(u, v);
    if (h.degree(u) < 2) {
      a.core = a.boundary;
    } else {
      Vertex f_other = h.neighbors(u)[0] == v ? h.neighbors(u)[1] : h.neighbors(u)[0];
      a.core.insert(pick(Edge(f_other, u), u));
      if (h.degree(v) == 1) {
        a.core |= esd.end_zone(e, v);
      } else {
        Vertex g_other = h.neighbors(v)[0] == u ? h.neighbors(v)[1] : h.neighbors(v)[0];
        a.core.insert(pick(Edge(g_other, v), v));
      }
    }
    finish(std::move(a));
  }
  for (const auto& t : triangles(h)) {
    Atom a;
    a.kind = AtomKind::triangle;
    a.triangle = t;
    a.vertices = esd.triangle_zone(t);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Edge e(t[i], t[j]);
        a.boundary |= esd.end_zone(e, t[i]) & esd.end_zone(e, t[j]);
      }
    a.core = VertexSet{pick(Edge(t[0], t[1]), t[0]), pick(Edge(t[0], t[2]), t[0]), pick(Edge(t[0], t[1]), t[1])};
    finish(std::move(a));
  }
  return atoms;
}

std::optional<VertexSet> constricted_witness(const Graph& g, const VertexSet& z) {
  const int n = g.order();
  if (n > caps().constricted) throw CapExceeded("constricted", caps().constricted, n);
  if (z.size() < 3) return std::nullopt;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (auto u : g.neighbors(v)) adj[v] |= 1U << u;
  std::uint32_t zmask = 0;
  for (auto v : z) zmask |= 1U << v;
  std::optional<VertexSet> best;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (std::popcount(s & zmask) < 3) continue;
    int edges = 0;
    for (std::uint32_t r = s; r; r &= r - 1) edges += std::popcount(adj[std::countr_zero(r)] & s);
    edges /= 2;
    if (edges != std::popcount(s) - 1) continue;
    std::uint32_t reach = s & (~s + 1);
    while (true) {
      std::uint32_t next = reach;
      for (std::uint32_t r = reach; r; r &= r - 1) next |= adj[std::countr_zero(r)] & s;
      if (next == reach) break;
      reach = next;
    }
    if (reach != s) continue;
    std::vector<Vertex> ids;
    for (std::uint32_t r = s; r; r &= r - 1) ids.push_back(std::countr_zero(r));
    VertexSet tree(std::move(ids));
    if (!best || tree.size() < best->size()) best = std::move(tree);
  }
  return best;
}

bool is_constricted(const Graph& g, const VertexSet& z) { return !constricted_witness(g, z).has_value(); }

ThreePathsReport three_paths_check(const Graph& g, const VertexSet& z, const ExtendedStripDecomposition& esd,
                                   const Path& q1, const Path& q2, const Path& q3) {
  ThreePathsReport r;
  const std::array<const Path*, 3> qs{&q1, &q2, &q3};
  auto fail = [&](std::string why) {
    r.ok = false;
    r.precondition_failure = std::move(why);
    return r;
  };
  if (z.size() < 3) return fail("|Z| < 3");
  if (!(esd.host == g) || esd.terminals != z) return fail("decomposition is not of (G,Z)");
  if (!validate_esd(esd).ok) return fail("decomposition does not validate");
  for (int i = 0; i < 3; ++i) {
    const Path& q = *qs[i];
    if (q.empty() || !is_induced_path(g, q)) return fail("Q" + std::to_string(i + 1) + " is not a path");
    if (!z.contains(q.front()) && !z.contains(q.back())) return fail("Q" + std::to_string(i + 1) + " has no end in Z");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      VertexSet a(*qs[i]);
      VertexSet b(*qs[j]);
      if (a.intersects(b) || !anticomplete(g, a, b))
        return fail("Q" + std::to_string(i + 1) + " and Q" + std::to_string(j + 1) + " are not anticomplete");
    }
  // The boundary cores need faithfulness; atoms themselves do not.
  const bool faithful = is_faithful(esd).faithful;
  std::vector<Atom> atoms;
  if (faithful) {
    atoms = atoms_and_boundaries(esd);
  } else {
    const Graph& h = esd.pattern;
    for (int v = 0; v < h.order(); ++v) atoms.push_back({AtomKind::vertex, v, {}, {}, esd.vertex_zone(v), {}, {}});
    for (const auto& e : h.edges())
      atoms.push_back({AtomKind::edge_interior, -1, {}, e,
                       esd.edge_zone(e) - (esd.end_zone(e, e.u) | esd.end_zone(e, e.v)), {}, {}});
    for (const auto& t : triangles(h)) atoms.push_back({AtomKind::triangle, -1, t, {}, esd.triangle_zone(t), {}, {}});
  }
  for (auto& atom : atoms) {
    ThreePathsAtom entry;
    VertexSet reach = closed_nbhd(g, atom.vertices);
    for (int i = 0; i < 3; ++i) entry.empty[i] = !reach.intersects(VertexSet(*qs[i]));
    if (!entry.empty[0] && !entry.empty[1] && !entry.empty[2]) r.ok = false;
    entry.atom = std::move(atom);
    r.atoms.push_back(std::move(entry));
  }
  return r;
}

PullbackResult pullback_separator(const Graph& g, const WeightFn& w, const ExtendedStripDecomposition& esd,
                                  std::span<const Vertex> host_origin, const std::vector<VertexSet>& outside_components) {
  std::vector<Vertex> own;
  if (host_origin.empty()) {
    own = identity_origin(esd.host.order());
    host_origin = own;
  }
  if (static_cast<int>(host_origin.size()) != esd.host.order())
    throw PreconditionError("pullback_separator: host_origin size differs from the host order");
  const VertexSet domain{std::vector<Vertex>(host_origin.begin(), host_origin.end())};
  InducedSubgraph check = induced(g, domain);
  if (!(check.graph == esd.host) || !std::equal(host_origin.begin(), host_origin.end(), check.origin.begin()))
    throw PreconditionError("pullback_separator: host is not the induced subgraph on host_origin (increasing ids)");
  auto outside = components(g, domain);
  for (const auto& c : outside)
    if (!anticomplete(g, c, domain)) throw PreconditionError("pullback_separator: host is not a component of g");
  if (!outside_components.empty()) {
    auto supplied = outside_components;
    std::sort(supplied.begin(), supplied.end());
    auto computed = outside;
    std::sort(computed.begin(), computed.end());
    if (supplied != computed) throw PreconditionError("pullback_separator: outside components do not match g");
  }
  auto verdict = validate_esd(esd);
  if (!verdict.ok) throw PreconditionError("pullback_separator: decomposition invalid (" + verdict.violations.front().detail + ")");
  const InducedSubgraph lift{esd.host, std::vector<Vertex>(host_origin.begin(), host_origin.end())};
  const WeightFn wh = w.restricted(lift);
  auto atoms = atoms_and_boundaries(esd);
  const Rational half(1, 2);
  for (const auto& a : atoms)
    if (w.gt(wh.of(a.vertices), half))
      throw PreconditionError("pullback_separator: atom " + to_string(a.kind) + " " + to_string(a.vertices) +
                              " is heavier than 1/2");
  for (const auto& c : outside)
    if (w.gt(w.of(c), half))
      throw PreconditionError("pullback_separator: outside component " + to_string(c) + " is heavier than 1/2");

  const Graph& h = esd.pattern;
  const auto pattern_edges = h.edges();
  const auto tri = triangles(h);
  const int hn = h.order();
  const int edge_base = hn;
  const int pend_base = edge_base + static_cast<int>(pattern_edges.size());
  const int tri_base = pend_base + hn;
  const int out_base = tri_base + static_cast<int>(tri.size());
  const int total = out_base + static_cast<int>(outside.size());
  std::vector<Edge> hp_edges;
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  std::vector<Rational> wp(static_cast<std::size_t>(total), Rational(0));
  for (int v = 0; v < hn; ++v) labels[v] = "v" + std::to_string(v);
  // Vertices in both end sets of an edge are charged to the smaller end only.
  for (int i = 0; i < static_cast<int>(pattern_edges.size()); ++i) {
    const Edge& e = pattern_edges[i];
    hp_edges.emplace_back(e.u, edge_base + i);
    hp_edges.emplace_back(e.v, edge_base + i);
    labels[edge_base + i] = "e" + to_string(e);
    const VertexSet& at_u = esd.end_zone(e, e.u);
    const VertexSet at_v = esd.end_zone(e, e.v) - at_u;
    wp[e.u] += wh.of(at_u);
    wp[e.v] += wh.of(at_v);
    wp[edge_base + i] = wh.of(esd.edge_zone(e) - (at_u | at_v));
  }
  for (int v = 0; v < hn; ++v) {
    hp_edges.emplace_back(v, pend_base + v);
    labels[pend_base + v] = "p" + std::to_string(v);
    wp[pend_base + v] = wh.of(esd.vertex_zone(v));
  }
  for (int i = 0; i < static_cast<int>(tri.size()); ++i) {
    for (auto v : tri[i]) hp_edges.emplace_back(v, tri_base + i);
    labels[tri_base + i] = "t" + to_string(tri[i]);
    wp[tri_base + i] = wh.of(esd.triangle_zone(tri[i]));
  }
  for (int i = 0; i < static_cast<int>(outside.size()); ++i) {
    labels[out_base + i] = "d" + std::to_string(i);
    wp[out_base + i] = w.of(outside[i]);
  }
  PullbackResult result;
  result.h_prime = Graph(total, hp_edges);
  result.w_prime = WeightFn(std::move(wp), w.mode());
  result.h_prime_labels = labels;
  result.outside_components = outside;
  VertexSet xp = treewidth_separator(result.h_prime, result.w_prime);
  std::vector<Vertex> kept;
  for (auto x : xp)
    if (x < out_base) kept.push_back(x);
  result.x_prime = VertexSet(std::move(kept));

  auto atom_index = [&](AtomKind kind, int idx) -> const Atom& {
    // atoms are listed vertices, then edges, then triangles
    if (kind == AtomKind::vertex) return atoms[idx];
    if (kind == AtomKind::edge_interior) return atoms[hn + idx];
    return atoms[hn + pattern_edges.size() + idx];
  };
  VertexSet x_host;
  VertexSet y_host;
  for (auto x : result.x_prime) {
    const Atom* a = nullptr;
    if (x < edge_base)
      a = &atom_index(AtomKind::vertex, x);
    else if (x < pend_base)
      a = &atom_index(AtomKind::edge_interior, x - edge_base);
    else if (x < tri_base)
      a = &atom_index(AtomKind::vertex, x - pend_base);
    else
      a = &atom_index(AtomKind::triangle, x - tri_base);
    x_host |= a->boundary;
    y_host |= a->core;
  }
  result.x = lift.lift(x_host);
  result.y = lift.lift(y_host);
  result.separator = closed_nbhd(g, result.y);
  if (result.y.size() > 3 * result.x_prime.size())
    throw ContractViolation("pullback_separator: |Y| exceeds 3|X'|");
  if (!result.x.subset_of(result.separator)) throw ContractViolation("pullback_separator: X not inside N[Y]");
  if (!check_balanced(g, w, result.x, half).ok) throw ContractViolation("pullback_separator: lifted X is not balanced");
  if (!check_balanced(g, w, result.separator, half).ok) throw ContractViolation("pullback_separator: N[Y] is not balanced");
  return result;
}

}  // namespace ta
