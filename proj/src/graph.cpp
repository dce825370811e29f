#include "treealpha/graph.hpp"

#include <numeric>
#include <sstream>

#include "treealpha/errors.hpp"

namespace ta {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(n));
  std::iota(s.ids_.begin(), s.ids_.end(), 0);
  return s;
}

VertexSet VertexSet::from_bits(const Bitset& bits) {
  VertexSet s;
  bits.for_each([&](int v) { s.ids_.push_back(v); });
  return s;
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

Bitset VertexSet::bits(int width) const {
  Bitset b(width);
  for (auto v : ids_) b.set(v);
  return b;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), rows_(static_cast<std::size_t>(n), Bitset(n)) {
  if (n < 0) throw FormatError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v >= n) throw FormatError("edge endpoint out of range: " + to_string(e));
    if (e.u == e.v) throw FormatError("self-loop at vertex " + std::to_string(e.u));
    if (rows_[e.u].test(e.v)) throw FormatError("repeated edge " + to_string(e));
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (auto v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex InducedSubgraph::local(Vertex parent) const {
  auto it = std::lower_bound(origin.begin(), origin.end(), parent);
  if (it == origin.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - origin.begin());
}

VertexSet InducedSubgraph::lift(const VertexSet& local_set) const {
  std::vector<Vertex> out;
  out.reserve(local_set.size());
  for (auto v : local_set) out.push_back(origin[v]);
  return VertexSet(std::move(out));
}

VertexSet InducedSubgraph::localize(const VertexSet& parent_set) const {
  std::vector<Vertex> out;
  for (auto v : parent_set)
    if (auto l = local(v); l >= 0) out.push_back(l);
  return VertexSet(std::move(out));
}

InducedSubgraph induced(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.origin = keep.ids();
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.origin.size(); ++i) index[sub.origin[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < sub.origin.size(); ++i)
    for (auto w : g.neighbors(sub.origin[i]))
      if (index[w] > static_cast<Vertex>(i)) es.emplace_back(static_cast<Vertex>(i), index[w]);
  sub.graph = Graph(static_cast<int>(sub.origin.size()), es);
  return sub;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& universe) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
  for (auto v : universe) alive[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (auto s : universe) {
    if (alive[s] != 1) continue;
    std::vector<Vertex> comp;
    alive[s] = 2;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : g.neighbors(v))
        if (alive[w] == 1) {
          alive[w] = 2;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  return components_within(g, g.vertices() - removed);
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet open_nbhd(const Graph& g, const VertexSet& x) { return closed_nbhd(g, x) - x; }

VertexSet closed_nbhd(const Graph& g, const VertexSet& x) {
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> out;
  for (auto v : x) {
    if (!mark[v]) mark[v] = 1, out.push_back(v);
    for (auto w : g.neighbors(v))
      if (!mark[w]) mark[w] = 1, out.push_back(w);
  }
  return VertexSet(std::move(out));
}

VertexSet closed_nbhd_within(const Graph& g, const VertexSet& x, const VertexSet& universe) {
  return closed_nbhd(g, x) & universe;
}

VertexSet open_nbhd_within(const Graph& g, const VertexSet& x, const VertexSet& universe) {
  return (closed_nbhd(g, x) & universe) - x;
}

bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) return false;
  for (auto v : a)
    for (auto w : g.neighbors(v))
      if (b.contains(w)) return false;
  return true;
}

int edges_within(const Graph& g, const VertexSet& x) {
  int m = 0;
  for (auto v : x)
    for (auto w : g.neighbors(v))
      if (v < w && x.contains(w)) ++m;
  return m;
}

Vertex LineGraph::vertex_of(const Edge& e) const {
  auto it = std::lower_bound(edge_of.begin(), edge_of.end(), e);
  if (it == edge_of.end() || *it != e) return -1;
  return static_cast<Vertex>(it - edge_of.begin());
}

LineGraph line_graph(const Graph& g) {
  LineGraph lg;
  lg.edge_of = g.edges();  // sorted lexicographically
  std::vector<Edge> es;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Vertex> incident;
    for (auto y : g.neighbors(x)) incident.push_back(lg.vertex_of(Edge(x, y)));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) es.emplace_back(incident[i], incident[j]);
  }
  lg.graph = Graph(static_cast<int>(lg.edge_of.size()), es);
  return lg;
}

Graph subdivide(const Graph& g, const std::map<Edge, int>& counts) {
  for (const auto& [e, c] : counts) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
      throw FormatError("subdivide: unknown edge " + to_string(e));
    if (c < 0) throw FormatError("subdivide: negative count on " + to_string(e));
  }
  int next = g.order();
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    auto it = counts.find(e);
    int c = it == counts.end() ? 0 : it->second;
    Vertex prev = e.u;
    for (int i = 0; i < c; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, e.v);
  }
  return Graph(next, es);
}

Graph subdivide_all(const Graph& g, int count) {
  std::map<Edge, int> counts;
  for (const auto& e : g.edges()) counts[e] = count;
  return subdivide(g, counts);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (const auto& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), es);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph(g.order(), es);
}

}  // namespace ta
