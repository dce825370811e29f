#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "treealpha/bitset.hpp"

namespace ta {

using Vertex = int;

// Undirected edge in normal form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}
  bool has_end(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);
  static VertexSet range(int n);
  static VertexSet from_bits(const Bitset& bits);

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  void insert(Vertex v);
  void erase(Vertex v);

  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  Bitset bits(int width) const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

std::string to_string(const VertexSet& s);

// Immutable simple undirected graph on dense ids 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws FormatError on self-loops, out-of-range endpoints or repeated edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
};

// G[X] with an explicit translation between local and parent ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;  // local id -> parent id, increasing

  Vertex local(Vertex parent) const;  // -1 when absent
  VertexSet lift(const VertexSet& local_set) const;
  VertexSet localize(const VertexSet& parent_set) const;  // members outside are dropped
};

InducedSubgraph induced(const Graph& g, const VertexSet& keep);

// Connected components of G - removed, each sorted, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});
// Connected components of G[universe].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& universe);
bool is_connected(const Graph& g);

VertexSet closed_nbhd(const Graph& g, const VertexSet& x);
VertexSet open_nbhd(const Graph& g, const VertexSet& x);
// Closed / open neighbourhood taken inside G[universe]; x must lie in universe.
VertexSet closed_nbhd_within(const Graph& g, const VertexSet& x, const VertexSet& universe);
VertexSet open_nbhd_within(const Graph& g, const VertexSet& x, const VertexSet& universe);

bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);
int edges_within(const Graph& g, const VertexSet& x);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // line-graph vertex -> source edge
  Vertex vertex_of(const Edge& e) const;  // -1 when absent
};

LineGraph line_graph(const Graph& g);

// Replaces each keyed edge by a path with that many new internal vertices.
// Original ids are kept; new vertices get ids n, n+1, ... in edge order.
Graph subdivide(const Graph& g, const std::map<Edge, int>& counts);
Graph subdivide_all(const Graph& g, int count);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

}  // namespace ta
