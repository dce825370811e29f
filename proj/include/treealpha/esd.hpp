#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "treealpha/graph.hpp"
#include "treealpha/separators.hpp"
#include "treealpha/weights.hpp"

namespace ta {

using Triangle = std::array<Vertex, 3>;  // sorted
using EdgeEnd = std::pair<Edge, Vertex>;

// All triangles of h, each sorted, in lexicographic order.
std::vector<Triangle> triangles(const Graph& h);
std::string to_string(const Triangle& t);

// Zones are stored sparsely; a missing key is the empty set.
struct ExtendedStripDecomposition {
  Graph host;
  VertexSet terminals;
  Graph pattern;
  std::map<Vertex, VertexSet> eta_vertex;
  std::map<Edge, VertexSet> eta_edge;
  std::map<Triangle, VertexSet> eta_triangle;
  std::map<EdgeEnd, VertexSet> eta_end;

  const VertexSet& vertex_zone(Vertex v) const;
  const VertexSet& edge_zone(const Edge& e) const;
  const VertexSet& triangle_zone(const Triangle& t) const;
  const VertexSet& end_zone(const Edge& e, Vertex v) const;
};

struct EsdViolation {
  int bullet = 0;  // 1..7 in definition order; 0 for keys or ids outside the domain
  std::string detail;
  std::vector<Vertex> witness;
};

struct EsdVerdict {
  bool ok = true;
  std::vector<EsdViolation> violations;
  bool has_bullet(int b) const;
};

EsdVerdict validate_esd(const ExtendedStripDecomposition& esd);

// Shortest e-rung, from the first listed end's zone to the second's; none when no rung exists.
std::optional<Path> find_rung(const ExtendedStripDecomposition& esd, const Edge& e);

struct FaithfulReport {
  bool faithful = true;
  std::map<Edge, Path> rungs;
  std::vector<Edge> rungless;
};

FaithfulReport is_faithful(const ExtendedStripDecomposition& esd);

enum class AtomKind { vertex, triangle, edge_interior };
std::string to_string(AtomKind k);

struct Atom {
  AtomKind kind = AtomKind::vertex;
  Vertex vertex = -1;  // vertex atoms
  Triangle triangle{};  // triangle atoms
  Edge edge;            // edge-interior atoms
  VertexSet vertices;
  VertexSet boundary;
  VertexSet core;  // at most 3 vertices with boundary inside N[core]
};

// Every atom in element order (vertices, edges, triangles) with its boundary and a constructed core.
// Requires a valid faithful decomposition; the core containment is checked on every call.
std::vector<Atom> atoms_and_boundaries(const ExtendedStripDecomposition& esd);

// True iff no induced tree of g contains three vertices of z (exhaustive, n <= caps().constricted).
bool is_constricted(const Graph& g, const VertexSet& z);
std::optional<VertexSet> constricted_witness(const Graph& g, const VertexSet& z);

struct ThreePathsAtom {
  Atom atom;
  std::array<bool, 3> empty{};  // N[A] cap Q_i is empty
};

struct ThreePathsReport {
  bool ok = true;
  std::string precondition_failure;  // nonempty when the inputs do not meet the preconditions
  std::vector<ThreePathsAtom> atoms;
};

ThreePathsReport three_paths_check(const Graph& g, const VertexSet& z, const ExtendedStripDecomposition& esd,
                                   const Path& q1, const Path& q2, const Path& q3);

struct PullbackResult {
  VertexSet x;          // lifted separator, ids of g
  VertexSet y;          // union of atom cores, ids of g
  VertexSet separator;  // N[y] in g
  Graph h_prime;
  WeightFn w_prime;
  VertexSet x_prime;
  std::vector<std::string> h_prime_labels;
  std::vector<VertexSet> outside_components;
};

// The decomposition describes G[host_origin] (host id i is vertex host_origin[i] of g), a component of g.
// outside_components, when nonempty, must list the remaining components of g (checked).
PullbackResult pullback_separator(const Graph& g, const WeightFn& w, const ExtendedStripDecomposition& esd,
                                  std::span<const Vertex> host_origin,
                                  const std::vector<VertexSet>& outside_components = {});

}  // namespace ta

namespace ta {

// JSON form: {"host": graph, "Z": [..], "pattern": graph, "eta": {"vertices": {"v": [..]},
// "edges": {"u-v": [..]}, "triangles": {"a-b-c": [..]}, "edge_ends": {"u-v:u": [..]}}}.
// A graph is {"n": count, "edges": [[u, v], ..]} or a graph6 string. A "triangles" list on the
// pattern is optional and must equal triangles(pattern).
ExtendedStripDecomposition parse_esd(std::string_view json_text);
std::string emit_esd(const ExtendedStripDecomposition& esd);

}  // namespace ta
