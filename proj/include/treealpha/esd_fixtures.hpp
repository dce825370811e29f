#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treealpha/esd.hpp"
#include "treealpha/generators.hpp"

namespace ta {

// Hand-built decompositions used by tests, the bench and the acceptance suite.

// H = K2 with the whole host in the edge zone; a and b are the two end sets and Z = {a, b}.
ExtendedStripDecomposition single_strip_esd(const Graph& g, Vertex a, Vertex b);

// Host = L(tree); line vertex v_e is the zone and both end sets of e. Needs at least 3 tree vertices.
ExtendedStripDecomposition line_graph_of_tree_esd(const Graph& tree);

struct StripOptions {
  int length = 2;                // vertices per strip, at least 1
  std::vector<int> lengths;      // per pattern edge (edge order), overrides length when nonempty
  bool decorate = false;         // one vertex-zone vertex per pattern vertex of degree >= 2
  bool triangle_vertices = false;  // one triangle-zone vertex per triangle (only with single-vertex strips)
};

// Each pattern edge becomes an induced path; strip ends meeting at a pattern vertex form a clique.
ExtendedStripDecomposition strip_esd(const Graph& pattern, const StripOptions& opts = {});

struct EsdFixture {
  std::string name;
  ExtendedStripDecomposition esd;
  Graph g;                        // the whole graph; esd.host is one of its components
  std::vector<Vertex> host_origin;  // host id i is vertex host_origin[i] of g
};

// single strip, 2-strip path pattern, triangle pattern, line graph of a tree, with outside components.
std::vector<EsdFixture> esd_fixtures();

struct EsdMutation {
  int bullet = 0;
  std::string description;
  ExtendedStripDecomposition esd;
};

// One mutation per bullet 1..7, each breaking exactly that condition of a valid decomposition.
std::vector<EsdMutation> esd_mutations(const ExtendedStripDecomposition& valid);

struct ThreePathFixture {
  ExtendedStripDecomposition esd;
  Path q1;
  Path q2;
  Path q3;
};

// Random tree pattern with at least three leaves, random strip lengths, three paths running inward from terminals.
ThreePathFixture three_path_fixture(std::uint64_t seed);

}  // namespace ta
