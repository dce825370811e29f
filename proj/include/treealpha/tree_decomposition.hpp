#pragma once

#include <vector>

#include "treealpha/graph.hpp"

namespace ta {

// A tree together with one bag per tree node.
struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  int nodes() const { return static_cast<int>(bags.size()); }
  static TreeDecomposition single_bag(const VertexSet& bag);
};

}  // namespace ta
