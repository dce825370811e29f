#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treealpha/tree_decomposition.hpp"
#include "treealpha/weights.hpp"

namespace ta {

// Condition 0 is structural (tree shape, bag count, ids); 1-3 are vertex coverage, edge coverage and
// connectivity of each vertex's bag-subtree.
struct TdViolation {
  int condition = 0;
  std::string detail;
};

struct TdVerdict {
  bool ok = true;
  std::vector<TdViolation> violations;
  bool has_condition(int c) const;
};

TdVerdict validate_td(const Graph& g, const TreeDecomposition& td);

struct TdStats {
  int width = -1;
  int independence = 0;  // max alpha(G[bag])
};

TdStats td_stats(const Graph& g, const TreeDecomposition& td);

// Decomposition from an elimination ordering (every vertex exactly once); components are chained.
TreeDecomposition elimination_td(const Graph& g, const std::vector<Vertex>& order);

// Minimum over triangulations of the largest alpha(G[clique]); n <= caps().tree_alpha.
int tree_alpha_exact(const Graph& g);

// Balanced separator provider for assemble_td: local ids of the given graph.
using SetOracle = std::function<VertexSet(const Graph&, const WeightFn&)>;

struct AssembleParams {
  Rational c{1, 2};
  std::optional<int> d;  // alpha bound on oracle answers; checked when set
};

struct AssembleResult {
  TreeDecomposition td;
  int d = 0;             // largest alpha among oracle answers
  int oracle_calls = 0;
  TdStats stats;
  Rational bound;        // (3 - c)/(1 - c) * d
};

// Recursive assembly from balanced separators; the result is validated and its independence number is checked
// against (3 - c)/(1 - c) * d.
AssembleResult assemble_td(const Graph& g, const SetOracle& oracle, const AssembleParams& params = {});

// Separator oracle for assemble_td.
SetOracle treewidth_set_oracle();  // a bag of an optimal decomposition

struct MwisResult {
  VertexSet set;
  double value = 0;
};

MwisResult mwis_brute(const Graph& g, const std::vector<double>& weights);
// Dynamic programme over stable subsets of bags, joined on bag intersections. max_alpha bounds bag alpha when set.
MwisResult mwis_td(const Graph& g, const std::vector<double>& weights, const TreeDecomposition& td,
                   std::optional<int> max_alpha = std::nullopt);

// {"nodes": n, "edges": [[a, b], ...], "bags": [[...], ...]}
TreeDecomposition parse_td(std::string_view json_text);
std::string emit_td(const TreeDecomposition& td);

}  // namespace ta
