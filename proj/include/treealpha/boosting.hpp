#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treealpha/bounds.hpp"
#include "treealpha/separators.hpp"

namespace ta {

// (S, C) with core X, S inside N[X]. C is the boosting set.
struct BoostedSeparator {
  VertexSet s;
  VertexSet c;
  VertexSet core;
  Rational epsilon{1, 2};
};

struct BoostedCheck {
  bool ok = true;
  std::optional<WeightedComponent> heavy;     // maximum-weight component B of G - C
  std::vector<WeightedComponent> pieces;      // components of B - S
  std::vector<WeightedComponent> offending;   // pieces heavier than epsilon
};

// ok iff w(B) <= 1/2 or every component of B - S weighs at most epsilon.
BoostedCheck check_boosted(const Graph& g, const WeightFn& w, const VertexSet& s, const VertexSet& c,
                           const Rational& epsilon);

// Supplies a boosted separator of the given graph. origin maps local ids to the top-level graph.
using BoostedOracle =
    std::function<BoostedSeparator(const Graph&, const WeightFn&, std::span<const Vertex> origin)>;

struct ProblematicPair {
  Vertex x = -1;
  VertexSet component;  // a big component B of G - N[X]
  Rational weight;
  int alpha = 0;        // alpha(N(x) cap N(B))
  VertexSet witness;    // a maximum stable set of N(x) cap N(B)
};

struct ProblematicStats {
  int beta_max = 0;
  std::vector<ProblematicPair> pairs;  // every (x, big B), including alpha 0

  // Pairs with alpha >= 3 beta'/4.
  std::vector<ProblematicPair> at(const Rational& beta_prime) const;
  Rational big_w(const Rational& beta_prime) const;  // W(G, X, beta')
};

// Requires N[x_set] to be a (w,1/2)-balanced separator of g.
ProblematicStats problematic_stats(const Graph& g, const WeightFn& w, const VertexSet& x_set, const Rational& epsilon);

// Algorithm constants for the layered run inside a boosting step; unset values use the default formulas.
struct LayeredOverrides {
  std::optional<BigInt> d_alg;
  std::optional<BigInt> big_t;
  std::optional<int> m;
  bool any() const { return d_alg || big_t || m; }
};

struct BoostParams {
  int t = 1;
  std::optional<BigInt> threshold;  // default 4 eta log^2 n
  LayeredOverrides layered;
};

struct BoostStepResult {
  VertexSet c;  // ids of g, disjoint from X
  ProblematicPair pair;
  VertexSet stable;  // I
  Rational w_before;
  Rational w_after;
};

// One weight-reduction step: picks a pair at beta(G,X), spreads w' uniformly on a stable I of size beta inside
// N(x) cap N(B) and runs the layered algorithm on G - X at 1/8 with lambda = 6t, gamma = 3t + 1, core bound
// 16(k-1), each call answered by the 1/8-power separator of `oracle`. Verifies that W(., X, beta') drops by
// at least epsilon.
BoostStepResult boost_step(const Graph& g, const WeightFn& w, const VertexSet& x_set, const Rational& beta_prime,
                           const Rational& epsilon, int k, const BreakOracle& oracle, const BoostParams& params,
                           std::span<const Vertex> origin = {});

struct BoostIteration {
  int outer = 0;
  int inner = 0;
  int beta = 0;
  Rational big_w;
  std::size_t c_size = 0;
};

struct BoostedRun {
  BoostedSeparator result;
  VertexSet x;
  VertexSet c_star;  // from the reduction loops
  VertexSet z;       // neighbourhoods of the remaining big components
  BigValue threshold;
  int beta_initial = 0;
  int beta_final = 0;
  std::vector<BoostIteration> trace;
};

// Boosted separator (N[X], C cup Z) from a k-breakability oracle, verified by check_boosted.
BoostedRun boosted_separator(const Graph& g, const WeightFn& w, int k, const Rational& epsilon, const BreakOracle& oracle,
                             const BoostParams& params, std::span<const Vertex> origin = {});

// Boosted-separator provider running boosted_separator with the given oracle.
BoostedOracle boosted_oracle(int k, const Rational& epsilon, BreakOracle oracle, BoostParams params);

}  // namespace ta
