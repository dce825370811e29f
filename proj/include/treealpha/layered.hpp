#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealpha/boosting.hpp"
#include "treealpha/bounds.hpp"

namespace ta {

// Vertices of universe lying in at least i members of family (i = 0 gives the universe).
VertexSet layer(const std::vector<VertexSet>& family, int i, const VertexSet& universe);

// {z : alpha(N(z) cap Y) >= alpha(Y) / divisor}; empty when alpha(Y) = 0. Symbolic divisors count as huge.
VertexSet z_set(const Graph& g, const VertexSet& y, const BigValue& divisor);

struct LayeredParams {
  int k = 2;
  Rational epsilon{1, 2};
  int lambda = 1;
  int gamma = 2;
  int t = 1;
  LayeredOverrides overrides;
};

struct LayerRecord {
  int i = 0;
  VertexSet layer;
  int alpha = 0;
  bool within_t = false;  // alpha <= T, so C_j^i = L_j^i
  VertexSet z;
  VertexSet chosen;       // C_j^i
  bool bound_checked = false;  // i <= j
  bool bound_ok = true;        // alpha * 2^{lambda k (i-1)} <= 2^{j-1} n
};

struct LayeredIteration {
  int j = 0;
  VertexSet graph;  // V(G_{j-1})
  VertexSet core;   // X_j
  VertexSet s;      // N_{G_{j-1}}[X_j]
  VertexSet y;      // Y_j
  std::vector<LayerRecord> layers;
  VertexSet c;      // C_j
};

struct LayeredOutput {
  bool default_constants = true;
  bool trivial = false;       // n < 2^{2 k lambda} under the default constants: C = V(G), all S_j empty
  bool proof_regime = false;  // d_alg >= k 2^{lambda k} and T >= d_alg: the layer bound is guaranteed
  int m = 0;
  BigValue d_alg;
  BigValue big_t;
  VertexSet c;
  std::vector<VertexSet> separators;  // S_1..S_m
  std::vector<VertexSet> cores;       // X_1..X_m
  std::vector<VertexSet> boosting;    // Y_1..Y_m
  std::vector<LayeredIteration> iterations;
  bool layer_bound_ok = true;
  bool boosted_ok = true;           // (S_j, C) passes check_boosted in G for every j
  std::optional<int> alpha_c;       // when within the alpha cap
  double membership_bound = 0;      // 3 log n / (k lambda)
  double membership_bound_tight = 0;  // 1 + (1 + 2 log n) / (k lambda)
  int max_membership_heavy = 0;     // over vertices of a component of G - C heavier than 1/2
  int max_core_membership = 0;      // over j and x in X_j: #{i < j : x in S_i}
  bool heavy_component = false;
};

// Layered sets algorithm: m = ceil(log2 n) rounds, each asking the oracle for a boosted separator of
// G_{j-1} and removing Y_j and the layer or Z sets of every level i <= j. The layer bound is asserted
// (ContractViolation) in the proof regime and reported otherwise; oracle answers are checked.
LayeredOutput layered_run(const Graph& g, const WeightFn& w, const LayeredParams& params, const BoostedOracle& oracle,
                          std::span<const Vertex> origin = {});

// Indices of a pairwise anticomplete subfamily of size n_target, read off the largest colour class of a greedy
// colouring along a degeneracy order of the conflict graph. Throws PreconditionError when none is found.
std::vector<int> anticomplete_subfamily(const Graph& g, const std::vector<VertexSet>& ys, int n_target);

// Vertices in at least t of the sets N[Y_i].
VertexSet t_covered(const Graph& g, const std::vector<VertexSet>& ys, int t);

struct DisjointParams {
  int t = 1;
  Rational epsilon{1, 2};
  std::optional<int> d;        // breakability core bound; default d(t)
  std::optional<int> n_sets;   // N; default 8 t^2 d
  std::optional<int> lambda;   // default 3N
  LayeredOverrides layered;
  BoostParams boost;
};

struct DisjointResult {
  bool balanced = false;  // first alternative: X is a (w,1/2)-balanced separator
  VertexSet x;            // C cup Z
  VertexSet c;
  VertexSet z;
  std::optional<WeightedComponent> heavy;  // D
  std::vector<VertexSet> ys;               // second alternative
  std::vector<int> indices;                // positions of ys among the layered cores
  int d = 0;
  int n_sets = 0;
  int lambda = 0;
  LayeredOutput layered;
  std::optional<int> alpha_x;
};

// Either X = C cup Z is (w,1/2)-balanced, or the returned Y_i are pairwise anticomplete, |Y_i| < d,
// N[Y_i] cap D is (w,eps)-balanced in D, and no vertex of D lies in t of the N[Y_i]. All verified.
// boosted supplies the boosted separators; the default wraps boosted_separator around oracle.
DisjointResult disjoint_separators(const Graph& g, const WeightFn& w, const DisjointParams& params,
                                   const BreakOracle& oracle, const BoostedOracle& boosted = {});

struct SampleReport {
  std::vector<Vertex> sample;
  std::vector<bool> separated;  // per separator: sampled vertices in distinct components of G'' - S_i
  bool stable = false;
  double fraction = 0;  // share of separators that separate the sample
};

// mu vertices of g drawn without replacement with probability proportional to w (positive everywhere),
// checked against each separator.
SampleReport sample_witnesses(const Graph& g, const WeightFn& w, int mu, std::uint64_t seed,
                              const std::vector<VertexSet>& separators);

}  // namespace ta
