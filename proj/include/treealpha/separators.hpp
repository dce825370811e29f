#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "treealpha/graph.hpp"
#include "treealpha/tree_decomposition.hpp"
#include "treealpha/weights.hpp"

namespace ta {

using Path = std::vector<Vertex>;

struct WeightedComponent {
  VertexSet vertices;
  Rational weight;
};

// Components of G - removed with their weights, ordered by least vertex.
std::vector<WeightedComponent> weighted_components(const Graph& g, const WeightFn& w, const VertexSet& removed);
// Maximum-weight component of G - removed; ties go to the smallest minimum vertex. None when nothing is left.
std::optional<WeightedComponent> heaviest_component(const Graph& g, const WeightFn& w, const VertexSet& removed);

struct BalanceReport {
  bool ok = true;
  Rational c;
  std::vector<WeightedComponent> components;
  std::vector<WeightedComponent> offending;  // components heavier than c
};

BalanceReport check_balanced(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& c);

struct SeparatorCert {
  VertexSet core;
  VertexSet separator;     // N[core] when core_based
  Rational c{1, 2};
  bool core_based = true;
  std::vector<WeightedComponent> components;
};

SeparatorCert make_core_cert(const Graph& g, const WeightFn& w, const VertexSet& core, const Rational& c);
SeparatorCert make_set_cert(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& c);
// Re-derives the separator and components and checks the balance bound.
bool validate_cert(const Graph& g, const WeightFn& w, const SeparatorCert& cert);

// Breakability oracle: returns a (w,1/2)-balanced core certificate for the given graph.
// origin maps the local ids of the graph to the ids of the top-level graph of the computation,
// so a stateful oracle can recognise vertices across calls.
using BreakOracle = std::function<SeparatorCert(const Graph&, const WeightFn&, std::span<const Vertex> origin)>;

std::vector<Vertex> identity_origin(int n);
// Origin of a subgraph of a graph whose own origin is `origin` (empty means identity).
std::vector<Vertex> compose_origin(std::span<const Vertex> origin, const InducedSubgraph& sub);

// Core with |core| < k and N[core] (w,c)-balanced: smallest size first, then lightest heaviest
// component, then lexicographically least.
std::optional<SeparatorCert> min_core_separator(const Graph& g, const WeightFn& w, int k, const Rational& c);
// Oracle wrapper around min_core_separator at c = 1/2; throws ContractViolation when no core exists.
BreakOracle min_core_oracle(int k);

bool is_induced_path(const Graph& g, const Path& p);

// Induced path P with N[P] a (w,1/2)-balanced separator. Requires g connected.
Path path_separator(const Graph& g, const WeightFn& w);

// Core of size below 2^{i+1}(k-1) whose closed neighbourhood is (w,1/2^i)-balanced, by recursion on i
// with the oracle breaking each component of weight at least 1/2^i under 2^{i-1} w.
SeparatorCert power_separator(const Graph& g, const WeightFn& w, int i, const BreakOracle& oracle, int k,
                              std::span<const Vertex> origin = {});

// Exact treewidth per component (subset dynamic programming, capped by caps().treewidth).
int treewidth_exact(const Graph& g);
TreeDecomposition optimal_tree_decomposition(const Graph& g);

// A bag of an optimal tree decomposition that is a (w,1/2)-balanced separator.
VertexSet treewidth_separator(const Graph& g, const WeightFn& w);

}  // namespace ta
