#pragma once

#include "treealpha/graph.hpp"

namespace ta {

bool is_stable(const Graph& g, const VertexSet& s);

// Maximum stable set of G[x] by branch and bound with greedy clique-cover bounds, run per
// connected component. Refuses (CapExceeded) when a component of G[x] exceeds caps().alpha
// or 64 vertices; the answer is always exact.
VertexSet max_stable_set(const Graph& g, const VertexSet& x);
VertexSet max_stable_set(const Graph& g);

int alpha_exact(const Graph& g, const VertexSet& x);
int alpha_exact(const Graph& g);

}  // namespace ta
