#include "treealpha/alpha.hpp"

#include <bit>
#include <cstdint>

#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"

namespace ta {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Maximum clique of the complement, i.e. maximum stable set, on at most 64 local vertices.
class StableSolver {
 public:
  explicit StableSolver(std::vector<Mask> adj) : adj_(std::move(adj)) {
    const int n = static_cast<int>(adj_.size());
    all_ = n == 64 ? ~Mask{0} : bit(n) - 1;
  }

  Mask solve() {
    expand(0, all_);
    return best_;
  }

 private:
  void expand(Mask current, Mask cand) {
    // Greedy cover of cand by cliques of G; class count bounds the stable sets left in cand.
    int order[64];
    int bound[64];
    int len = 0;
    int classes = 0;
    Mask rest = cand;
    while (rest) {
      ++classes;
      Mask open = rest;
      while (open) {
        int v = std::countr_zero(open);
        open &= adj_[v];
        rest &= ~bit(v);
        order[len] = v;
        bound[len] = classes;
        ++len;
      }
    }
    const int have = std::popcount(current);
    for (int i = len - 1; i >= 0; --i) {
      if (have + bound[i] <= best_size_) return;
      int v = order[i];
      Mask next = current | bit(v);
      Mask sub = cand & ~adj_[v] & ~bit(v);
      if (!sub) {
        if (have + 1 > best_size_) {
          best_size_ = have + 1;
          best_ = next;
        }
      } else {
        expand(next, sub);
      }
      cand &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  Mask all_ = 0;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

bool is_stable(const Graph& g, const VertexSet& s) {
  for (auto v : s)
    for (auto u : g.neighbors(v))
      if (u > v && s.contains(u)) return false;
  return true;
}

VertexSet max_stable_set(const Graph& g, const VertexSet& x) {
  const int limit = std::min(caps().alpha, 64);
  std::vector<Vertex> out;
  for (const auto& comp : components_within(g, x)) {
    const int size = static_cast<int>(comp.size());
    if (size == 1) {
      out.push_back(comp.front());
      continue;
    }
    if (size > limit) throw CapExceeded("alpha", limit, size);
    std::vector<Mask> adj(comp.size(), 0);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (g.adjacent(comp[i], comp[j])) adj[i] |= bit(j);
    Mask best = StableSolver(std::move(adj)).solve();
    for (int i = 0; i < size; ++i)
      if (best & bit(i)) out.push_back(comp[i]);
  }
  return VertexSet(std::move(out));
}

VertexSet max_stable_set(const Graph& g) { return max_stable_set(g, g.vertices()); }

int alpha_exact(const Graph& g, const VertexSet& x) { return static_cast<int>(max_stable_set(g, x).size()); }

int alpha_exact(const Graph& g) { return alpha_exact(g, g.vertices()); }

}  // namespace ta
