#include "treealpha/instances.hpp"

#include "treealpha/graph.hpp"

namespace ta {

std::string to_string(WeightFamily f) {
  switch (f) {
    case WeightFamily::uniform:
      return "uniform";
    case WeightFamily::single_heavy:
      return "single_heavy";
    case WeightFamily::component_concentrated:
      return "component_concentrated";
    case WeightFamily::random_rational:
      break;
  }
  return "random_rational";
}

WeightFn random_rational_weights(int n, Rng& rng, int scale) {
  std::vector<long long> mass(static_cast<std::size_t>(n));
  long long total = 0;
  for (auto& m : mass) {
    m = uniform_int(rng, 0, scale);
    total += m;
  }
  if (total == 0) return WeightFn::uniform(n);
  std::vector<Rational> v;
  v.reserve(mass.size());
  for (auto m : mass) v.emplace_back(m, total);
  return WeightFn(std::move(v));
}

WeightFn sample_weights(const Graph& g, WeightFamily family, Rng& rng) {
  const int n = g.order();
  if (n == 0) return WeightFn();
  switch (family) {
    case WeightFamily::uniform:
      return WeightFn::uniform(n);
    case WeightFamily::single_heavy: {
      // One vertex carries 1/2, the rest share the other half.
      Vertex heavy = uniform_int(rng, 0, n - 1);
      std::vector<Rational> v(static_cast<std::size_t>(n), n > 1 ? Rational(1, 2 * (n - 1)) : Rational(0));
      v[heavy] = n > 1 ? Rational(1, 2) : Rational(1);
      return WeightFn(std::move(v));
    }
    case WeightFamily::component_concentrated: {
      // All weight uniformly on a connected ball around a random vertex.
      Vertex centre = uniform_int(rng, 0, n - 1);
      VertexSet ball = closed_nbhd(g, closed_nbhd(g, {centre}));
      return WeightFn::uniform_on(n, ball);
    }
    case WeightFamily::random_rational:
      break;
  }
  return random_rational_weights(n, rng);
}

Graph random_connected(int n, double p, Rng& rng) {
  while (true) {
    Graph g = gnp(n, p, rng());
    if (is_connected(g)) return g;
  }
}

}  // namespace ta
