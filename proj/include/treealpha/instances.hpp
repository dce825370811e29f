#pragma once

#include <string>
#include <vector>

#include "treealpha/generators.hpp"
#include "treealpha/weights.hpp"

namespace ta {

// Adversarial weight families used by the stress harnesses.
enum class WeightFamily { uniform, single_heavy, component_concentrated, random_rational };

std::string to_string(WeightFamily f);

// Normal weights (total exactly 1) drawn from the family.
WeightFn sample_weights(const Graph& g, WeightFamily family, Rng& rng);
// Random integer masses 0..scale normalised to total 1; falls back to uniform when all are zero.
WeightFn random_rational_weights(int n, Rng& rng, int scale = 20);

// Connected G(n,p) draw consuming the caller's generator.
Graph random_connected(int n, double p, Rng& rng);

}  // namespace ta
