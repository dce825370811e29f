#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "treealpha/graph.hpp"

namespace ta {

// Single seeded generator type used everywhere randomness appears.
using Rng = std::mt19937_64;

// Portable helpers (the std distributions are implementation-defined).
double uniform01(Rng& rng);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph star_graph(int leaves);            // centre 0
Graph grid_graph(int rows, int cols);
Graph petersen_graph();

// K_{1,3} with every edge subdivided t-1 times: centre 0, branch j holds 1+j*t .. (j+1)*t outward.
Graph s_ttt(int t);
// K_gamma with every edge subdivided twice: branch vertices 0..gamma-1, then two per pair (i<j) in order.
Graph k_gamma_2(int gamma);
// Elementary wall: rows 0..t, each a path on 2t+2 vertices; a rung joins (r,c) and (r+1,c)
// exactly when c and r have the same parity; degree-1 vertices are pruned until none remain;
// survivors are numbered row-major.
Graph wall(int t);
Graph gnp(int n, double p, std::uint64_t seed);
// gnp resampled until connected (the first connected draw from the seed stream).
Graph gnp_connected(int n, double p, std::uint64_t seed);
Graph random_tree(int n, Rng& rng);

// Dispatch by name with integer/real parameters: "path" {k}, "cycle" {k}, "complete" {k},
// "complete_bipartite" {a,b}, "S_ttt" {t}, "K_gamma_2" {gamma}, "wall" {t}, "gnp" {n,p}.
Graph generate(const std::string& kind, const std::map<std::string, double>& params, std::uint64_t seed = 0);

}  // namespace ta
