#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treealpha/graph.hpp"

namespace ta {

// Pattern vertex id -> host vertex id. Injective and induced: adjacency and non-adjacency are kept.
using Embedding = std::vector<Vertex>;

struct PatternSpec {
  enum class Kind { s_ttt, k_tt, k_gamma_2, explicit_graph };
  Kind kind = Kind::explicit_graph;
  int param = 1;  // t or gamma
  Graph graph;    // explicit patterns only

  static PatternSpec s_ttt(int t) { return {Kind::s_ttt, t, {}}; }
  static PatternSpec k_tt(int t) { return {Kind::k_tt, t, {}}; }
  static PatternSpec k_gamma_2(int gamma) { return {Kind::k_gamma_2, gamma, {}}; }
  static PatternSpec of(Graph h) { return {Kind::explicit_graph, 1, std::move(h)}; }

  // The pattern as a graph, labelled as the generators label it (K_tt: sides 0..t-1 and t..2t-1).
  Graph pattern() const;
  std::string name() const;
};

bool verify_embedding(const Graph& g, const Graph& h, const Embedding& map);

// Exact backtracking over pattern vertices in id order, so the first hit is the
// lexicographically least embedding. Refuses patterns above caps().pattern.
std::optional<Embedding> contains_induced(const Graph& g, const Graph& h);

// Specialised exact searches: centre plus three induced paths for S_ttt, biclique growth for
// K_tt, and an uncapped matcher for the remaining kinds. Embeddings use the labelling of pattern().
std::optional<Embedding> find_pattern(const Graph& g, const PatternSpec& spec);

enum class LtVerdict { free, witness, inconclusive };

struct LtResult {
  LtVerdict verdict = LtVerdict::free;
  std::optional<Embedding> witness;
  std::vector<int> subdivision;  // per edge of wall(t), in edge order, for the witness member
  int certified_cap = 0;         // every member with at most this many vertices was tested
  long long members_tested = 0;
};

// Tests every line graph of a subdivision of wall(t) with at most min(size_cap, |V(g)|) vertices.
LtResult lt_free_upto(const Graph& g, int t, int size_cap);

std::string to_string(LtVerdict v);

}  // namespace ta
