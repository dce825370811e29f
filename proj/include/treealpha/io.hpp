#pragma once

#include <string>
#include <string_view>

#include "treealpha/graph.hpp"
#include "treealpha/weights.hpp"

namespace ta {

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_format(std::string_view name);  // "graph6" | "g6" | "edgelist" | "el"

// graph6 follows the McKay layout bit for bit (optional ">>graph6<<" header, trailing newline tolerated).
// Edge lists hold one "u v" pair per line, 0-indexed, '#' starts a comment;
// a "# n=<count>" comment fixes the vertex count, otherwise it is max id + 1.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Weights as a JSON object {"vertex": "num/den" | number}. Any float value switches to floating mode.
WeightFn parse_weights(std::string_view json_text, int n);
std::string emit_weights(const WeightFn& w);

std::string read_file(const std::string& path);

}  // namespace ta
