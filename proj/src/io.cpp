#include "treealpha/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treealpha/errors.hpp"

namespace ta {

namespace {

constexpr std::string_view kG6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int g6_value(char c) {
  if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");
  return c - 63;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kG6Header.size()) == kG6Header) text.remove_prefix(kG6Header.size());
  if (text.empty()) throw FormatError("graph6: empty input");
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = g6_value(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw FormatError("graph6: truncated size field");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_value(text[i]);
    if (n < 63) throw FormatError("graph6: non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw FormatError("graph6: truncated size field");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | g6_value(text[i]);
    if (n < 258048) throw FormatError("graph6: non-canonical size field");
    pos = 8;
  }
  if (n > (1 << 24)) throw FormatError("graph6: graph too large");
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes)
    throw FormatError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                      std::to_string(text.size() - pos));
  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = g6_value(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    int last = g6_value(text.back());
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

long long parse_vertex_token(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw FormatError("edgelist line " + std::to_string(line) + ": non-integer endpoint '" + tok + "'");
  if (tok.size() > 9) throw FormatError("edgelist line " + std::to_string(line) + ": endpoint out of range");
  return std::stoll(tok);
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> es;
  long long declared = -1;
  long long max_id = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      auto comment = trim(body.substr(hash + 1));
      if (comment.substr(0, 2) == "n=") declared = parse_vertex_token(std::string(trim(comment.substr(2))), lineno);
      body = body.substr(0, hash);
    }
    std::istringstream fields{std::string(body)};
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw FormatError("edgelist line " + std::to_string(lineno) + ": expected exactly two endpoints");
    long long u = parse_vertex_token(a, lineno);
    long long v = parse_vertex_token(b, lineno);
    if (u == v) throw FormatError("edgelist line " + std::to_string(lineno) + ": self-loop at " + a);
    max_id = std::max({max_id, u, v});
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  long long n = declared >= 0 ? declared : max_id + 1;
  if (max_id >= n) throw FormatError("edgelist: endpoint " + std::to_string(max_id) + " out of range for n=" + std::to_string(n));
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw FormatError("edgelist: repeated edge");
  return Graph(static_cast<int>(n), es);
}

std::string emit_edgelist(const Graph& g) {
  std::string out = "# n=" + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "el" || name == "edges") return GraphFormat::edgelist;
  throw FormatError("unknown graph format: " + std::string(name));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? emit_graph6(g) : emit_edgelist(g);
}

WeightFn parse_weights(std::string_view json_text, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("weights: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("weights: expected a JSON object");
  std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
  bool floating = false;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long long v = parse_vertex_token(it.key(), 0);
    if (v >= n) throw FormatError("weights: vertex " + it.key() + " out of range");
    const auto& val = it.value();
    if (val.is_string()) {
      values[v] = parse_rational(val.get<std::string>());
    } else if (val.is_number_integer()) {
      values[v] = Rational(val.get<long long>());
    } else if (val.is_number_float()) {
      values[v] = Rational(val.get<double>());
      floating = true;
    } else {
      throw FormatError("weights: bad value for vertex " + it.key());
    }
  }
  return WeightFn(std::move(values), floating ? WeightMode::floating : WeightMode::exact);
}

std::string emit_weights(const WeightFn& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int v = 0; v < w.order(); ++v) {
    if (w[v] == 0) continue;
    if (w.mode() == WeightMode::floating)
      j[std::to_string(v)] = to_double(w[v]);
    else
      j[std::to_string(v)] = to_string(w[v]);
  }
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ta
