#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treealpha/alpha.hpp"
#include "treealpha/bench.hpp"
#include "treealpha/boosting.hpp"
#include "treealpha/caps.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/esd.hpp"
#include "treealpha/generators.hpp"
#include "treealpha/io.hpp"
#include "treealpha/layered.hpp"
#include "treealpha/patterns.hpp"
#include "treealpha/separators.hpp"
#include "treealpha/treedecomp.hpp"

namespace ta::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values or inputs; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string graph;
  std::string format;
  std::string weights;
  std::map<std::string, std::string> caps;

  // Subcommand parameters.
  std::string kind;
  std::map<std::string, double> gen_params;
  std::string to = "graph6";
  std::string core, set, boost_set;
  std::string c = "1/2";
  std::string epsilon = "1/4";
  int k = 2, i = 1, t = 1, lambda = 1, gamma = 2;
  std::string td, esd, pattern, pattern_graph, method = "td", suite;
  std::optional<std::string> d_alg, big_t, m, threshold, d, n_sets, lambda_override;
  std::optional<int> d_bound;
  int size_cap = 12;
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Session {
  Options opt;
  std::uint64_t digest = fnv1a("");
  Json outputs = Json::object();
  Json assertions = Json::array();
  std::string mode;
  std::string raw;  // plain-text payload for gen/convert without --json
  bool ok = true;

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      try {
        text = read_file(path);
      } catch (const FormatError& e) {
        throw UsageError(e.what());
      }
    }
    digest = fnv1a(text, digest);
    return text;
  }

  Graph graph() {
    if (opt.graph.empty()) throw UsageError("--graph is required");
    const std::string text = read(opt.graph);
    GraphFormat f = GraphFormat::edgelist;
    if (!opt.format.empty()) {
      f = parse_format(opt.format);
    } else if (opt.graph.ends_with(".g6") || opt.graph.ends_with(".graph6")) {
      f = GraphFormat::graph6;
    }
    return parse_graph(text, f);
  }

  WeightFn weights(const Graph& g) {
    if (opt.weights.empty()) return WeightFn::uniform(g.order());
    return parse_weights(read(opt.weights), g.order());
  }

  void check(const std::string& name, bool passed, const std::string& detail = {}) {
    Json a{{"name", name}, {"ok", passed}};
    if (!detail.empty()) a["detail"] = detail;
    assertions.push_back(std::move(a));
    ok = ok && passed;
  }
};

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad value for ") + name + ": " + text);
  }
}

BigInt bigint_arg(const std::string& text, const char* name) {
  const Rational r = rational_arg(text, name);
  if (boost::multiprecision::denominator(r) != 1 || r < 0)
    throw UsageError(std::string(name) + " must be a nonnegative integer");
  return boost::multiprecision::numerator(r);
}

VertexSet vertex_list(const std::string& text, const Graph& g) {
  std::vector<Vertex> ids;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size() || v < 0 || v >= g.order()) throw std::out_of_range(token);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + token + "'");
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return VertexSet(std::move(ids));
}

Json ids(const VertexSet& s) { return s.ids(); }

Json components_json(const std::vector<WeightedComponent>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back({{"vertices", ids(c.vertices)}, {"weight", to_string(c.weight)}});
  return arr;
}

LayeredOverrides layered_overrides(const Options& o) {
  LayeredOverrides ov;
  if (o.d_alg) ov.d_alg = bigint_arg(*o.d_alg, "--override-d-alg");
  if (o.big_t) ov.big_t = bigint_arg(*o.big_t, "--override-T");
  if (o.m) ov.m = bigint_arg(*o.m, "--override-m").convert_to<int>();
  return ov;
}

BoostParams boost_params(const Options& o) {
  BoostParams p;
  p.t = o.t;
  if (o.threshold) p.threshold = bigint_arg(*o.threshold, "--override-threshold");
  p.layered = layered_overrides(o);
  return p;
}

void cmd_gen(Session& s) {
  const Graph g = generate(s.opt.kind, s.opt.gen_params, s.opt.seed);
  if (!s.opt.format.empty()) s.opt.to = s.opt.format;
  const GraphFormat f = parse_format(s.opt.to);
  s.raw = emit_graph(g, f);
  s.outputs["n"] = g.order();
  s.outputs["m"] = g.size();
  s.outputs["format"] = s.opt.to;
  s.outputs["graph"] = s.raw;
}

void cmd_convert(Session& s) {
  const Graph g = s.graph();
  const GraphFormat f = parse_format(s.opt.to);
  s.raw = emit_graph(g, f);
  s.outputs["n"] = g.order();
  s.outputs["m"] = g.size();
  s.outputs["format"] = s.opt.to;
  s.outputs["graph"] = s.raw;
}

void cmd_check_balanced(Session& s) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  VertexSet x;
  if (!s.opt.core.empty()) {
    const VertexSet core = vertex_list(s.opt.core, g);
    x = closed_nbhd(g, core);
    s.outputs["core"] = ids(core);
  } else {
    x = vertex_list(s.opt.set, g);
  }
  const Rational c = rational_arg(s.opt.c, "--c");
  const auto r = check_balanced(g, w, x, c);
  s.outputs["separator"] = ids(x);
  s.outputs["c"] = to_string(c);
  s.outputs["components"] = components_json(r.components);
  s.outputs["offending"] = components_json(r.offending);
  s.check("balanced", r.ok);
}

void cmd_check_boosted(Session& s) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  const VertexSet sep = s.opt.core.empty() ? vertex_list(s.opt.set, g) : closed_nbhd(g, vertex_list(s.opt.core, g));
  const VertexSet c = vertex_list(s.opt.boost_set, g);
  const Rational eps = rational_arg(s.opt.epsilon, "--epsilon");
  const auto r = check_boosted(g, w, sep, c, eps);
  s.outputs["separator"] = ids(sep);
  s.outputs["boosting_set"] = ids(c);
  if (r.heavy) s.outputs["heavy"] = {{"vertices", ids(r.heavy->vertices)}, {"weight", to_string(r.heavy->weight)}};
  s.outputs["pieces"] = components_json(r.pieces);
  s.outputs["offending"] = components_json(r.offending);
  s.check("boosted", r.ok);
}

void cmd_check_td(Session& s) {
  const Graph g = s.graph();
  if (s.opt.td.empty()) throw UsageError("--td is required");
  const TreeDecomposition td = parse_td(s.read(s.opt.td));
  const auto v = validate_td(g, td);
  Json viol = Json::array();
  for (const auto& x : v.violations) viol.push_back({{"condition", x.condition}, {"detail", x.detail}});
  s.outputs["violations"] = viol;
  if (v.ok) {
    const auto st = td_stats(g, td);
    s.outputs["width"] = st.width;
    s.outputs["independence"] = st.independence;
  }
  s.check("tree-decomposition", v.ok);
}

void cmd_check_esd(Session& s) {
  if (s.opt.esd.empty()) throw UsageError("--esd is required");
  const auto esd = parse_esd(s.read(s.opt.esd));
  const auto v = validate_esd(esd);
  Json viol = Json::array();
  for (const auto& x : v.violations)
    viol.push_back({{"condition", x.bullet}, {"detail", x.detail}, {"witness", x.witness}});
  s.outputs["violations"] = viol;
  if (v.ok) {
    const auto f = is_faithful(esd);
    s.outputs["faithful"] = f.faithful;
    Json rungless = Json::array();
    for (const auto& e : f.rungless) rungless.push_back(to_string(e));
    s.outputs["rungless"] = rungless;
  }
  s.check("esd", v.ok);
}

void cmd_check_pattern(Session& s) {
  const Graph g = s.graph();
  if (s.opt.pattern == "L_t") {
    const auto r = lt_free_upto(g, s.opt.t, s.opt.size_cap);
    s.outputs["pattern"] = "L_t(" + std::to_string(s.opt.t) + ")";
    s.outputs["verdict"] = to_string(r.verdict);
    if (r.witness) {
      s.outputs["witness"] = *r.witness;
      s.outputs["subdivision"] = r.subdivision;
    }
    s.outputs["certified_cap"] = r.certified_cap;
    s.outputs["members_tested"] = r.members_tested;
    s.check("pattern-free", r.verdict != LtVerdict::witness);
    return;
  }
  PatternSpec spec;
  if (!s.opt.pattern_graph.empty()) {
    spec = PatternSpec::of(parse_graph(s.read(s.opt.pattern_graph), GraphFormat::edgelist));
  } else if (s.opt.pattern == "S_ttt") {
    spec = PatternSpec::s_ttt(s.opt.t);
  } else if (s.opt.pattern == "K_tt") {
    spec = PatternSpec::k_tt(s.opt.t);
  } else if (s.opt.pattern == "K_gamma_2") {
    spec = PatternSpec::k_gamma_2(s.opt.gamma);
  } else {
    throw UsageError("--pattern must be S_ttt, K_tt, K_gamma_2 or L_t (or give --pattern-graph)");
  }
  const auto hit = find_pattern(g, spec);
  s.outputs["certified_cap"] = g.order();
  s.outputs["pattern"] = spec.name();
  s.outputs["verdict"] = hit ? "witness" : "free";
  if (hit) {
    s.outputs["witness"] = *hit;
    s.check("embedding-verified", verify_embedding(g, spec.pattern(), *hit));
  }
  s.check("pattern-free", !hit.has_value());
}

void cmd_separate(Session& s, const std::string& which) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  const Rational half(1, 2);
  if (which == "path") {
    const Path p = path_separator(g, w);
    const VertexSet sep = closed_nbhd(g, VertexSet(std::vector<Vertex>(p.begin(), p.end())));
    s.outputs["path"] = p;
    s.outputs["separator"] = ids(sep);
    s.check("induced-path", is_induced_path(g, p));
    s.check("balanced", check_balanced(g, w, sep, half).ok);
  } else if (which == "mincore") {
    const auto cert = min_core_separator(g, w, s.opt.k, half);
    s.outputs["found"] = cert.has_value();
    if (cert) {
      s.outputs["core"] = ids(cert->core);
      s.outputs["separator"] = ids(cert->separator);
      s.check("balanced", validate_cert(g, w, *cert));
    }
    s.check("core-below-k", cert.has_value());
  } else if (which == "power") {
    const auto cert = power_separator(g, w, s.opt.i, min_core_oracle(s.opt.k), s.opt.k);
    const Rational c(1, BigInt(1) << s.opt.i);
    s.outputs["core"] = ids(cert.core);
    s.outputs["separator"] = ids(cert.separator);
    s.outputs["c"] = to_string(c);
    const long long bound = (2LL << s.opt.i) * (s.opt.k - 1);
    s.check("core-size", static_cast<long long>(cert.core.size()) < bound,
            "|core| < " + std::to_string(bound));
    s.check("balanced", check_balanced(g, w, cert.separator, c).ok);
  } else {
    const VertexSet sep = treewidth_separator(g, w);
    s.outputs["separator"] = ids(sep);
    s.outputs["treewidth"] = treewidth_exact(g);
    s.check("balanced", check_balanced(g, w, sep, half).ok);
  }
}

void cmd_boost(Session& s) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  const Rational eps = rational_arg(s.opt.epsilon, "--epsilon");
  const BoostParams params = boost_params(s.opt);
  s.mode = params.threshold || params.layered.any() ? "override" : "default";
  const auto run = boosted_separator(g, w, s.opt.k, eps, min_core_oracle(s.opt.k), params);
  s.outputs["core"] = ids(run.x);
  s.outputs["separator"] = ids(run.result.s);
  s.outputs["boosting_set"] = ids(run.result.c);
  s.outputs["c_star"] = ids(run.c_star);
  s.outputs["z"] = ids(run.z);
  s.outputs["threshold"] = run.threshold.str();
  s.outputs["beta_initial"] = run.beta_initial;
  s.outputs["beta_final"] = run.beta_final;
  Json trace = Json::array();
  for (const auto& it : run.trace)
    trace.push_back({{"step", it.outer}, {"inner", it.inner}, {"beta", it.beta}, {"W", to_string(it.big_w)},
                     {"c_size", it.c_size}});
  s.outputs["trace"] = trace;
  try {
    s.outputs["alpha_c"] = alpha_exact(g, run.result.c);
  } catch (const CapExceeded&) {
    s.outputs["alpha_c"] = nullptr;
  }
  s.check("boosted", check_boosted(g, w, run.result.s, run.result.c, eps).ok);
}

Json layered_json(const LayeredOutput& out) {
  Json j;
  j["m"] = out.m;
  j["trivial"] = out.trivial;
  j["proof_regime"] = out.proof_regime;
  j["d_alg"] = out.d_alg.str();
  j["T"] = out.big_t.str();
  j["C"] = ids(out.c);
  j["alpha_C"] = out.alpha_c ? Json(*out.alpha_c) : Json(nullptr);
  Json its = Json::array();
  for (const auto& it : out.iterations) {
    Json layers = Json::array();
    for (const auto& l : it.layers)
      layers.push_back({{"i", l.i},
                        {"layer", ids(l.layer)},
                        {"alpha", l.alpha},
                        {"within_T", l.within_t},
                        {"chosen", ids(l.chosen)},
                        {"bound_checked", l.bound_checked},
                        {"bound_ok", l.bound_ok}});
    its.push_back({{"j", it.j}, {"S", ids(it.s)}, {"X", ids(it.core)}, {"Y", ids(it.y)}, {"C_j", ids(it.c)},
                   {"layers", layers}});
  }
  j["iterations"] = its;
  j["max_membership_heavy"] = out.max_membership_heavy;
  j["max_core_membership"] = out.max_core_membership;
  j["membership_bound"] = out.membership_bound;
  j["membership_bound_tight"] = out.membership_bound_tight;
  return j;
}

void cmd_layered(Session& s) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  LayeredParams p;
  p.k = s.opt.k;
  p.epsilon = rational_arg(s.opt.epsilon, "--epsilon");
  p.lambda = s.opt.lambda;
  p.gamma = s.opt.gamma;
  p.t = s.opt.t;
  p.overrides = layered_overrides(s.opt);
  s.mode = p.overrides.any() ? "override" : "default";
  BoostParams bp = boost_params(s.opt);
  const auto out = layered_run(g, w, p, boosted_oracle(p.k, p.epsilon, min_core_oracle(p.k), bp));
  s.outputs = layered_json(out);
  for (const auto& it : out.iterations)
    for (const auto& l : it.layers)
      if (l.bound_checked)
        s.check("layer-bound j=" + std::to_string(it.j) + " i=" + std::to_string(l.i), l.bound_ok);
  for (std::size_t j = 0; j < out.separators.size(); ++j)
    s.check("boosted j=" + std::to_string(j + 1), check_boosted(g, w, out.separators[j], out.c, p.epsilon).ok);
}

void cmd_disjoint(Session& s) {
  const Graph g = s.graph();
  const WeightFn w = s.weights(g);
  DisjointParams p;
  p.t = s.opt.t;
  p.epsilon = rational_arg(s.opt.epsilon, "--epsilon");
  if (s.opt.d) p.d = bigint_arg(*s.opt.d, "--override-d").convert_to<int>();
  if (s.opt.n_sets) p.n_sets = bigint_arg(*s.opt.n_sets, "--override-N").convert_to<int>();
  if (s.opt.lambda_override) p.lambda = bigint_arg(*s.opt.lambda_override, "--override-lambda").convert_to<int>();
  p.layered = layered_overrides(s.opt);
  p.boost = boost_params(s.opt);
  s.mode = p.d || p.n_sets || p.lambda || p.layered.any() ? "override" : "default";
  const int d = p.d ? *p.d : d_of_t(p.t).exact().convert_to<int>();
  const auto r = disjoint_separators(g, w, p, min_core_oracle(d));
  s.outputs["bullet"] = r.balanced ? "balanced" : "bundle";
  s.outputs["d"] = r.d;
  s.outputs["N"] = r.n_sets;
  s.outputs["lambda"] = r.lambda;
  s.outputs["X"] = ids(r.x);
  s.outputs["alpha_X"] = r.alpha_x ? Json(*r.alpha_x) : Json(nullptr);
  s.outputs["C"] = ids(r.c);
  s.outputs["Z"] = ids(r.z);
  Json ys = Json::array();
  for (const auto& y : r.ys) ys.push_back(ids(y));
  s.outputs["Y"] = ys;
  s.outputs["layered"] = layered_json(r.layered);
  if (r.balanced) {
    s.check("balanced", check_balanced(g, w, r.x, Rational(1, 2)).ok);
  } else {
    bool anti = true;
    for (std::size_t a = 0; a < r.ys.size(); ++a)
      for (std::size_t b = a + 1; b < r.ys.size(); ++b) anti = anti && anticomplete(g, r.ys[a], r.ys[b]);
    s.check("pairwise-anticomplete", anti);
    s.check("bundle-size", static_cast<int>(r.ys.size()) == r.n_sets);
  }
}

void cmd_decompose(Session& s) {
  const Graph g = s.graph();
  AssembleParams p{.c = rational_arg(s.opt.c, "--c"), .d = s.opt.d_bound};
  const auto r = assemble_td(g, treewidth_set_oracle(), p);
  s.outputs["td"] = Json::parse(emit_td(r.td));
  s.outputs["width"] = r.stats.width;
  s.outputs["independence"] = r.stats.independence;
  s.outputs["d"] = r.d;
  s.outputs["bound"] = to_string(r.bound);
  s.outputs["oracle_calls"] = r.oracle_calls;
  s.check("valid", validate_td(g, r.td).ok);
  s.check("independence-bound", Rational(r.stats.independence) <= r.bound);
}

std::vector<double> mwis_weights(Session& s, int n) {
  std::vector<double> w(static_cast<std::size_t>(n), 1.0);
  if (s.opt.weights.empty()) return w;
  Json j;
  try {
    j = Json::parse(s.read(s.opt.weights));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("weights: ") + e.what());
  }
  auto value = [](const Json& x) {
    if (x.is_number()) return x.get<double>();
    if (x.is_string()) return to_double(parse_rational(x.get<std::string>()));
    throw UsageError("weights: values must be numbers");
  };
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n) throw UsageError("weights: expected one value per vertex");
    for (int v = 0; v < n; ++v) w[v] = value(j[v]);
  } else if (j.is_object()) {
    std::fill(w.begin(), w.end(), 0.0);
    for (auto it = j.begin(); it != j.end(); ++it) {
      int v = -1;
      try {
        v = std::stoi(it.key());
      } catch (const std::exception&) {
      }
      if (v < 0 || v >= n) throw UsageError("weights: bad vertex " + it.key());
      w[v] = value(it.value());
    }
  } else {
    throw UsageError("weights: expected an object or an array");
  }
  return w;
}

void cmd_mwis(Session& s) {
  const Graph g = s.graph();
  const auto w = mwis_weights(s, g.order());
  MwisResult r;
  if (s.opt.method == "brute") {
    r = mwis_brute(g, w);
  } else if (s.opt.method == "td") {
    const TreeDecomposition td =
        s.opt.td.empty() ? assemble_td(g, treewidth_set_oracle()).td : parse_td(s.read(s.opt.td));
    r = mwis_td(g, w, td);
  } else {
    throw UsageError("--method must be brute or td");
  }
  s.outputs["value"] = r.value;
  s.outputs["set"] = ids(r.set);
  s.check("stable", is_stable(g, r.set));
}

void cmd_bench(Session& s) {
  const auto sum = run_bench(s.opt.suite, s.opt.seed);
  s.outputs["suite"] = sum.suite;
  s.outputs["passed"] = sum.passed;
  s.outputs["failed"] = sum.failed;
  Json cases = Json::array();
  for (const auto& c : sum.cases) cases.push_back({{"seed", c.seed}, {"pass", c.pass}, {"detail", c.detail}});
  s.outputs["cases"] = cases;
  s.check(sum.suite, sum.failed == 0, std::to_string(sum.passed) + "/" + std::to_string(sum.cases.size()) + " pass");
}

void apply_caps(const std::map<std::string, std::string>& given) {
  std::string spec;
  for (const auto& [name, value] : given) {
    if (!spec.empty()) spec += ",";
    spec += name + "=" + value;
  }
  if (spec.empty()) return;
  try {
    apply_cap_overrides(caps(), spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_text(std::ostream& out, const Json& j, const std::string& prefix = {}) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      print_text(out, *it, prefix + it.key() + ".");
    } else if (it->is_string()) {
      out << prefix << it.key() << ": " << it->get<std::string>() << "\n";
    } else {
      out << prefix << it.key() << ": " << it->dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const CapScope restore(caps());
  Session s;
  Options& o = s.opt;
  CLI::App app{"Balanced separators, tree decompositions and tree independence number"};
  app.name("treealpha");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--seed", o.seed, "Seed for every random choice");
  app.add_option("--graph", o.graph, "Graph file (graph6 for .g6/.graph6, edge list otherwise; - for stdin)");
  app.add_option("--format", o.format, "Force the input graph format (graph6|edgelist)");
  app.add_option("--weights", o.weights, "Weights JSON (default uniform)");
  for (const char* cap : {"alpha", "pattern", "mincore_subsets", "treewidth", "constricted", "tree_alpha", "mwis_brute",
                          "mwis_states", "path_fallback"}) {
    std::string flag = std::string("--cap-") + cap;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app.add_option_function<std::string>(flag, [&o, name = std::string(cap)](const std::string& v) { o.caps[name] = v; },
                                         "Override the " + std::string(cap) + " cap");
  }
  auto add_overrides = [&o](CLI::App* sub) {
    sub->add_option("--override-d-alg", o.d_alg, "Layered d");
    sub->add_option("--override-T", o.big_t, "Layered T");
    sub->add_option("--override-m", o.m, "Layered iteration count");
    sub->add_option("--override-threshold", o.threshold, "Boosting beta threshold");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--kind", o.kind, "path|cycle|complete|complete_bipartite|S_ttt|K_gamma_2|wall|gnp")->required();
  for (const char* p : {"k", "a", "b", "t", "gamma", "n", "p"})
    gen->add_option_function<double>(std::string("--") + p, [&o, name = std::string(p)](double v) { o.gen_params[name] = v; },
                                     std::string("Generator parameter ") + p);
  gen->add_option("--to,--out-format", o.to, "Output format (graph6|edgelist)");

  auto* convert = app.add_subcommand("convert", "Convert a graph between formats");
  convert->add_option("--to", o.to, "Output format (graph6|edgelist)");

  auto* check = app.add_subcommand("check", "Verify a certificate");
  check->require_subcommand(1);
  auto* balanced = check->add_subcommand("balanced", "Check a (w,c)-balanced separator");
  balanced->add_option("--core", o.core, "Core X; the separator is N[X]");
  balanced->add_option("--set", o.set, "Separator given directly");
  balanced->add_option("--c", o.c, "Balance fraction");
  auto* boosted = check->add_subcommand("boosted", "Check a boosted separator (S, C)");
  boosted->add_option("--core", o.core, "Core X; S = N[X]");
  boosted->add_option("--set", o.set, "S given directly");
  boosted->add_option("--boosting-set", o.boost_set, "The boosting set C");
  boosted->add_option("--epsilon", o.epsilon, "Fraction for the pieces of B - S");
  auto* check_td = check->add_subcommand("td", "Validate a tree decomposition");
  check_td->add_option("--td", o.td, "Decomposition JSON")->required();
  auto* check_esd = check->add_subcommand("esd", "Validate an extended strip decomposition");
  check_esd->add_option("--esd", o.esd, "Decomposition JSON")->required();
  auto* check_pattern = check->add_subcommand("pattern", "Search for an induced pattern");
  check_pattern->add_option("--pattern", o.pattern, "S_ttt|K_tt|K_gamma_2|L_t");
  check_pattern->add_option("--size-cap", o.size_cap, "Largest L_t member tested");
  check_pattern->add_option("--pattern-graph", o.pattern_graph, "Explicit pattern as an edge list file");
  check_pattern->add_option("--t", o.t, "t");
  check_pattern->add_option("--gamma", o.gamma, "gamma");

  auto* separate = app.add_subcommand("separate", "Build a balanced separator");
  separate->require_subcommand(1);
  std::string which;
  for (const char* kind : {"path", "mincore", "power", "treewidth"}) {
    auto* sub = separate->add_subcommand(kind, std::string(kind) + " separator");
    sub->callback([&which, kind] { which = kind; });
    if (std::string(kind) == "mincore" || std::string(kind) == "power") sub->add_option("--k", o.k, "Core bound");
    if (std::string(kind) == "power") sub->add_option("--i", o.i, "Power: balance at 1/2^i");
  }

  auto* boost = app.add_subcommand("boost", "Boosted separator from the min-core oracle");
  boost->add_option("--k", o.k, "Breakability bound");
  boost->add_option("--epsilon", o.epsilon, "Target fraction");
  boost->add_option("--t", o.t, "t");
  add_overrides(boost);

  auto* layered = app.add_subcommand("layered", "Layered sets run");
  layered->add_option("--k", o.k, "Core bound");
  layered->add_option("--epsilon", o.epsilon, "Target fraction");
  layered->add_option("--lambda", o.lambda, "lambda");
  layered->add_option("--gamma", o.gamma, "gamma");
  layered->add_option("--t", o.t, "t");
  add_overrides(layered);

  auto* disjoint = app.add_subcommand("disjoint", "Balanced set or disjoint separator bundle");
  disjoint->add_option("--t", o.t, "t");
  disjoint->add_option("--epsilon", o.epsilon, "Target fraction");
  disjoint->add_option("--override-d", o.d, "Breakability bound d");
  disjoint->add_option("--override-N", o.n_sets, "Bundle size N");
  disjoint->add_option("--override-lambda", o.lambda_override, "lambda");
  add_overrides(disjoint);

  auto* decompose = app.add_subcommand("decompose", "Assemble a tree decomposition from balanced separators");
  decompose->add_option("--c", o.c, "Balance fraction in [1/2, 1)");
  decompose->add_option("--d", o.d_bound, "Alpha bound on oracle answers");

  auto* mwis = app.add_subcommand("mwis", "Maximum weight independent set");
  mwis->add_option("--method", o.method, "brute|td");
  mwis->add_option("--td", o.td, "Decomposition JSON (default: assembled)");

  auto* bench = app.add_subcommand("bench", "Property-test bench");
  bench->add_option("--suite", o.suite, "mwis-oracle|esd-mutations|layered-invariants")->required();

  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_caps(o.caps);
    if (*gen) {
      command = "gen";
      cmd_gen(s);
    } else if (*convert) {
      command = "convert";
      cmd_convert(s);
    } else if (*check) {
      if (*balanced) {
        command = "check balanced";
        cmd_check_balanced(s);
      } else if (*boosted) {
        command = "check boosted";
        cmd_check_boosted(s);
      } else if (*check_td) {
        command = "check td";
        cmd_check_td(s);
      } else if (*check_esd) {
        command = "check esd";
        cmd_check_esd(s);
      } else {
        command = "check pattern";
        cmd_check_pattern(s);
      }
    } else if (*separate) {
      command = "separate " + which;
      cmd_separate(s, which);
    } else if (*boost) {
      command = "boost";
      cmd_boost(s);
    } else if (*layered) {
      command = "layered";
      cmd_layered(s);
    } else if (*disjoint) {
      command = "disjoint";
      cmd_disjoint(s);
    } else if (*decompose) {
      command = "decompose";
      cmd_decompose(s);
    } else if (*mwis) {
      command = "mwis";
      cmd_mwis(s);
    } else {
      command = "bench";
      cmd_bench(s);
    }
  } catch (const ContractViolation& e) {
    s.check("contract", false, e.what());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  if (o.json) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(s.digest));
    Json report;
    report["command"] = command;
    report["inputs_digest"] = digest;
    report["seed"] = o.seed;
    report["mode"] = s.mode.empty() ? "default" : s.mode;
    report["verdict"] = s.ok ? "ok" : "violation";
    report["outputs"] = s.outputs;
    report["assertions"] = s.assertions;
    report["wall_clock_ms"] = elapsed;
    out << report.dump(2) << "\n";
  } else if (!s.raw.empty()) {
    out << s.raw;
    if (s.raw.back() != '\n') out << "\n";
  } else {
    out << "verdict: " << (s.ok ? "ok" : "violation") << "\n";
    print_text(out, s.outputs);
    for (const auto& a : s.assertions)
      if (!a["ok"].get<bool>())
        out << "failed: " << a["name"].get<std::string>()
            << (a.contains("detail") ? " (" + a["detail"].get<std::string>() + ")" : "") << "\n";
  }
  return s.ok ? 0 : 1;
}

}  // namespace ta::cli
