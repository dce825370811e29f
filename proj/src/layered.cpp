#include "treealpha/layered.hpp"

#include <cmath>
#include <map>

#include "treealpha/alpha.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/generators.hpp"

namespace ta {

namespace {

const Rational kHalf(1, 2);

std::optional<int> try_alpha(const Graph& g, const VertexSet& x) {
  try {
    return alpha_exact(g, x);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

// a * 2^shift <= b for nonnegative a, b without materialising huge powers.
bool shifted_leq(int a, long long shift, const BigInt& b) {
  if (a == 0) return true;
  if (shift > (1LL << 22)) return false;
  return (BigInt(a) << static_cast<unsigned>(shift)) <= b;
}

std::string layer_trace(const LayeredOutput& out) {
  std::string s;
  for (const auto& it : out.iterations) {
    s += " j=" + std::to_string(it.j) + " X=" + to_string(it.core) + " |S|=" + std::to_string(it.s.size());
    for (const auto& l : it.layers) s += " a" + std::to_string(l.i) + "=" + std::to_string(l.alpha);
    s += ";";
  }
  return s;
}

}  // namespace

VertexSet layer(const std::vector<VertexSet>& family, int i, const VertexSet& universe) {
  if (i <= 0) return universe;
  std::vector<Vertex> out;
  for (auto v : universe) {
    int count = 0;
    for (const auto& f : family) count += f.contains(v);
    if (count >= i) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet z_set(const Graph& g, const VertexSet& y, const BigValue& divisor) {
  if (divisor.is_exact() && divisor.exact() < 1) throw PreconditionError("z_set: divisor must be at least 1");
  const int alpha_y = alpha_exact(g, y);
  if (alpha_y == 0) return {};
  std::vector<Vertex> out;
  for (int z = 0; z < g.order(); ++z) {
    const int a = alpha_exact(g, open_nbhd(g, VertexSet{z}) & y);
    const bool meets = divisor.is_exact() ? BigInt(a) * divisor.exact() >= alpha_y : a >= 1;
    if (meets) out.push_back(z);
  }
  return VertexSet(std::move(out));
}

LayeredOutput layered_run(const Graph& g, const WeightFn& w, const LayeredParams& params, const BoostedOracle& oracle,
                          std::span<const Vertex> origin) {
  const int k = params.k;
  const int lambda = params.lambda;
  if (k < 1 || lambda < 1 || params.gamma < 2 || params.t < 1)
    throw PreconditionError("layered_run: k, lambda, t >= 1 and gamma >= 2 required");
  if (params.epsilon <= 0 || params.epsilon > 1) throw PreconditionError("layered_run: epsilon must lie in (0,1]");
  std::vector<Vertex> own;
  if (origin.empty()) {
    own = identity_origin(g.order());
    origin = own;
  }
  const int n = g.order();
  LayeredOutput out;
  out.default_constants = !params.overrides.any();
  out.m = params.overrides.m ? *params.overrides.m : ceil_log2(n);
  const BigValue d_ref = d_alg(k, lambda);
  out.d_alg = params.overrides.d_alg ? BigValue(*params.overrides.d_alg) : d_ref;
  out.big_t = params.overrides.big_t ? BigValue(*params.overrides.big_t)
                                     : pow(BigValue(BigInt(512)) * out.d_alg,
                                           pow(BigValue(BigInt(params.gamma)), BigValue(BigInt(2 * params.t))));
  if (out.d_alg.is_exact() && out.d_alg.exact() < 1) throw PreconditionError("layered_run: d_alg must be positive");
  const bool d_ok = !params.overrides.d_alg || (d_ref.is_exact() && d_ref.exact() <= out.d_alg);
  const bool t_ok = !params.overrides.big_t || (out.d_alg.is_exact() && out.d_alg.exact() <= out.big_t);
  out.proof_regime = d_ok && t_ok;
  const double lg = n >= 2 ? std::log2(static_cast<double>(n)) : 0.0;
  out.membership_bound = 3 * lg / (static_cast<double>(k) * lambda);
  out.membership_bound_tight = 1 + (1 + 2 * lg) / (static_cast<double>(k) * lambda);

  const long long two_k_lambda = 2LL * k * lambda;
  if (out.default_constants && (two_k_lambda >= 62 || n < (1LL << two_k_lambda))) {
    out.trivial = true;
    out.c = g.vertices();
    out.separators.assign(static_cast<std::size_t>(out.m), VertexSet{});
    out.cores = out.boosting = out.separators;
    out.alpha_c = try_alpha(g, out.c);
    return out;
  }

  VertexSet current = g.vertices();
  for (int j = 1; j <= out.m; ++j) {
    LayeredIteration it;
    it.j = j;
    it.graph = current;
    if (!current.empty()) {
      const InducedSubgraph sub = induced(g, current);
      const WeightFn ws = w.restricted(sub);
      const auto sub_origin = compose_origin(origin, sub);
      BoostedSeparator bs = oracle(sub.graph, ws, sub_origin);
      const int sn = sub.graph.order();
      auto in_range = [sn](const VertexSet& s) { return s.empty() || (s.front() >= 0 && s.ids().back() < sn); };
      if (!in_range(bs.core) || !in_range(bs.s) || !in_range(bs.c))
        throw ContractViolation("layered_run: oracle returned ids outside the graph at j=" + std::to_string(j));
      if (static_cast<int>(bs.core.size()) >= k)
        throw ContractViolation("layered_run: oracle core " + to_string(bs.core) + " has size >= k at j=" + std::to_string(j));
      const VertexSet s_local = closed_nbhd(sub.graph, bs.core);
      if (!bs.s.subset_of(s_local))
        throw ContractViolation("layered_run: oracle separator is not inside N[core] at j=" + std::to_string(j));
      if (!check_boosted(sub.graph, ws, s_local, bs.c, params.epsilon).ok)
        throw ContractViolation("layered_run: oracle answer is not a (w,eps)-boosted separator of G_" +
                                std::to_string(j - 1));
      it.core = sub.lift(bs.core);
      it.s = sub.lift(s_local);
      it.y = sub.lift(bs.c);
    }
    out.separators.push_back(it.s);
    out.cores.push_back(it.core);
    out.boosting.push_back(it.y);
    it.c = it.y;
    for (int i = 1; i <= j + 1; ++i) {
      LayerRecord rec;
      rec.i = i;
      rec.layer = layer(out.separators, i, current);
      rec.alpha = alpha_exact(g, rec.layer);
      rec.within_t = BigInt(rec.alpha) <= out.big_t;
      rec.z = current.empty() ? VertexSet{} : (z_set(g, rec.layer, out.d_alg) & current);
      rec.chosen = rec.within_t ? rec.layer : rec.z;
      if (i <= j) {
        rec.bound_checked = true;
        rec.bound_ok = shifted_leq(rec.alpha, static_cast<long long>(lambda) * k * (i - 1), BigInt(n) << (j - 1));
        if (!rec.bound_ok) {
          out.layer_bound_ok = false;
          if (out.proof_regime) {
            out.iterations.push_back(it);
            throw ContractViolation("layered_run: alpha(L_" + std::to_string(j) + "^" + std::to_string(i) +
                                    ") = " + std::to_string(rec.alpha) + " breaks the layer bound;" + layer_trace(out));
          }
        }
        it.c |= rec.chosen;
      }
      it.layers.push_back(std::move(rec));
    }
    out.c |= it.c;
    auto next = heaviest_component(g, w, (g.vertices() - current) | it.c);
    current = next ? next->vertices : VertexSet{};
    out.iterations.push_back(std::move(it));
  }

  for (std::size_t j = 0; j < out.separators.size(); ++j)
    if (!check_boosted(g, w, out.separators[j], out.c, params.epsilon).ok) {
      out.boosted_ok = false;
      throw ContractViolation("layered_run: (S_" + std::to_string(j + 1) + ", C) is not boosted in G");
    }
  out.alpha_c = try_alpha(g, out.c);
  auto heavy = heaviest_component(g, w, out.c);
  if (heavy && w.gt(heavy->weight, kHalf)) {
    out.heavy_component = true;
    for (auto v : heavy->vertices) {
      int count = 0;
      for (const auto& s : out.separators) count += s.contains(v);
      out.max_membership_heavy = std::max(out.max_membership_heavy, count);
    }
  }
  for (std::size_t j = 0; j < out.cores.size(); ++j)
    for (auto x : out.cores[j]) {
      int count = 0;
      for (std::size_t i = 0; i < j; ++i) count += out.separators[i].contains(x);
      out.max_core_membership = std::max(out.max_core_membership, count);
    }
  if (out.default_constants && (out.max_membership_heavy > out.membership_bound || out.max_core_membership > out.membership_bound))
    throw ContractViolation("layered_run: a vertex lies in more than 3 log n / (k lambda) separators;" + layer_trace(out));
  return out;
}

std::vector<int> anticomplete_subfamily(const Graph& g, const std::vector<VertexSet>& ys, int n_target) {
  const int m = static_cast<int>(ys.size());
  if (n_target <= 0) return {};
  std::vector<std::vector<int>> conflict(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!anticomplete(g, ys[i], ys[j])) {
        conflict[i].push_back(j);
        conflict[j].push_back(i);
      }
  // Degeneracy order: repeatedly drop a vertex of minimum remaining degree.
  std::vector<int> degree(static_cast<std::size_t>(m));
  std::vector<char> gone(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) degree[i] = static_cast<int>(conflict[i].size());
  std::vector<int> order;
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int i = 0; i < m; ++i)
      if (!gone[i] && (best < 0 || degree[i] < degree[best])) best = i;
    gone[best] = 1;
    order.push_back(best);
    for (auto u : conflict[best])
      if (!gone[u]) --degree[u];
  }
  std::vector<int> colour(static_cast<std::size_t>(m), -1);
  int colours = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<char> used(static_cast<std::size_t>(colours + 1), 0);
    for (auto u : conflict[*it])
      if (colour[u] >= 0) used[colour[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    colour[*it] = c;
    colours = std::max(colours, c + 1);
  }
  std::vector<int> best_class;
  for (int c = 0; c < colours; ++c) {
    std::vector<int> cls;
    for (int i = 0; i < m; ++i)
      if (colour[i] == c) cls.push_back(i);
    if (cls.size() > best_class.size()) best_class = cls;
  }
  if (static_cast<int>(best_class.size()) < n_target)
    throw PreconditionError("anticomplete_subfamily: found " + std::to_string(best_class.size()) +
                            " pairwise anticomplete sets, need " + std::to_string(n_target));
  best_class.resize(static_cast<std::size_t>(n_target));
  return best_class;
}

VertexSet t_covered(const Graph& g, const std::vector<VertexSet>& ys, int t) {
  std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
  for (const auto& y : ys)
    for (auto v : closed_nbhd(g, y)) ++count[v];
  std::vector<Vertex> out;
  for (int v = 0; v < g.order(); ++v)
    if (count[v] >= t) out.push_back(v);
  return VertexSet(std::move(out));
}

DisjointResult disjoint_separators(const Graph& g, const WeightFn& w, const DisjointParams& params,
                                   const BreakOracle& oracle, const BoostedOracle& boosted) {
  if (params.t < 1) throw PreconditionError("disjoint_separators: t must be positive");
  DisjointResult r;
  if (params.d) {
    r.d = *params.d;
  } else {
    const BigValue d = d_of_t(params.t);
    if (!d.is_exact() || d.exact() > 1'000'000) throw PreconditionError("disjoint_separators: d(t) too large");
    r.d = d.exact().convert_to<int>();
  }
  if (r.d < 2) throw PreconditionError("disjoint_separators: d must be at least 2");
  r.n_sets = params.n_sets ? *params.n_sets : 8 * params.t * params.t * r.d;
  r.lambda = params.lambda ? *params.lambda : 3 * r.n_sets;
  LayeredParams lp;
  lp.k = r.d;
  lp.epsilon = params.epsilon;
  lp.lambda = r.lambda;
  lp.gamma = 3 * params.t + 1;
  lp.t = params.t;
  lp.overrides = params.layered;
  const BoostedOracle provider = boosted ? boosted : boosted_oracle(r.d, params.epsilon, oracle, params.boost);
  r.layered = layered_run(g, w, lp, provider);
  r.c = r.layered.c;
  auto g_prime = heaviest_component(g, w, r.c);
  if (!g_prime || w.leq(g_prime->weight, kHalf)) {
    r.balanced = true;
    r.x = r.c;
    r.heavy = g_prime;
    r.alpha_x = try_alpha(g, r.x);
    return r;
  }
  try {
    r.indices = anticomplete_subfamily(g, r.layered.cores, r.n_sets);
  } catch (const PreconditionError& e) {
    throw ContractViolation(std::string("disjoint_separators: ") + e.what());
  }
  for (auto i : r.indices) r.ys.push_back(r.layered.cores[i]);
  r.z = t_covered(g, r.ys, params.t);
  r.x = r.c | r.z;
  r.alpha_x = try_alpha(g, r.x);
  r.heavy = heaviest_component(g, w, r.x);
  if (!r.heavy || w.leq(r.heavy->weight, kHalf)) {
    r.balanced = true;
    return r;
  }
  const VertexSet& d_set = r.heavy->vertices;
  const InducedSubgraph dsub = induced(g, d_set);
  const WeightFn wd = w.restricted(dsub);
  std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < r.ys.size(); ++i) {
    if (static_cast<int>(r.ys[i].size()) >= r.d) throw ContractViolation("disjoint_separators: |Y_i| >= d");
    for (std::size_t j = i + 1; j < r.ys.size(); ++j)
      if (!anticomplete(g, r.ys[i], r.ys[j])) throw ContractViolation("disjoint_separators: Y_i not anticomplete");
    const VertexSet sep = closed_nbhd(g, r.ys[i]);
    if (!check_balanced(dsub.graph, wd, dsub.localize(sep), params.epsilon).ok)
      throw ContractViolation("disjoint_separators: N[Y_" + std::to_string(i + 1) + "] cap D is not (w,eps)-balanced in D");
    for (auto v : sep) ++count[v];
  }
  for (auto v : d_set)
    if (count[v] > params.t) throw ContractViolation("disjoint_separators: vertex " + std::to_string(v) + " in more than t sets");
  return r;
}

SampleReport sample_witnesses(const Graph& g, const WeightFn& w, int mu, std::uint64_t seed,
                              const std::vector<VertexSet>& separators) {
  const int n = g.order();
  if (mu < 1) throw PreconditionError("sample_witnesses: mu must be positive");
  if (mu > n) throw PreconditionError("sample_witnesses: mu exceeds the number of vertices");
  std::vector<double> weight(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (w[v] <= 0) throw PreconditionError("sample_witnesses: weights must be positive");
    weight[v] = to_double(w[v]);
  }
  Rng rng(seed);
  SampleReport r;
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  for (int draw = 0; draw < mu; ++draw) {
    double total = 0;
    for (int v = 0; v < n; ++v)
      if (!taken[v]) total += weight[v];
    double u = uniform01(rng) * total;
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      pick = v;
      if (u < weight[v]) break;
      u -= weight[v];
    }
    taken[pick] = 1;
    r.sample.push_back(pick);
  }
  std::sort(r.sample.begin(), r.sample.end());
  const VertexSet sample(r.sample);
  r.stable = is_stable(g, sample);
  int good = 0;
  for (const auto& s : separators) {
    bool ok = true;
    for (const auto& comp : components(g, s))
      if ((comp & sample).size() > 1) ok = false;
    r.separated.push_back(ok);
    good += ok;
  }
  r.fraction = separators.empty() ? 1.0 : static_cast<double>(good) / static_cast<double>(separators.size());
  return r;
}

}  // namespace ta
