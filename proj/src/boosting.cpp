#include "treealpha/boosting.hpp"

#include <cmath>

#include "treealpha/alpha.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/layered.hpp"

namespace ta {

namespace {

const Rational kHalf(1, 2);

BigValue default_threshold(int k, int t, int n) {
  const int lg = ceil_log2(n);
  return BigValue(BigInt(4)) * boosting_eta(k, t) * BigValue(BigInt(lg) * lg);
}

bool exceeds(int value, const BigValue& bound) { return !(BigInt(value) <= bound); }

int beta_of(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& eps) {
  return problematic_stats(g, w, x, eps).beta_max;
}

}  // namespace

BoostedCheck check_boosted(const Graph& g, const WeightFn& w, const VertexSet& s, const VertexSet& c,
                           const Rational& epsilon) {
  BoostedCheck r;
  r.heavy = heaviest_component(g, w, c);
  if (!r.heavy || w.leq(r.heavy->weight, kHalf)) return r;
  r.pieces = weighted_components(g, w, (g.vertices() - r.heavy->vertices) | s);
  for (const auto& p : r.pieces)
    if (w.gt(p.weight, epsilon)) r.offending.push_back(p);
  r.ok = r.offending.empty();
  return r;
}

std::vector<ProblematicPair> ProblematicStats::at(const Rational& beta_prime) const {
  std::vector<ProblematicPair> out;
  for (const auto& p : pairs)
    if (Rational(4 * p.alpha) >= 3 * beta_prime) out.push_back(p);
  return out;
}

Rational ProblematicStats::big_w(const Rational& beta_prime) const {
  Rational total = 0;
  for (const auto& p : at(beta_prime)) total += p.weight;
  return total;
}

ProblematicStats problematic_stats(const Graph& g, const WeightFn& w, const VertexSet& x_set, const Rational& epsilon) {
  const VertexSet sep = closed_nbhd(g, x_set);
  if (!check_balanced(g, w, sep, kHalf).ok)
    throw PreconditionError("problematic_stats: N[X] is not a (w,1/2)-balanced separator");
  ProblematicStats st;
  if (x_set.empty()) return st;
  for (const auto& comp : weighted_components(g, w, sep)) {
    if (!w.gt(comp.weight, epsilon)) continue;
    const VertexSet nb = open_nbhd(g, comp.vertices);
    for (auto x : x_set) {
      ProblematicPair p;
      p.x = x;
      p.component = comp.vertices;
      p.weight = comp.weight;
      p.witness = max_stable_set(g, open_nbhd(g, VertexSet{x}) & nb);
      p.alpha = static_cast<int>(p.witness.size());
      st.beta_max = std::max(st.beta_max, p.alpha);
      st.pairs.push_back(std::move(p));
    }
  }
  std::stable_sort(st.pairs.begin(), st.pairs.end(),
                   [](const ProblematicPair& a, const ProblematicPair& b) { return a.x < b.x; });
  return st;
}

BoostStepResult boost_step(const Graph& g, const WeightFn& w, const VertexSet& x_set, const Rational& beta_prime,
                           const Rational& epsilon, int k, const BreakOracle& oracle, const BoostParams& params,
                           std::span<const Vertex> origin) {
  if (k < 2) throw PreconditionError("boost_step: k must be at least 2");
  const ProblematicStats stats = problematic_stats(g, w, x_set, epsilon);
  const int beta = stats.beta_max;
  const BigValue threshold = params.threshold ? BigValue(*params.threshold) : default_threshold(k, params.t, g.order());
  if (beta == 0 || !exceeds(beta, threshold))
    throw PreconditionError("boost_step: beta(G,X) = " + std::to_string(beta) + " does not exceed the threshold " +
                            threshold.str());
  if (beta_prime < beta || beta_prime > Rational(4 * beta, 3))
    throw PreconditionError("boost_step: beta' outside [beta, 4 beta / 3]");
  BoostStepResult r;
  for (const auto& p : stats.pairs)
    if (p.alpha == beta) {
      r.pair = p;
      break;
    }
  r.stable = r.pair.witness;
  r.w_before = stats.big_w(beta_prime);

  const InducedSubgraph rest = induced(g, g.vertices() - x_set);
  const WeightFn w_stable = WeightFn::uniform_on(rest.graph.order(), rest.localize(r.stable));
  LayeredParams lp;
  lp.k = 16 * (k - 1);
  lp.epsilon = Rational(1, 8);
  lp.lambda = 6 * params.t;
  lp.gamma = 3 * params.t + 1;
  lp.t = params.t;
  lp.overrides = params.layered;
  BoostedOracle eighth = [&oracle, k](const Graph& h, const WeightFn& wh, std::span<const Vertex> o) {
    SeparatorCert cert = power_separator(h, wh, 3, oracle, k, o);
    return BoostedSeparator{cert.separator, {}, cert.core, Rational(1, 8)};
  };
  const auto rest_origin = compose_origin(origin, rest);
  LayeredOutput lay = layered_run(rest.graph, w_stable, lp, eighth, rest_origin);
  r.c = rest.lift(lay.c);

  const InducedSubgraph after = induced(g, g.vertices() - r.c);
  r.w_after = problematic_stats(after.graph, w.restricted(after), after.localize(x_set), epsilon).big_w(beta_prime);
  if (!w.leq(r.w_after, r.w_before - epsilon))
    throw ContractViolation("boost_step: W(G - C, X, beta') = " + to_string(r.w_after) + " did not drop by epsilon from " +
                            to_string(r.w_before) + " (pair x=" + std::to_string(r.pair.x) + ", |I|=" +
                            std::to_string(r.stable.size()) + ", C=" + to_string(r.c) + ")");
  return r;
}

BoostedRun boosted_separator(const Graph& g, const WeightFn& w, int k, const Rational& epsilon, const BreakOracle& oracle,
                             const BoostParams& params, std::span<const Vertex> origin) {
  if (epsilon <= 0 || epsilon > 1) throw PreconditionError("boosted_separator: epsilon must lie in (0,1]");
  BoostedRun run;
  std::vector<Vertex> own;
  if (origin.empty()) {
    own = identity_origin(g.order());
    origin = own;
  }
  const SeparatorCert cert = oracle(g, w, origin);
  if (static_cast<int>(cert.core.size()) >= k || !cert.core_based || cert.c != kHalf || !validate_cert(g, w, cert))
    throw ContractViolation("boosted_separator: oracle answer " + to_string(cert.core) + " breaks its contract");
  run.x = cert.core;
  const int n = g.order();
  run.threshold = params.threshold ? BigValue(*params.threshold) : default_threshold(k, params.t, n);
  run.beta_initial = beta_of(g, w, run.x, epsilon);
  const int outer_bound = static_cast<int>(std::ceil(std::log(std::max(n, 2)) / std::log(4.0 / 3.0))) + 1;
  const Rational ratio = Rational(k) / epsilon;
  const BigInt inner_bound = (numerator(ratio) + denominator(ratio) - 1) / denominator(ratio);

  int beta_i = run.beta_initial;
  int outer = 0;
  while (exceeds(beta_i, run.threshold)) {
    if (++outer > outer_bound)
      throw ContractViolation("boosted_separator: more than " + std::to_string(outer_bound) + " beta reductions");
    int inner = 0;
    bool cleared = false;
    while (true) {
      const InducedSubgraph cur = induced(g, g.vertices() - run.c_star);
      const WeightFn wc = w.restricted(cur);
      const VertexSet xl = cur.localize(run.x);
      const ProblematicStats st = problematic_stats(cur.graph, wc, xl, epsilon);
      const Rational big_w = st.big_w(beta_i);
      run.trace.push_back({outer, inner, st.beta_max, big_w, run.c_star.size()});
      if (big_w == 0) {
        cleared = true;
        break;
      }
      if (!exceeds(st.beta_max, run.threshold)) break;
      if (BigInt(++inner) > inner_bound)
        throw ContractViolation("boosted_separator: more than k/epsilon weight-reduction steps");
      const auto cur_origin = compose_origin(origin, cur);
      BoostStepResult step = boost_step(cur.graph, wc, xl, Rational(beta_i), epsilon, k, oracle, params, cur_origin);
      run.c_star |= cur.lift(step.c);
    }
    const InducedSubgraph cur = induced(g, g.vertices() - run.c_star);
    const int next = beta_of(cur.graph, w.restricted(cur), cur.localize(run.x), epsilon);
    if (cleared && 4 * next > 3 * beta_i)
      throw ContractViolation("boosted_separator: beta went from " + std::to_string(beta_i) + " to " +
                              std::to_string(next) + ", above 3/4");
    beta_i = next;
  }
  run.beta_final = beta_i;

  const VertexSet removed = run.c_star | closed_nbhd(g, run.x);
  for (const auto& comp : weighted_components(g, w, removed))
    if (w.gt(comp.weight, epsilon)) run.z |= open_nbhd(g, comp.vertices) - run.c_star;
  run.result = BoostedSeparator{closed_nbhd(g, run.x), run.c_star | run.z, run.x, epsilon};
  if (!check_boosted(g, w, run.result.s, run.result.c, epsilon).ok)
    throw ContractViolation("boosted_separator: (N[X], C cup Z) fails the boosted check");
  return run;
}

BoostedOracle boosted_oracle(int k, const Rational& epsilon, BreakOracle oracle, BoostParams params) {
  return [k, epsilon, oracle = std::move(oracle), params = std::move(params)](
             const Graph& g, const WeightFn& w, std::span<const Vertex> origin) {
    return boosted_separator(g, w, k, epsilon, oracle, params, origin).result;
  };
}

}  // namespace ta
