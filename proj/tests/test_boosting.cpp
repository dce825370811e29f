#include <doctest.h>

#include <treealpha/alpha.hpp>
#include <treealpha/boosting.hpp>
#include <treealpha/errors.hpp>
#include <treealpha/generators.hpp>
#include <treealpha/instances.hpp>

#include "oracles.hpp"

using namespace ta;

namespace {

const Rational kHalf(1, 2);

// x = 0 joined to a stable set 1..spokes; spoke j hangs off vertex 3(j-1) of a path B on path_len vertices.
// B carries b_weight, the rest is spread over x and the spokes.
struct Gadget {
  Graph g;
  WeightFn w;
  VertexSet b;
};

Gadget star_gadget(int spokes, int path_len, const Rational& b_weight) {
  std::vector<Edge> es;
  const int first = spokes + 1;
  for (int j = 1; j <= spokes; ++j) {
    es.emplace_back(0, j);
    es.emplace_back(j, first + 3 * (j - 1));
  }
  for (int i = 0; i + 1 < path_len; ++i) es.emplace_back(first + i, first + i + 1);
  const int n = first + path_len;
  std::vector<Rational> w(static_cast<std::size_t>(n));
  std::vector<Vertex> b;
  for (int v = 0; v < n; ++v) {
    if (v >= first) {
      w[v] = b_weight / path_len;
      b.push_back(v);
    } else {
      w[v] = (1 - b_weight) / first;
    }
  }
  return {Graph(n, es), WeightFn(std::move(w)), VertexSet(std::move(b))};
}

// beta by brute force over components and vertices of X.
int naive_beta(const Graph& g, const WeightFn& w, const VertexSet& x, const Rational& eps) {
  int best = 0;
  for (const auto& comp : components(g, closed_nbhd(g, x))) {
    if (w.of(comp) <= eps) continue;
    VertexSet nb;
    for (int v = 0; v < g.order(); ++v)
      if (!comp.contains(v))
        for (auto u : comp)
          if (g.adjacent(u, v)) nb |= VertexSet{v};
    for (auto xv : x) {
      VertexSet common;
      for (auto v : nb)
        if (g.adjacent(xv, v)) common |= VertexSet{v};
      best = std::max(best, testing::naive_alpha(g, common));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("boosting") {
  TEST_CASE("check_boosted examples") {
    Graph g = gnp_connected(10, 0.3, 4);
    auto w = WeightFn::uniform(10);
    CHECK(check_boosted(g, w, {}, g.vertices(), Rational(1, 10)).ok);
    auto bad = check_boosted(g, w, {}, {}, Rational(1, 2));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.offending.size() == 1);
    CHECK(bad.offending[0].weight == 1);
    CHECK(check_boosted(g, w, {}, {}, Rational(1)).ok);

    auto cert = min_core_separator(path_graph(9), WeightFn::uniform(9), 2, Rational(1, 2));
    REQUIRE(cert);
    CHECK(check_boosted(path_graph(9), WeightFn::uniform(9), cert->separator, {}, Rational(1, 2)).ok);
    CHECK_FALSE(check_boosted(path_graph(9), WeightFn::uniform(9), cert->separator, {}, Rational(1, 4)).ok);
  }

  TEST_CASE("check_boosted at one half agrees with check_balanced on the heavy component") {
    Rng rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = uniform_int(rng, 4, 12);
      Graph g = gnp(n, 0.3, 500 + trial);
      WeightFn w = random_rational_weights(n, rng);
      std::vector<Vertex> s, c;
      for (int v = 0; v < n; ++v) {
        if (uniform01(rng) < 0.2) s.push_back(v);
        if (uniform01(rng) < 0.15) c.push_back(v);
      }
      const VertexSet sv(s), cv(c);
      auto heavy = heaviest_component(g, w, cv);
      bool expect = true;
      if (heavy && heavy->weight > kHalf) {
        auto sub = induced(g, heavy->vertices);
        expect = check_balanced(sub.graph, w.restricted(sub), sub.localize(sv), kHalf).ok;
      }
      CHECK(check_boosted(g, w, sv, cv, kHalf).ok == expect);
    }
  }

  TEST_CASE("problematic_stats examples") {
    Graph p7 = path_graph(7);
    auto st = problematic_stats(p7, WeightFn::uniform(7), VertexSet{3}, Rational(1, 2));
    CHECK(st.beta_max == 0);
    CHECK(st.big_w(1) == 0);
    Graph pair = disjoint_union(path_graph(3), path_graph(3));
    CHECK(problematic_stats(pair, WeightFn::uniform(6), {}, Rational(1, 10)).beta_max == 0);
    CHECK_THROWS_AS(problematic_stats(p7, WeightFn::uniform(7), VertexSet{0}, Rational(1, 10)), PreconditionError);

    auto gad = star_gadget(5, 14, Rational(45, 100));
    auto gs = problematic_stats(gad.g, gad.w, VertexSet{0}, Rational(1, 10));
    CHECK(gs.beta_max == 5);
    CHECK(gs.beta_max == naive_beta(gad.g, gad.w, VertexSet{0}, Rational(1, 10)));
    REQUIRE(gs.pairs.size() == 1);
    CHECK(gs.pairs[0].component == gad.b);
    CHECK(is_stable(gad.g, gs.pairs[0].witness));
    CHECK(gs.at(Rational(20, 3)).size() == 1);
    CHECK(gs.at(Rational(7)).empty());
    CHECK(gs.big_w(Rational(20, 3)) == Rational(45, 100));
  }

  TEST_CASE("problematic_stats matches brute force and is monotone") {
    Rng rng(77);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
      const int n = uniform_int(rng, 6, 13);
      Graph g = gnp(n, 0.3, 900 + trial);
      WeightFn w = random_rational_weights(n, rng);
      auto cert = min_core_separator(g, w, 3, kHalf);
      if (!cert) continue;
      ++checked;
      const Rational eps(uniform_int(rng, 1, 4), 10);
      auto st = problematic_stats(g, w, cert->core, eps);
      CHECK(st.beta_max == naive_beta(g, w, cert->core, eps));
      std::size_t prev = st.pairs.size() + 1;
      for (int q = 0; q <= 4 * st.beta_max + 4; ++q) {
        const auto here = st.at(Rational(q, 2)).size();
        CHECK(here <= prev);
        prev = here;
      }
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("boost_step clears the gadget") {
    auto gad = star_gadget(5, 14, Rational(45, 100));
    BoostParams params;
    params.threshold = BigInt(2);
    const Rational eps(1, 10);
    auto r = boost_step(gad.g, gad.w, VertexSet{0}, Rational(5), eps, 2, min_core_oracle(2), params);
    CHECK_FALSE(r.c.contains(0));
    CHECK(r.stable.size() == 5);
    CHECK(r.w_before == Rational(45, 100));
    CHECK(r.w_after == 0);
    auto rest = induced(gad.g, gad.g.vertices() - r.c);
    CHECK(problematic_stats(rest.graph, gad.w.restricted(rest), rest.localize({0}), eps).big_w(5) == r.w_after);
  }

  TEST_CASE("boost_step with toy layered constants") {
    auto gad = star_gadget(5, 14, Rational(45, 100));
    BoostParams params;
    params.threshold = BigInt(2);
    params.layered.d_alg = BigInt(1);
    params.layered.big_t = BigInt(100);
    const Rational eps(1, 10);
    auto r = boost_step(gad.g, gad.w, VertexSet{0}, Rational(5), eps, 2, min_core_oracle(2), params);
    CHECK_FALSE(r.c.contains(0));
    CHECK(r.w_after <= r.w_before - eps);

    // With T below every layer's alpha the layers are replaced by empty Z sets and the drop is not achieved.
    params.layered.big_t = BigInt(1);
    try {
      boost_step(gad.g, gad.w, VertexSet{0}, Rational(5), eps, 2, min_core_oracle(2), params);
      FAIL("expected a verification failure");
    } catch (const ContractViolation& e) {
      CHECK(std::string(e.what()).find("did not drop") != std::string::npos);
    }
  }

  TEST_CASE("boost_step preconditions") {
    auto gad = star_gadget(5, 14, Rational(45, 100));
    BoostParams params;
    params.threshold = BigInt(2);
    const Rational eps(1, 10);
    CHECK_THROWS_AS(boost_step(gad.g, gad.w, VertexSet{0}, Rational(7), eps, 2, min_core_oracle(2), params),
                    PreconditionError);
    params.threshold = BigInt(5);
    CHECK_THROWS_AS(boost_step(gad.g, gad.w, VertexSet{0}, Rational(5), eps, 2, min_core_oracle(2), params),
                    PreconditionError);
    BoostParams defaults;
    CHECK_THROWS_AS(boost_step(gad.g, gad.w, VertexSet{0}, Rational(5), eps, 2, min_core_oracle(2), defaults),
                    PreconditionError);
  }

  TEST_CASE("boosted_separator examples") {
    BoostParams params;
    Graph two = disjoint_union(path_graph(5), path_graph(5));
    auto light = boosted_separator(two, WeightFn::uniform(10), 2, Rational(1, 4), min_core_oracle(2), params);
    CHECK(light.result.c.empty());
    CHECK(check_boosted(two, WeightFn::uniform(10), light.result.s, light.result.c, Rational(1, 4)).ok);

    Graph p20 = path_graph(20);
    auto w20 = WeightFn::uniform(20);
    auto run = boosted_separator(p20, w20, 2, Rational(1, 4), min_core_oracle(2), params);
    CHECK(run.x.size() == 1);
    CHECK(run.result.s == closed_nbhd(p20, run.x));
    auto verdict = check_boosted(p20, w20, run.result.s, run.result.c, Rational(1, 4));
    CHECK(verdict.ok);
    if (verdict.heavy && verdict.heavy->weight > kHalf)
      for (const auto& p : verdict.pieces) CHECK(p.weight <= Rational(1, 4));
  }

  TEST_CASE("boosted_separator puts a pendant blob's neighbourhood in Z") {
    // Path 0..8 and a 4-clique blob 9..12 hanging off vertex 8.
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(8, 9);
    for (int a = 9; a < 13; ++a)
      for (int b = a + 1; b < 13; ++b) es.emplace_back(a, b);
    Graph g(13, es);
    std::vector<Rational> wv(13, Rational(1, 40));
    for (int v = 9; v < 13; ++v) wv[v] = Rational(3, 40);
    wv[4] = kHalf;
    WeightFn w(wv);
    REQUIRE(w.normal());
    const Rational eps(1, 4);
    auto run = boosted_separator(g, w, 2, eps, min_core_oracle(2), {});
    REQUIRE(run.x.size() == 1);
    VertexSet expect;
    for (const auto& comp : components(g, closed_nbhd(g, run.x)))
      if (w.of(comp) > eps) {
        CHECK(comp.contains(9));
        expect |= open_nbhd(g, comp);
      }
    CHECK_FALSE(expect.empty());
    CHECK(run.z == expect);
    CHECK(check_boosted(g, w, run.result.s, run.result.c, eps).ok);
  }

  TEST_CASE("boosted_separator runs the reduction loops") {
    auto gad = star_gadget(5, 14, Rational(45, 100));
    BoostParams params;
    params.threshold = BigInt(2);
    const Rational eps(1, 10);
    // Prefers the hub vertex whenever it is present and balances.
    BreakOracle hub = [](const Graph& g, const WeightFn& w, std::span<const Vertex> origin) {
      for (int v = 0; v < g.order(); ++v)
        if (origin[v] == 0) {
          auto cert = make_core_cert(g, w, VertexSet{v}, kHalf);
          if (validate_cert(g, w, cert)) return cert;
        }
      return min_core_oracle(2)(g, w, origin);
    };
    auto run = boosted_separator(gad.g, gad.w, 2, eps, hub, params);
    CHECK(run.beta_initial == 5);
    CHECK(run.beta_final <= 2);
    CHECK_FALSE(run.trace.empty());
    CHECK_FALSE(run.c_star.contains(0));
    CHECK(check_boosted(gad.g, gad.w, run.result.s, run.result.c, eps).ok);
  }

  TEST_CASE("boosted_separator always passes check_boosted") {
    Rng rng(5);
    int runs = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const int n = uniform_int(rng, 6, 14);
      Graph g = random_connected(n, 0.25, rng);
      WeightFn w = random_rational_weights(n, rng);
      const Rational eps(uniform_int(rng, 1, 5), 10);
      if (!min_core_separator(g, w, 3, kHalf)) continue;
      auto run = boosted_separator(g, w, 3, eps, min_core_oracle(3), {});
      CHECK(check_boosted(g, w, run.result.s, run.result.c, eps).ok);
      CHECK(run.result.s == closed_nbhd(g, run.x));
      CHECK(run.x.size() < 3);
      ++runs;
    }
    CHECK(runs >= 40);
  }

  TEST_CASE("oracle contract breach is reported") {
    BreakOracle liar = [](const Graph& g, const WeightFn& w, std::span<const Vertex>) {
      return make_core_cert(g, w, VertexSet{0, 1, 2}, Rational(1, 2));
    };
    CHECK_THROWS_AS(boosted_separator(path_graph(9), WeightFn::uniform(9), 2, Rational(1, 4), liar, {}),
                    ContractViolation);
  }
}
