#include "treealpha/bench.hpp"

#include <algorithm>
#include <array>

#include "treealpha/boosting.hpp"
#include "treealpha/errors.hpp"
#include "treealpha/esd_fixtures.hpp"
#include "treealpha/generators.hpp"
#include "treealpha/instances.hpp"
#include "treealpha/layered.hpp"
#include "treealpha/treedecomp.hpp"

namespace ta {

namespace {

std::uint64_t case_seed(std::uint64_t seed, int index) { return seed * 1'000'003ULL + static_cast<std::uint64_t>(index); }

BenchCase mwis_case(std::uint64_t seed) {
  Rng rng(seed);
  constexpr std::array<double, 3> kDensities{0.2, 0.4, 0.6};
  const int n = uniform_int(rng, 1, 14);
  const double p = kDensities[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
  Graph g = gnp(n, p, rng());
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = uniform_int(rng, 0, 100);
  const bool single = uniform_int(rng, 0, 1) == 0;
  const TreeDecomposition td = single ? TreeDecomposition::single_bag(g.vertices()) : assemble_td(g, treewidth_set_oracle()).td;
  const MwisResult brute = mwis_brute(g, w);
  const MwisResult dp = mwis_td(g, w, td);
  BenchCase c{seed, dp.value == brute.value, ""};
  c.detail = "n=" + std::to_string(n) + " p=" + std::to_string(p).substr(0, 3) + (single ? " single-bag" : " assembled") +
             " brute=" + std::to_string(static_cast<long long>(brute.value)) +
             " td=" + std::to_string(static_cast<long long>(dp.value));
  return c;
}

BenchCase layered_case(std::uint64_t seed) {
  Rng rng(seed);
  const int k = 3;
  LayeredParams p{.k = k, .epsilon = Rational(1, 4), .lambda = 1, .gamma = 3, .t = 1};
  p.overrides.d_alg = BigInt(k) << k;
  p.overrides.big_t = *p.overrides.d_alg;
  for (int attempt = 0;; ++attempt) {
    const int n = uniform_int(rng, 8, 20);
    Graph g = random_connected(n, 0.15, rng);
    WeightFn w = sample_weights(g, static_cast<WeightFamily>(uniform_int(rng, 0, 3)), rng);
    if (!min_core_separator(g, w, k, Rational(1, 2))) continue;
    try {
      auto out = layered_run(g, w, p, boosted_oracle(k, p.epsilon, min_core_oracle(k), {}));
      int checked = 0;
      for (const auto& it : out.iterations)
        for (const auto& l : it.layers) checked += l.bound_checked;
      BenchCase c{seed, out.layer_bound_ok && out.boosted_ok && out.proof_regime, ""};
      c.detail = "n=" + std::to_string(n) + " layer checks=" + std::to_string(checked) +
                 " |C|=" + std::to_string(out.c.size()) + " max heavy membership=" +
                 std::to_string(out.max_membership_heavy) + " max core membership=" +
                 std::to_string(out.max_core_membership);
      return c;
    } catch (const std::exception& e) {
      return {seed, false, e.what()};
    }
  }
}

}  // namespace

std::vector<std::string> bench_suites() { return {"mwis-oracle", "esd-mutations", "layered-invariants"}; }

BenchSummary run_bench(const std::string& suite, std::uint64_t seed) {
  BenchSummary s{suite, seed, 0, 0, {}};
  if (suite == "mwis-oracle") {
    for (int i = 0; i < 300; ++i) s.cases.push_back(mwis_case(case_seed(seed, i)));
  } else if (suite == "layered-invariants") {
    for (int i = 0; i < 50; ++i) s.cases.push_back(layered_case(case_seed(seed, i)));
  } else if (suite == "esd-mutations") {
    for (const auto& f : esd_fixtures()) {
      const auto base = validate_esd(f.esd);
      s.cases.push_back({seed, base.ok, f.name + ": fixture valid"});
      for (const auto& m : esd_mutations(f.esd)) {
        const auto v = validate_esd(m.esd);
        const bool attributed = !v.ok && v.has_bullet(m.bullet);
        s.cases.push_back({seed, attributed, f.name + ": " + m.description + " -> condition " + std::to_string(m.bullet)});
      }
    }
  } else {
    throw PreconditionError("unknown bench suite: " + suite);
  }
  for (const auto& c : s.cases) (c.pass ? s.passed : s.failed) += 1;
  return s;
}

}  // namespace ta
