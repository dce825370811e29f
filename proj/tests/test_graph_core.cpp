#include <doctest.h>

#include <treealpha/alpha.hpp>
#include <treealpha/caps.hpp>
#include <treealpha/errors.hpp>
#include <treealpha/generators.hpp>
#include <treealpha/io.hpp>

#include "oracles.hpp"

using namespace ta;

TEST_SUITE("graph-core") {
  TEST_CASE("graph6 round trip") {
    Graph g = gnp(5, 0.5, 11);
    std::string text = emit_graph(g, GraphFormat::graph6);
    CHECK(text.size() == 3);
    CHECK(emit_graph(parse_graph(text, GraphFormat::graph6), GraphFormat::graph6) == text);
    CHECK(parse_graph("D?{", GraphFormat::graph6).order() == 5);
    CHECK(emit_graph(parse_graph("D?{", GraphFormat::graph6), GraphFormat::graph6) == "D?{");
    CHECK(emit_graph(Graph(0), GraphFormat::graph6) == "?");
    CHECK(parse_graph("?", GraphFormat::graph6).order() == 0);
    Graph k3 = complete_graph(3);
    CHECK(parse_graph(emit_graph(k3, GraphFormat::graph6), GraphFormat::graph6) == k3);
    Graph r = gnp(12, 0.4, 7);
    CHECK(parse_graph(emit_graph(r, GraphFormat::graph6), GraphFormat::graph6) == r);
    Graph big = gnp(70, 0.1, 3);
    CHECK(emit_graph(big, GraphFormat::graph6)[0] == '~');
    CHECK(parse_graph(emit_graph(big, GraphFormat::graph6), GraphFormat::graph6) == big);
  }

  TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("D?", GraphFormat::graph6), FormatError);
    CHECK_THROWS_AS(parse_graph("B~", GraphFormat::graph6), FormatError);  // padding bits set
    CHECK_THROWS_AS(parse_graph("D ?{", GraphFormat::graph6), FormatError);
  }

  TEST_CASE("edgelist parsing") {
    Graph p3 = parse_graph("0 1\n1 2", GraphFormat::edgelist);
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(parse_graph("0 0", GraphFormat::edgelist), FormatError);
    CHECK_THROWS_AS(parse_graph("0 x", GraphFormat::edgelist), FormatError);
    CHECK_THROWS_AS(parse_graph("# n=2\n0 3", GraphFormat::edgelist), FormatError);
    CHECK_THROWS_AS(parse_graph("0 1\n1 0", GraphFormat::edgelist), FormatError);
    Graph iso = parse_graph("# n=5\n0 1 # trailing\n", GraphFormat::edgelist);
    CHECK(iso.order() == 5);
    CHECK(parse_graph(emit_graph(iso, GraphFormat::edgelist), GraphFormat::edgelist) == iso);
  }

  TEST_CASE("round trip property over random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Graph g = gnp(static_cast<int>(seed % 20) + 1, 0.3, seed);
      for (auto f : {GraphFormat::graph6, GraphFormat::edgelist})
        CHECK(parse_graph(emit_graph(g, f), f) == g);
    }
  }

  TEST_CASE("weights") {
    auto w = parse_weights(R"({"0":"1/3","2":"2/3"})", 3);
    CHECK(w.mode() == WeightMode::exact);
    CHECK(w.normal());
    CHECK(w[2] == Rational(2, 3));
    CHECK(parse_weights(emit_weights(w), 3).values() == w.values());
    auto f = parse_weights(R"({"0":0.5,"1":0.5})", 2);
    CHECK(f.mode() == WeightMode::floating);
    CHECK(f.normal());
    CHECK_THROWS_AS(parse_weights(R"({"0":"3/4","1":"1/2"})", 2), FormatError);
    CHECK_THROWS_AS(parse_weights(R"({"5":"1/4"})", 2), FormatError);
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
  }

  TEST_CASE("generators") {
    Graph s1 = s_ttt(1);
    CHECK(s1.order() == 4);
    CHECK(s1.size() == 3);
    CHECK(s1 == star_graph(3));
    Graph k3 = k_gamma_2(3);
    CHECK(k3.order() == 9);
    CHECK(k3.size() == 9);
    CHECK(testing::isomorphic(wall(1), cycle_graph(6)));
    Graph w2 = wall(2);
    CHECK(w2.order() == 16);
    CHECK(w2.size() == 19);
    for (int t = 1; t <= 5; ++t) {
      Graph w = wall(t);
      CHECK(is_connected(w));
      for (int v = 0; v < w.order(); ++v) {
        CHECK(w.degree(v) >= 2);
        CHECK(w.degree(v) <= 3);
      }
    }
    CHECK(testing::girth(wall(1)) == 6);
    CHECK(testing::girth(wall(3)) == 6);
    CHECK(gnp(15, 0.3, 9) == gnp(15, 0.3, 9));
    CHECK_THROWS_AS(path_graph(0), PreconditionError);
    CHECK_THROWS_AS(gnp(4, 1.5, 0), PreconditionError);
    CHECK(generate("complete_bipartite", {{"a", 2}, {"b", 3}}) == complete_bipartite(2, 3));
  }

  TEST_CASE("line graphs") {
    CHECK(line_graph(path_graph(4)).graph == path_graph(3));
    CHECK(line_graph(star_graph(3)).graph == complete_graph(3));
    CHECK(line_graph(cycle_graph(5)).graph.size() == 5);
    CHECK(alpha_exact(line_graph(cycle_graph(5)).graph) == 2);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = gnp(10, 0.35, seed);
      LineGraph lg = line_graph(g);
      for (int x = 0; x < lg.graph.order(); ++x) {
        Edge e = lg.edge_of[x];
        CHECK(lg.graph.degree(x) == g.degree(e.u) + g.degree(e.v) - 2);
        CHECK(lg.vertex_of(e) == x);
      }
    }
  }

  TEST_CASE("subdivision") {
    CHECK(testing::isomorphic(subdivide(complete_graph(2), {{Edge(0, 1), 1}}), path_graph(3)));
    CHECK(testing::isomorphic(subdivide_all(star_graph(3), 1), s_ttt(2)));
    Graph g = gnp(9, 0.4, 2);
    CHECK(subdivide_all(g, 0) == g);
    CHECK_THROWS_AS(subdivide(path_graph(3), {{Edge(0, 2), 1}}), FormatError);
    std::map<Edge, int> counts;
    int total = 0;
    int i = 0;
    for (auto e : g.edges()) {
      counts[e] = i % 3;
      total += i % 3;
      ++i;
    }
    CHECK(subdivide(g, counts).order() == g.order() + total);
  }

  TEST_CASE("components and neighbourhoods") {
    auto parts = components(path_graph(5), {2});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet{0, 1});
    CHECK(components(cycle_graph(6)).size() == 1);
    CHECK(components(complete_bipartite(3, 3), {0, 1, 2}).size() == 3);
    CHECK(closed_nbhd(star_graph(4), {0}) == VertexSet::range(5));
    CHECK(open_nbhd(path_graph(3), {0}) == VertexSet{1});
    CHECK(closed_nbhd(path_graph(3), {}).empty());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Graph g = gnp(14, 0.2, seed);
      Rng rng(seed);
      std::vector<Vertex> pick;
      for (int v = 0; v < g.order(); ++v)
        if (uniform01(rng) < 0.3) pick.push_back(v);
      VertexSet x(pick);
      auto cells = components(g, x);
      VertexSet uni;
      for (std::size_t a = 0; a < cells.size(); ++a) {
        CHECK_FALSE(uni.intersects(cells[a]));
        uni |= cells[a];
        for (std::size_t b = a + 1; b < cells.size(); ++b) CHECK(anticomplete(g, cells[a], cells[b]));
      }
      CHECK(uni == g.vertices() - x);
      VertexSet open = open_nbhd(g, x);
      CHECK_FALSE(open.intersects(x));
      CHECK(closed_nbhd(g, x) == (x | open));
    }
  }

  TEST_CASE("induced subgraph translation") {
    Graph c = cycle_graph(6);
    auto sub = induced(c, {1, 2, 3, 5});
    CHECK(sub.graph.order() == 4);
    CHECK(sub.graph.size() == 2);
    CHECK(sub.local(5) == 3);
    CHECK(sub.local(0) == -1);
    CHECK(sub.lift({0, 3}) == VertexSet{1, 5});
  }

  TEST_CASE("alpha") {
    CHECK(alpha_exact(complete_graph(5)) == 1);
    CHECK(alpha_exact(cycle_graph(5)) == 2);
    CHECK(alpha_exact(petersen_graph()) == 4);
    CHECK(testing::naive_alpha(petersen_graph(), petersen_graph().vertices()) == 4);
    CHECK(alpha_exact(Graph(0)) == 0);
    CHECK(is_stable(petersen_graph(), max_stable_set(petersen_graph())));
    Caps tight = caps();
    tight.alpha = 5;
    CapScope scope(tight);
    CHECK_THROWS_AS(alpha_exact(path_graph(6)), CapExceeded);
    CHECK(alpha_exact(Graph(30)) == 30);  // components are solved separately
  }

  TEST_CASE("alpha agrees with subset enumeration") {
    const double ps[] = {0.1, 0.3, 0.5, 0.7};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Graph g = gnp(6 + static_cast<int>(seed % 11), ps[seed % 4], seed + 1000);
      VertexSet s = max_stable_set(g);
      CHECK(is_stable(g, s));
      CHECK(static_cast<int>(s.size()) == testing::naive_alpha(g, g.vertices()));
    }
  }

  TEST_CASE("cap overrides") {
    Caps c;
    apply_cap_overrides(c, "alpha=50,treewidth=22");
    CHECK(c.alpha == 50);
    CHECK(c.treewidth == 22);
    CHECK_THROWS(apply_cap_overrides(c, "bogus=1"));
  }
}
