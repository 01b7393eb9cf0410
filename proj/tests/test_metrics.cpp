#include <doctest.h>

#include <random>

#include "grasp/metrics.hpp"
#include "grasp/spectral.hpp"
#include "oracles.hpp"

using namespace grasp;

TEST_CASE("diameter") {
  for (int n = 3; n <= 6; ++n)
    CHECK(diameter(oracles::complete_graph(n)) == doctest::Approx(1.0));
  CHECK(diameter(oracles::path_graph(3)) == doctest::Approx(2.0));
  // disconnected: max over finite pairs
  Graph split(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(diameter(split) == doctest::Approx(2.0));
}

TEST_CASE("modularity") {
  auto k4 = modularity(oracles::complete_graph(4));
  CHECK(k4.q == doctest::Approx(0.0).epsilon(1e-9));

  Graph two_k3(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  auto r = modularity(two_k3);
  CHECK(r.q == doctest::Approx(0.5));
  CHECK(r.partition.size() == 2);
  CHECK(modularity_of_partition(two_k3, {{0, 1, 2}, {3, 4, 5}}) ==
        doctest::Approx(0.5));

  SUBCASE("greedy result at least as good as the trivial partition") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = oracles::random_graph(rng, 3 + int(rng() % 8), 0.4, true);
      auto m = modularity(g);
      std::vector<int> all(g.num_nodes());
      std::iota(all.begin(), all.end(), 0);
      CHECK(m.q >= modularity_of_partition(g, {all}) - 1e-9);
      CHECK(m.q == doctest::Approx(modularity_of_partition(g, m.partition)));
    }
  }
}

TEST_CASE("assortativity") {
  for (int n = 3; n <= 8; ++n)
    CHECK_FALSE(assortativity(oracles::complete_graph(n)).has_value());

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto r = assortativity(star);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(-1.0));
}

TEST_CASE("clustering coefficient") {
  for (int n = 3; n <= 8; ++n)
    CHECK(clustering_coefficient(oracles::complete_graph(n)) ==
          doctest::Approx(1.0));
  CHECK(clustering_coefficient(oracles::path_graph(3)) ==
        doctest::Approx(0.0));
  // triangle with a pendant: c = (1,1,1/3,0)/4
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(clustering_coefficient(g) == doctest::Approx((1 + 1 + 1.0 / 3) / 4));
}

TEST_CASE("forman curvature") {
  auto k3 = forman_curvature(oracles::complete_graph(3));
  for (const auto& [e, v] : k3.per_edge) CHECK(v == doctest::Approx(0.0));

  auto p3 = forman_curvature(oracles::path_graph(3));
  CHECK(p3.per_edge.at({0, 1}) == doctest::Approx(1.0));
  CHECK(p3.mean == doctest::Approx(1.0));

  Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto s = forman_curvature(star);
  for (const auto& [e, v] : s.per_edge) CHECK(v == doctest::Approx(-2.0));
}

TEST_CASE("betweenness") {
  auto p3 = betweenness(oracles::path_graph(3));
  CHECK(p3.per_node[0] == doctest::Approx(0.0));
  CHECK(p3.per_node[1] == doctest::Approx(1.0));
  CHECK(p3.per_node[2] == doctest::Approx(0.0));
  CHECK(p3.mean == doctest::Approx(1.0 / 3));

  for (int n = 3; n <= 8; ++n) {
    auto r = betweenness(oracles::complete_graph(n));
    CHECK(r.mean == doctest::Approx(0.0));
  }

  SUBCASE("matches path enumeration oracle") {
    std::mt19937_64 rng(9);
    int cases = 0;
    while (cases < 200) {
      int n = 3 + static_cast<int>(rng() % 5);
      Graph g = oracles::random_graph(rng, n, 0.5, true);
      auto got = betweenness(g);
      auto want = oracles::betweenness_enumeration(g);
      for (int v = 0; v < n; ++v)
        CHECK(got.per_node[v] == doctest::Approx(want[v]).epsilon(1e-9));
      ++cases;
    }
  }
}

TEST_CASE("compute_all small graphs") {
  auto k3 = compute_all(oracles::complete_graph(3));
  CHECK(*k3.diameter == doctest::Approx(1.0));
  CHECK(*k3.resistance_total == doctest::Approx(2.0));
  CHECK(*k3.clustering == doctest::Approx(1.0));
  CHECK(*k3.forman_mean == doctest::Approx(0.0));
  CHECK(*k3.betweenness_mean == doctest::Approx(0.0));
  CHECK_FALSE(k3.assortativity.has_value());
  CHECK(*k3.spectral_gap == doctest::Approx(1.5));
  CHECK(*k3.modularity == doctest::Approx(0.0).epsilon(1e-9));

  auto p3 = compute_all(oracles::path_graph(3));
  CHECK(*p3.diameter == doctest::Approx(2.0));
  CHECK(*p3.resistance_total == doctest::Approx(4.0));
  CHECK(*p3.clustering == doctest::Approx(0.0));
  CHECK(*p3.forman_mean == doctest::Approx(1.0));
  CHECK(*p3.betweenness_mean == doctest::Approx(1.0 / 3));

  auto e = compute_all(Graph(2, {{0, 1}}));
  CHECK(*e.diameter == doctest::Approx(1.0));
  CHECK(*e.resistance_total == doctest::Approx(1.0));
  CHECK(*e.clustering == doctest::Approx(0.0));
  CHECK_FALSE(e.betweenness_mean.has_value());  // needs n >= 3
}

TEST_CASE("complete graph battery") {
  for (int n = 3; n <= 12; ++n) {
    Graph g = oracles::complete_graph(n);
    auto m = compute_all(g);
    CHECK(*m.diameter == doctest::Approx(1.0));
    CHECK(*m.clustering == doctest::Approx(1.0));
    CHECK(*m.betweenness_mean == doctest::Approx(0.0));
    CHECK(*m.resistance_total == doctest::Approx(double(n - 1)).epsilon(1e-8));
    CHECK(*m.spectral_gap ==
          doctest::Approx(double(n) / (n - 1)).epsilon(1e-8));
    CHECK_FALSE(m.assortativity.has_value());
    auto f = forman_curvature(g);
    for (const auto& [e, v] : f.per_edge) CHECK(v == 4.0 - 2.0 * (n - 1));
  }
}

TEST_CASE("summarize") {
  DatasetBundle bundle;
  bundle.graphs = {oracles::path_graph(3), oracles::path_graph(3)};
  bundle.labels = {0, 0};
  auto s = summarize(bundle);
  CHECK(s.entries.at("diameter").mean == doctest::Approx(2.0));
  CHECK(s.entries.at("diameter").std_dev == doctest::Approx(0.0));

  DatasetBundle mixed;
  mixed.graphs = {oracles::path_graph(3), oracles::complete_graph(3)};
  mixed.labels = {0, 1};
  auto s2 = summarize(mixed);
  CHECK(s2.entries.at("diameter").mean == doctest::Approx(1.5));
  CHECK(s2.entries.at("diameter").std_dev == doctest::Approx(0.5));
  // assortativity is undefined on K3 only
  CHECK(s2.entries.at("assortativity").undefined_count == 1);
  CHECK(s2.per_graph.at("diameter").size() == 2);
}

TEST_CASE("percentage change") {
  CHECK(*percentage_change(8.218, 8.027) == doctest::Approx(-2.324).epsilon(1e-3));
  CHECK_FALSE(percentage_change(0.0, 1.0).has_value());
  CHECK(*percentage_change(2.0, 2.0) == doctest::Approx(0.0));

  DatasetBundle bundle;
  bundle.graphs = {oracles::path_graph(3)};
  bundle.labels = {0};
  auto s = summarize(bundle);
  auto pc = percentage_change(s, s);
  for (const auto& name : metric_names()) {
    if (!pc.at(name).has_value()) continue;
    CHECK(*pc.at(name) == doctest::Approx(0.0));
  }
  // clustering mean is 0 on P3, so the ratio is undefined
  CHECK_FALSE(pc.at("clustering").has_value());
}
