#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "stardecomp/density.hpp"
#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"

using namespace stardecomp;
using test_helpers::complete;
using test_helpers::cycle;
using test_helpers::make_graph;
using test_helpers::path;
using test_helpers::petersen;
using test_helpers::spider;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("known exact values") {
  CHECK(mad_exact(cycle(5)).value == Rational(2));
  CHECK(mad_exact(path(4)).value == Rational(3, 2));
  CHECK(mad_exact(complete(4)).value == Rational(3));
  CHECK(mad_exact(make_graph(4, {})).value == Rational(0));
  CHECK(mad_exact(path(1)).value == Rational(0));
  CHECK(mad_exact(cycle(6)).value == Rational(2));
  CHECK(mad_exact(petersen()).value == Rational(3));
  CHECK(mad_exact(spider({1, 1, 1, 1, 1})).value == Rational(5, 3));
  CHECK_THROWS_AS(mad_exact(Graph(0)), std::invalid_argument);
}

TEST_CASE("witness identifies the dense core") {
  Graph g = complete(4);
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.add_edge(0, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  auto r = mad_exact(g);
  CHECK(r.value == Rational(3));
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
  CHECK(subgraph_mad(g, r.witness) == r.value);
}

TEST_CASE("witness reproduces value on assorted graphs") {
  std::vector<Graph> gs;
  gs.push_back(cycle(5));
  gs.push_back(path(7));
  gs.push_back(petersen());
  gs.push_back(spider({2, 3, 1}));
  gs.push_back(make_graph(1, {}));
  for (const auto& g : gs) {
    auto r = mad_exact(g);
    CHECK(subgraph_mad(g, r.witness) == r.value);
  }
}

TEST_CASE("bruteforce known values") {
  auto r = mad_bruteforce(cycle(5));
  CHECK(r.value == Rational(2));
  CHECK(r.witness.size() == 5);
  CHECK(mad_bruteforce(spider({1, 1, 1, 1, 1})).value == Rational(5, 3));
  CHECK_THROWS_AS(mad_bruteforce(complete(17)), std::invalid_argument);
  CHECK_THROWS_AS(mad_bruteforce(Graph(0)), std::invalid_argument);
}

TEST_CASE("exact matches bruteforce on random graphs") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> size(1, 12);
  const double probs[] = {0.15, 0.3, 0.5};
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, size(rng), probs[trial % 3]);
    auto a = mad_exact(g);
    auto b = mad_bruteforce(g);
    REQUIRE(a.value == b.value);
    if (g.edge_count() > 0) {
      CHECK(subgraph_mad(g, a.witness) == a.value);
      CHECK(subgraph_mad(g, b.witness) == b.value);
    }
  }
}

TEST_CASE("mad monotone under induced subgraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 14, 0.3);
    Rational whole = mad_exact(g).value;
    Graph h = g;
    std::uniform_int_distribution<int> pick(0, 13);
    int removed = 0;
    for (int i = 0; i < 5; ++i) {
      int v = pick(rng);
      if (h.alive(v)) {
        h.remove_vertex(v);
        ++removed;
      }
    }
    if (h.alive_count() == 0) continue;
    CHECK(mad_exact(h).value <= whole);
  }
}

TEST_CASE("mad below two characterizes forests") {
  CHECK(mad_exact(path(9)).value < Rational(2));
  CHECK(mad_exact(spider({3, 2, 5})).value < Rational(2));
  CHECK_FALSE(mad_exact(cycle(17)).value < Rational(2));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 10, 0.2);
    bool below = mad_exact(g).value < Rational(2);
    CHECK(below == is_forest(g));
  }
}

TEST_CASE("mad_below strictness") {
  CHECK(mad_below(cycle(5), Rational(26, 11)));
  CHECK_FALSE(mad_below(cycle(5), Rational(2)));
  CHECK_FALSE(mad_below(complete(4), Rational(8, 3)));
  CHECK(mad_below(path(4), Rational(26, 11)));
}

TEST_CASE("deletions are respected") {
  Graph g = complete(5);
  g.remove_vertex(4);
  CHECK(mad_exact(g).value == Rational(3));
  g.remove_vertex(3);
  CHECK(mad_exact(g).value == Rational(2));
  g.restore_vertex(3);
  g.restore_vertex(4);
  CHECK(mad_exact(g).value == Rational(4));
}

TEST_CASE("threshold neighborhoods stay exact") {
  // two 5-cycles sharing one vertex: 10 edges on 9 vertices
  Graph g(9);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(0, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  g.add_edge(8, 0);
  auto r = mad_exact(g);
  CHECK(r.value == Rational(20, 9));
  CHECK(r.value < Rational(26, 11));
  CHECK(mad_bruteforce(g).value == Rational(20, 9));
}
