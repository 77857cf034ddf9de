#include "stardecomp/gen.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "stardecomp/density.hpp"
#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"
#include "stardecomp/star.hpp"

using namespace stardecomp;
using test_helpers::cycle;
using test_helpers::complete;
using test_helpers::make_graph;
using test_helpers::path;
using test_helpers::spider;

namespace {

std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> out;
  for (int v : g.alive_vertices()) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("named catalog builds the expected graphs") {
  Graph c5 = named("C5");
  CHECK(c5.alive_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(canonical_mask(c5) == canonical_mask(cycle(5)));

  Graph p4 = named("P4");
  CHECK(p4.alive_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_forest(p4));

  CHECK(named("P1").alive_count() == 1);
  CHECK(named("K1").edge_count() == 0);

  Graph k4 = named("K4");
  CHECK(k4.alive_count() == 4);
  CHECK(k4.edge_count() == 6);

  Graph k33 = named("K3,3");
  CHECK(k33.alive_count() == 6);
  CHECK(k33.edge_count() == 9);
  CHECK(girth(k33) == 4);
  CHECK(degree_multiset(k33) == std::vector<int>{3, 3, 3, 3, 3, 3});

  Graph pet = named("petersen");
  CHECK(pet.alive_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(girth(pet) == 5);
  CHECK(degree_multiset(pet) == std::vector<int>(10, 3));

  Graph sp = named("spider(2,3,4)");
  CHECK(sp.alive_count() == 10);
  CHECK(sp.edge_count() == 9);
  CHECK(is_forest(sp));
  CHECK(sp.degree(0) == 3);
  CHECK(canonical_mask(named("spider(1,1,1)")) == canonical_mask(spider({1, 1, 1})));

  Graph sub = named("sub(K4,2)");
  CHECK(sub.alive_count() == 16);
  CHECK(sub.edge_count() == 18);
  CHECK(girth(sub) == 9);

  CHECK(named(" petersen ").alive_count() == 10);
  CHECK(named("spider( 2 , 3 )").alive_count() == 6);
}

TEST_CASE("named rejects junk") {
  CHECK_THROWS_AS(named("Q17"), std::invalid_argument);
  CHECK_THROWS_AS(named(""), std::invalid_argument);
  CHECK_THROWS_AS(named("C2"), std::invalid_argument);
  CHECK_THROWS_AS(named("P0"), std::invalid_argument);
  CHECK_THROWS_AS(named("K0"), std::invalid_argument);
  CHECK_THROWS_AS(named("K2,0"), std::invalid_argument);
  CHECK_THROWS_AS(named("spider()"), std::invalid_argument);
  CHECK_THROWS_AS(named("spider(2,0)"), std::invalid_argument);
  CHECK_THROWS_AS(named("sub(K4)"), std::invalid_argument);
  CHECK_THROWS_AS(named("sub(nope,2)"), std::invalid_argument);
  CHECK_THROWS_AS(named("Cx"), std::invalid_argument);
}

TEST_CASE("subdivide_each_edge") {
  Graph one = subdivide_each_edge(path(2), 3);
  CHECK(one.alive_count() == 5);
  CHECK(one.edge_count() == 4);
  CHECK(is_forest(one));

  Graph same = subdivide_each_edge(cycle(4), 0);
  CHECK(to_graph6(same) == to_graph6(cycle(4)));

  Graph c6 = subdivide_each_edge(cycle(3), 1);
  CHECK(c6.alive_count() == 6);
  CHECK(girth(c6) == 6);

  // dead vertices are dropped, ids compacted
  Graph g = cycle(4);
  g.remove_vertex(3);
  Graph sub = subdivide_each_edge(g, 1);
  CHECK(sub.alive_count() == 5);
  CHECK(sub.edge_count() == 4);
  CHECK(is_forest(sub));

  CHECK_THROWS_AS(subdivide_each_edge(path(3), -1), std::invalid_argument);
}

TEST_CASE("random_sparse is deterministic per seed") {
  for (auto method : {GeneratorSpec::Method::subdivision,
                      GeneratorSpec::Method::rejection,
                      GeneratorSpec::Method::thread_graft}) {
    GeneratorSpec spec;
    spec.n = 24;
    spec.seed = 11;
    spec.method = method;
    std::string a = to_graph6(random_sparse(spec));
    std::string b = to_graph6(random_sparse(spec));
    CHECK(a == b);
    spec.seed = 12;
    CHECK(to_graph6(random_sparse(spec)) != a);
  }
}

TEST_CASE("random_sparse meets its density and girth constraints") {
  for (auto method : {GeneratorSpec::Method::subdivision,
                      GeneratorSpec::Method::rejection,
                      GeneratorSpec::Method::thread_graft}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      GeneratorSpec loose;
      loose.n = 30;
      loose.mad_bound = Rational(26, 11);
      loose.girth_min = 3;
      loose.seed = seed;
      loose.method = method;
      Graph a = random_sparse(loose);
      CHECK(mad_below(a, loose.mad_bound));
      CHECK(girth_at_least(a, loose.girth_min));

      GeneratorSpec tight;
      tight.n = 26;
      tight.mad_bound = Rational(8, 3);
      tight.girth_min = 6;
      tight.seed = seed;
      tight.method = method;
      Graph b = random_sparse(tight);
      CHECK(mad_below(b, tight.mad_bound));
      CHECK(girth_at_least(b, tight.girth_min));
    }
  }

  GeneratorSpec mid;
  mid.n = 28;
  mid.mad_bound = Rational(18, 7);
  mid.girth_min = 6;
  mid.seed = 3;
  mid.method = GeneratorSpec::Method::subdivision;
  Graph c = random_sparse(mid);
  CHECK(mad_below(c, mid.mad_bound));
  CHECK(girth_at_least(c, 6));

  GeneratorSpec tiny;
  tiny.n = 1;
  tiny.seed = 0;
  CHECK(random_sparse(tiny).alive_count() == 1);

  GeneratorSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS(random_sparse(bad), std::invalid_argument);
  bad.n = 5;
  bad.mad_bound = Rational(1);
  CHECK_THROWS_AS(random_sparse(bad), std::invalid_argument);
}

TEST_CASE("random_forest") {
  Graph f = random_forest(60, 5);
  CHECK(f.alive_count() == 60);
  CHECK(is_forest(f));
  CHECK(to_graph6(f) == to_graph6(random_forest(60, 5)));
  CHECK(random_forest(0, 1).alive_count() == 0);
  CHECK_THROWS_AS(random_forest(-1, 1), std::invalid_argument);
}

TEST_CASE("enumeration matches the known class counts") {
  const std::vector<size_t> counts = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    auto masks = enumerate_canonical_masks(n);
    CHECK(masks.size() == counts[n - 1]);
    CHECK(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
  }
  CHECK_THROWS_AS(enumerate_canonical_masks(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_canonical_masks(10), std::invalid_argument);
}

TEST_CASE("enumeration levels hold the right graphs") {
  auto n3 = enumerate_canonical_masks(3);
  std::multiset<long long> sizes;
  for (auto m : n3) sizes.insert(graph_from_mask(m, 3).edge_count());
  CHECK(sizes == std::multiset<long long>{0, 1, 2, 3});

  auto n4 = enumerate_canonical_masks(4);
  int with_three_edges = 0;
  for (auto m : n4)
    if (graph_from_mask(m, 4).edge_count() == 3) ++with_three_edges;
  CHECK(with_three_edges == 3);  // 3-edge path, triangle + isolate, 3-star

  for (auto m : enumerate_canonical_masks(5))
    CHECK(canonical_mask(graph_from_mask(m, 5)) == m);
}

TEST_CASE("canonical_mask is label independent") {
  Graph relabeled = make_graph(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  CHECK(canonical_mask(relabeled) == canonical_mask(cycle(5)));

  Graph p = make_graph(4, {{3, 1}, {1, 0}, {0, 2}});
  CHECK(canonical_mask(p) == canonical_mask(path(4)));
  CHECK(canonical_mask(p) != canonical_mask(spider({1, 1, 1})));

  Graph c6 = cycle(6);
  c6.remove_vertex(2);
  CHECK(canonical_mask(c6) == canonical_mask(path(5)));

  Graph round = parse_graph6_line(to_graph6(complete(4)));
  CHECK(canonical_mask(round) == canonical_mask(complete(4)));

  CHECK_THROWS_AS(canonical_mask(complete(10)), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_mask(~0ULL, 3), std::invalid_argument);
}

TEST_CASE("extremal_search over the internal enumeration") {
  auto two = extremal_search(4, 2);
  REQUIRE(!two.empty());
  CHECK(two.front().mad == Rational(3, 2));
  CHECK(two.front().graph.alive_count() == 4);
  CHECK(two.front().graph.edge_count() == 3);
  CHECK(two.front().star_chromatic == 3);
  CHECK(two.front().exact);
  for (size_t i = 0; i + 1 < two.size(); ++i) CHECK(!(two[i + 1].mad < two[i].mad));
  for (const auto& r : two) {
    CHECK(!(r.mad < Rational(3, 2)));
    CHECK(r.star_chromatic > 2);
  }

  auto three = extremal_search(6, 3);
  REQUIRE(!three.empty());
  CHECK(three.front().mad == Rational(2));
  CHECK(three.front().graph.alive_count() == 5);
  CHECK(three.front().graph.edge_count() == 5);
  CHECK(three.front().star_chromatic == 4);
  for (const auto& r : three) CHECK(!(r.mad < Rational(2)));

  auto one = extremal_search(3, 1);
  REQUIRE(!one.empty());
  CHECK(one.front().mad == Rational(1));
  CHECK(one.front().graph.alive_count() == 2);
  CHECK(one.front().star_chromatic == 2);
}

TEST_CASE("extremal_search honors the solver cap") {
  auto recs = extremal_search(6, 3, nullptr, 4);
  REQUIRE(!recs.empty());
  CHECK(recs.front().star_chromatic == 4);  // 5-cycle still solved exactly
  CHECK(recs.front().exact);
  CHECK(recs.back().mad == Rational(5));  // K6 has the largest density
  CHECK(!recs.back().exact);
  CHECK(recs.back().star_chromatic == 5);  // lower bound: cap + 1

  std::string tsv = extremal_records_to_tsv(recs);
  CHECK(tsv.find("\t2/1\t4\n") != std::string::npos);
  CHECK(tsv.find("\t5/1\t>4\n") != std::string::npos);
}

TEST_CASE("extremal_search over a graph6 stream") {
  std::ostringstream feed;
  feed << to_graph6(cycle(5)) << "\n";
  feed << "# comment\n\n";
  feed << to_graph6(path(4)) << "\n";
  feed << to_graph6(complete(4)) << "\n";
  std::istringstream in(feed.str());
  auto recs = extremal_search(0, 3, &in);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].mad == Rational(2));
  CHECK(recs[0].star_chromatic == 4);
  CHECK(recs[1].mad == Rational(3));
  CHECK(recs[1].graph.edge_count() == 6);
  CHECK(recs[1].star_chromatic == 4);

  CHECK_THROWS_AS(extremal_search(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(extremal_search(12, 3), std::invalid_argument);
}
