#pragma once

#include <utility>
#include <vector>

#include "stardecomp/graph.hpp"

namespace test_helpers {

inline stardecomp::Graph make_graph(int n,
                                    const std::vector<std::pair<int, int>>& edges) {
  stardecomp::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline stardecomp::Graph cycle(int n) {
  stardecomp::Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline stardecomp::Graph path(int n) {
  stardecomp::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline stardecomp::Graph complete(int n) {
  stardecomp::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline stardecomp::Graph petersen() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Center 0 with legs of the given edge lengths.
inline stardecomp::Graph spider(const std::vector<int>& legs) {
  int n = 1;
  for (int l : legs) n += l;
  stardecomp::Graph g(n);
  int next = 1;
  for (int l : legs) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

}  // namespace test_helpers
