#pragma once

#include "stardecomp/graph.hpp"

namespace stardecomp {

// Walk from v along the incident edge to `first`, passing through degree-2
// vertices, stopping at the first vertex of degree != 2 or back at v when the
// walk closes a cycle. The count of interior degree-2 vertices is the thread
// length seen from v in that direction.
struct ThreadWalk {
  std::vector<int> internals;
  int end = -1;
  bool closed = false;  // walk came back to its starting vertex
};

ThreadWalk walk_thread(const Graph& g, int v, int first);

// Degree plus the multiset of walk lengths, one per incident edge. A vertex
// on a bare cycle sees the whole cycle from both sides, so both entries count
// all the other cycle vertices; shared structure is intentional.
struct VertexProfile {
  int vertex = -1;
  int degree = 0;
  std::vector<int> nbrs;          // alive neighbors, ascending
  std::vector<ThreadWalk> walks;  // parallel to nbrs
  std::vector<int> signature;     // walk lengths, ascending
};

VertexProfile classify_vertex(const Graph& g, int v);

// Componentwise >= between ascending sequences of equal length. A vertex
// matches a degree/lengths pattern when its signature dominates the pattern:
// a longer run of degree-2 vertices contains the shorter prefix asked for.
bool dominates(const std::vector<int>& sig, const std::vector<int>& pattern);

// Maximal thread: endpoints of degree != 2 joined by a run of degree-2
// vertices. Both endpoints may be the same vertex (a cycle with one anchor).
// Components that are bare cycles have no anchor and are flagged instead,
// rooted at their smallest vertex.
struct Thread {
  int a = -1, b = -1;
  std::vector<int> internals;  // in order from a
  bool full_cycle = false;
};

std::vector<Thread> enumerate_threads(const Graph& g);

}  // namespace stardecomp
