#pragma once

#include <vector>

#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"

namespace stardecomp {

struct MadResult {
  Rational value;
  std::vector<int> witness;  // alive vertex ids, ascending
};

// max over nonempty vertex subsets S of 2|E(G[S])| / |S|, exact
MadResult mad_exact(const Graph& g);

// exhaustive reference implementation over all nonempty subsets
MadResult mad_bruteforce(const Graph& g, int max_n = 16);

// exact comparison mad(g) < bound
bool mad_below(const Graph& g, const Rational& bound);

// 2|E(G[S])| / |S| for one concrete subset
Rational subgraph_mad(const Graph& g, const std::vector<int>& verts);

}  // namespace stardecomp
