#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"

namespace stardecomp {

struct GeneratorSpec {
  int n = 20;                    // approximate vertex target
  Rational mad_bound{26, 11};    // emitted graph satisfies mad < mad_bound
  int girth_min = 3;             // and girth >= girth_min
  std::uint64_t seed = 0;
  enum class Method { subdivision, rejection, thread_graft };
  Method method = Method::rejection;
};

// catalog: Cn, Pn, Kn, Ka,b, petersen, spider(a,b,...), sub(name,k)
Graph named(const std::string& name);

// replace every edge by a path with `times` internal vertices
Graph subdivide_each_edge(const Graph& g, int times);

// seeded-deterministic sparse instance; constraints re-checked with exact
// density and girth before returning, bounded retries otherwise an error
Graph random_sparse(const GeneratorSpec& spec);

Graph random_forest(int n, std::uint64_t seed);

// one representative per isomorphism class with exactly n vertices (n <= 9),
// encoded as an upper-triangle adjacency bitmask: edge {i, j} with i < j is
// bit j*(j-1)/2 + i
std::vector<std::uint64_t> enumerate_canonical_masks(int n);
Graph graph_from_mask(std::uint64_t mask, int n);

// label-independent form of a graph with at most 9 alive vertices
std::uint64_t canonical_mask(const Graph& g);

struct ExtremalRecord {
  Graph graph;
  Rational mad;
  int star_chromatic = 0;  // exact value, or a lower bound when !exact
  bool exact = true;
};

// graphs whose star chromatic number exceeds target_colors, sorted by mad
// ascending (ties by vertex count, then graph6 text); reads graph6 lines
// from `stream` when given, otherwise enumerates all graphs with up to
// max_n vertices internally; solver_cap > 0 caps the per-record chromatic
// computation (capped records carry a lower bound and exact = false)
std::vector<ExtremalRecord> extremal_search(int max_n, int target_colors,
                                            std::istream* stream = nullptr,
                                            int solver_cap = 0);

std::string extremal_records_to_tsv(const std::vector<ExtremalRecord>& records);

}  // namespace stardecomp
