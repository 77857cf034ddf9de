#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stardecomp/graph.hpp"

namespace stardecomp {

struct Coloring {
  std::vector<int> colors;  // indexed by vertex id, -1 where unassigned
  int palette_size = 0;
};

struct StarVerdict {
  bool ok = true;
  // properness failure: an edge whose ends share a color
  std::optional<std::pair<int, int>> bad_edge;
  // star failure: ordered 3-edge path using exactly two colors
  std::optional<std::array<int, 4>> bad_path;
};

// proper + no two-colored 3-edge path; first violation in vertex order
StarVerdict verify_star(const Graph& g, const Coloring& c);

// some two-colored 3-edge path under a proper coloring, if any
std::optional<std::array<int, 4>> find_bicolored_p4(const Graph& g,
                                                    const Coloring& c);

// 3-coloring of a forest: (1 + distance from the smallest-id root) mod 3
Coloring star_color_forest(const Graph& g);

// minimal k <= max_colors admitting a star k-coloring, or nullopt;
// backtracking over vertices in degree-descending order with symmetry
// breaking, deterministic first solution
std::optional<int> exact_star_chromatic(const Graph& g, int max_colors,
                                        Coloring* witness = nullptr);

std::string coloring_to_string(const Graph& g, const Coloring& c);
Coloring parse_coloring(const Graph& g, const std::string& text);

}  // namespace stardecomp
