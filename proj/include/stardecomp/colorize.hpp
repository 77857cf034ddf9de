#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "stardecomp/decompose.hpp"
#include "stardecomp/graph.hpp"
#include "stardecomp/star.hpp"

namespace stardecomp {

// how a coloring was obtained: forest scheme, one of the three
// density-gated decomposition routes (named by their color budget), or the
// exact solver fallback
enum class Route { forest3, density4, girth5, girth6, exact_solver };

const char* route_name(Route r);

// color budget the route promises; 0 for the exact solver (whose budget is
// whatever optimum it finds)
int route_bound(Route r);

struct ColoringCertificate {
  Coloring coloring;
  Route route = Route::forest3;
  std::optional<Partition> partition;
  StarVerdict verdict;
};

// thrown by star_color when no density route applies and the exact fallback
// is disallowed or the graph is too large for it
struct NotCoveredError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// colors F with the 3-color forest scheme and gives each independent class a
// fixed fresh color above those (I or I1 -> 3, I2 -> 4, I3 -> 5); the result
// always passes verify_star for a valid partition
Coloring color_from_partition(const Graph& g, const Partition& p);

// picks the cheapest applicable route: forest, then the three density gates
// in order of color budget, then the exact solver (when allowed and the
// graph is small); the returned coloring is verifier-checked
ColoringCertificate star_color(const Graph& g, bool allow_exact_fallback = true);

std::string certificate_to_string(const Graph& g,
                                  const ColoringCertificate& cert);

}  // namespace stardecomp
