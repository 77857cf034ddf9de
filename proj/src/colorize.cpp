#include "stardecomp/colorize.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stardecomp/density.hpp"

namespace stardecomp {

const char* route_name(Route r) {
  switch (r) {
    case Route::forest3: return "forest-3";
    case Route::density4: return "density-4";
    case Route::girth5: return "density-girth-5";
    case Route::girth6: return "density-girth-6";
    case Route::exact_solver: return "exact";
  }
  return "?";
}

int route_bound(Route r) {
  switch (r) {
    case Route::forest3: return 3;
    case Route::density4: return 4;
    case Route::girth5: return 5;
    case Route::girth6: return 6;
    case Route::exact_solver: return 0;
  }
  return 0;
}

Coloring color_from_partition(const Graph& g, const Partition& p) {
  auto verdict = verify_partition(g, p);
  if (!verdict.ok)
    throw std::invalid_argument("color_from_partition: partition invalid: " +
                                verdict.reason);

  // forest part keeps its own 3-color scheme on the induced subgraph
  std::vector<char> in_f(g.vertex_count(), 0);
  if (auto it = p.classes.find("F"); it != p.classes.end())
    for (int u : it->second) in_f[u] = 1;
  Graph forest_part = g;
  for (int v : g.alive_vertices())
    if (!in_f[v]) forest_part.remove_vertex(v);
  Coloring base = star_color_forest(forest_part);

  Coloring c;
  c.colors.assign(g.vertex_count(), -1);
  for (int v : forest_part.alive_vertices()) c.colors[v] = base.colors[v];

  int slot = 0;
  int highest = -1;
  for (const auto& name : scheme_classes(p.scheme)) {
    if (name == "F") continue;
    auto it = p.classes.find(name);
    if (it != p.classes.end() && !it->second.empty()) {
      for (int v : it->second) c.colors[v] = 3 + slot;
      highest = slot;
    }
    ++slot;
  }
  c.palette_size = 3 + (highest + 1);
  return c;
}

ColoringCertificate star_color(const Graph& g, bool allow_exact_fallback) {
  ColoringCertificate cert;

  if (is_forest(g)) {
    cert.route = Route::forest3;
    cert.coloring = star_color_forest(g);
  } else if (mad_below(g, Rational(26, 11))) {
    cert.route = Route::density4;
    auto [part, trace] = decompose_FI(g);
    cert.partition = part;
    cert.coloring = color_from_partition(g, part);
  } else if (mad_below(g, Rational(18, 7)) && girth_at_least(g, 6)) {
    cert.route = Route::girth5;
    auto [part, trace] = decompose_FI1I2(g);
    cert.partition = part;
    cert.coloring = color_from_partition(g, part);
  } else if (mad_below(g, Rational(8, 3)) && girth_at_least(g, 6)) {
    cert.route = Route::girth6;
    auto [part, trace] = decompose_FI1I2I3(g);
    cert.partition = part;
    cert.coloring = color_from_partition(g, part);
  } else if (allow_exact_fallback && g.alive_count() <= 16) {
    cert.route = Route::exact_solver;
    Coloring witness;
    auto k = exact_star_chromatic(g, g.alive_count(), &witness);
    if (!k)
      throw std::runtime_error(
          "internal: exact solver found no coloring within n colors");
    cert.coloring = witness;
  } else {
    throw NotCoveredError(
        "not-covered: no density route applies and the exact fallback is " +
        std::string(allow_exact_fallback ? "limited to 16 vertices"
                                         : "disabled"));
  }

  cert.verdict = verify_star(g, cert.coloring);
  if (!cert.verdict.ok)
    throw std::runtime_error("internal: assembled coloring failed the star check");
  int bound = route_bound(cert.route);
  if (bound > 0 && cert.coloring.palette_size > bound)
    throw std::runtime_error("internal: route exceeded its color budget");
  return cert;
}

std::string certificate_to_string(const Graph& g,
                                  const ColoringCertificate& cert) {
  std::ostringstream out;
  out << "route " << route_name(cert.route) << "\n";
  out << coloring_to_string(g, cert.coloring);
  if (cert.partition) out << partition_to_string(*cert.partition);
  out << "verified " << (cert.verdict.ok ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace stardecomp
