#include "stardecomp/star.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace stardecomp {

namespace {

void check_covered(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count())
    throw std::invalid_argument("coloring: size does not match graph");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    if (c.colors[v] < 0 || c.colors[v] >= c.palette_size)
      throw std::invalid_argument("coloring: vertex " + std::to_string(v) +
                                  " has no valid color");
  }
}

}  // namespace

std::optional<std::array<int, 4>> find_bicolored_p4(const Graph& g,
                                                    const Coloring& c) {
  const auto& col = c.colors;
  for (int a = 0; a < g.vertex_count(); ++a) {
    if (!g.alive(a)) continue;
    for (int b : g.neighbors(a)) {
      for (int x : g.neighbors(b)) {
        if (x == a || col[x] != col[a]) continue;
        for (int d : g.neighbors(x)) {
          if (d == b || d == a) continue;
          if (col[d] == col[b] && col[a] != col[b])
            return std::array<int, 4>{a, b, x, d};
        }
      }
    }
  }
  return std::nullopt;
}

StarVerdict verify_star(const Graph& g, const Coloring& c) {
  check_covered(g, c);
  StarVerdict verdict;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    for (int w : g.neighbors(v)) {
      if (w > v && c.colors[w] == c.colors[v]) {
        verdict.ok = false;
        verdict.bad_edge = {v, w};
        return verdict;
      }
    }
  }
  if (auto p4 = find_bicolored_p4(g, c)) {
    verdict.ok = false;
    verdict.bad_path = p4;
  }
  return verdict;
}

Coloring star_color_forest(const Graph& g) {
  if (!is_forest(g))
    throw std::invalid_argument("star_color_forest: graph has a cycle");
  Coloring c;
  c.colors.assign(g.vertex_count(), -1);
  c.palette_size = 3;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (!g.alive(root) || c.colors[root] >= 0) continue;
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      c.colors[u] = (1 + dist[u]) % 3;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
  }
  return c;
}

namespace {

// v was just colored; reject if it completes a monochromatic edge or a
// two-colored 3-edge path among already colored vertices. New paths must
// pass through v as an endpoint or as a second vertex (reversal covers the
// other positions).
bool placement_ok(const Graph& g, const std::vector<int>& col, int v) {
  int cv = col[v];
  for (int a : g.neighbors(v))
    if (col[a] == cv) return false;
  // v endpoint: v-a-b-c with col[b] == cv and col[c] == col[a]
  for (int a : g.neighbors(v)) {
    if (col[a] < 0) continue;
    for (int b : g.neighbors(a)) {
      if (b == v || col[b] != cv) continue;
      for (int x : g.neighbors(b)) {
        if (x == a || x == v) continue;
        if (col[x] == col[a]) return false;
      }
    }
  }
  // v second: a-v-b-c with col[a] == col[b] and col[c] == cv
  for (int b : g.neighbors(v)) {
    if (col[b] < 0) continue;
    for (int a : g.neighbors(v)) {
      if (a == b || col[a] != col[b]) continue;
      for (int x : g.neighbors(b)) {
        if (x == v || x == a) continue;
        if (col[x] == cv) return false;
      }
    }
  }
  return true;
}

bool try_color(const Graph& g, const std::vector<int>& order, size_t i, int k,
               std::vector<int>& col) {
  if (i == order.size()) return true;
  int v = order[i];
  int limit = std::min<int>(static_cast<int>(i), k - 1);
  for (int color = 0; color <= limit; ++color) {
    col[v] = color;
    if (placement_ok(g, col, v) && try_color(g, order, i + 1, k, col))
      return true;
  }
  col[v] = -1;
  return false;
}

}  // namespace

std::optional<int> exact_star_chromatic(const Graph& g, int max_colors,
                                        Coloring* witness) {
  if (max_colors < 1)
    throw std::invalid_argument("exact_star_chromatic: max_colors < 1");
  std::vector<int> order = g.alive_vertices();
  if (order.empty()) {
    if (witness) {
      witness->colors.assign(g.vertex_count(), -1);
      witness->palette_size = 0;
    }
    return 0;
  }
  std::sort(order.begin(), order.end(), [&g](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  for (int k = 1; k <= max_colors; ++k) {
    std::vector<int> col(g.vertex_count(), -1);
    if (try_color(g, order, 0, k, col)) {
      Coloring c{col, k};
      if (!verify_star(g, c).ok)
        throw std::logic_error("exact_star_chromatic: solution failed verify");
      if (witness) *witness = c;
      return k;
    }
  }
  return std::nullopt;
}

std::string coloring_to_string(const Graph& g, const Coloring& c) {
  std::ostringstream out;
  out << "colors=" << c.palette_size << "\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.alive(v)) out << v << " " << c.colors[v] << "\n";
  return out.str();
}

Coloring parse_coloring(const Graph& g, const std::string& text) {
  Coloring c;
  c.colors.assign(g.vertex_count(), -1);
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("colors=", 0) == 0) {
      try {
        c.palette_size = std::stoi(line.substr(7));
      } catch (const std::exception&) {
        throw ParseError("coloring: bad palette line: " + line);
      }
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    int v = -1, color = -1;
    if (!(ls >> v >> color))
      throw ParseError("coloring: bad line: " + line);
    std::string extra;
    if (ls >> extra) throw ParseError("coloring: trailing data: " + line);
    if (v < 0 || v >= g.vertex_count() || !g.alive(v))
      throw ParseError("coloring: unknown vertex " + std::to_string(v));
    c.colors[v] = color;
  }
  if (!saw_header) throw ParseError("coloring: missing colors= line");
  return c;
}

}  // namespace stardecomp
