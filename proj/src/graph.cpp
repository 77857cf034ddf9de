#include "stardecomp/graph.hpp"

#include <algorithm>
#include <deque>

namespace stardecomp {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw ParseError("self-loop rejected: " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v)
    throw ParseError("duplicate edge rejected: " + std::to_string(u) + "-" +
                     std::to_string(v));
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  if (alive_[u] && alive_[v]) {
    ++deg_[u];
    ++deg_[v];
    ++alive_m_;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (!alive_[u] || !alive_[v]) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

void Graph::remove_vertex(int v) {
  if (!alive_[v]) throw std::logic_error("remove_vertex on dead vertex");
  alive_[v] = 0;
  --alive_n_;
  for (int u : adj_[v])
    if (alive_[u]) {
      --deg_[u];
      --alive_m_;
    }
  deg_[v] = 0;
}

void Graph::restore_vertex(int v) {
  if (alive_[v]) throw std::logic_error("restore_vertex on alive vertex");
  alive_[v] = 1;
  ++alive_n_;
  int d = 0;
  for (int u : adj_[v])
    if (alive_[u]) {
      ++deg_[u];
      ++alive_m_;
      ++d;
    }
  deg_[v] = d;
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (!g.alive(s) || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int u : g.raw_adj(comp[i]))
        if (g.alive(u) && !seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<int> bfs_distance(const Graph& g, int from, int to) {
  if (!g.alive(from) || !g.alive(to))
    throw std::logic_error("bfs_distance over dead vertex");
  if (from == to) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  dist[from] = 0;
  std::deque<int> q{from};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.raw_adj(v)) {
      if (!g.alive(u) || dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      if (u == to) return dist[u];
      q.push_back(u);
    }
  }
  return std::nullopt;
}

std::vector<int> ball(const Graph& g, int v, int radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[v] = 0;
  std::deque<int> q{v};
  std::vector<int> out;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dist[x] == radius) continue;
    for (int u : g.raw_adj(x)) {
      if (!g.alive(u) || dist[u] >= 0) continue;
      dist[u] = dist[x] + 1;
      out.push_back(u);
      q.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Girth by edge deletion: the shortest cycle through edge {u,v} has length
// 1 + d(u,v) in G - uv; minimizing over edges is exact.
std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n);
  for (int u = 0; u < n; ++u) {
    if (!g.alive(u)) continue;
    for (int v : g.raw_adj(u)) {
      if (v < u || !g.alive(v)) continue;
      // BFS from u to v avoiding the edge u-v.
      std::fill(dist.begin(), dist.end(), -1);
      dist[u] = 0;
      std::deque<int> q{u};
      int found = -1;
      while (!q.empty() && found < 0) {
        int x = q.front();
        q.pop_front();
        if (best > 0 && dist[x] + 1 >= best) break;
        for (int y : g.raw_adj(x)) {
          if (!g.alive(y) || dist[y] >= 0) continue;
          if (x == u && y == v) continue;
          dist[y] = dist[x] + 1;
          if (y == v) {
            found = dist[y];
            break;
          }
          q.push_back(y);
        }
      }
      if (found >= 0 && (best < 0 || found + 1 < best)) best = found + 1;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_forest(const Graph& g) {
  std::vector<char> all(g.vertex_count(), 1);
  return is_forest_subset(g, all);
}

bool is_forest_subset(const Graph& g, const std::vector<char>& in_set) {
  return !find_cycle_subset(g, in_set).has_value();
}

std::optional<std::vector<int>> find_cycle_subset(const Graph& g,
                                                  const std::vector<char>& in_set) {
  int n = g.vertex_count();
  std::vector<int> parent(n, -2);
  for (int s = 0; s < n; ++s) {
    if (!g.alive(s) || !in_set[s] || parent[s] != -2) continue;
    parent[s] = -1;
    // Iterative tree growth; a non-tree edge closes a cycle through the
    // lowest common ancestor of its endpoints in the parent forest.
    std::vector<std::pair<int, int>> stack{{s, -1}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      for (int u : g.raw_adj(v)) {
        if (!g.alive(u) || !in_set[u] || u == from) continue;
        if (parent[u] != -2) {
          std::vector<char> anc(n, 0);
          for (int x = v; x != -1; x = parent[x]) anc[x] = 1;
          int lca = u;
          while (!anc[lca]) lca = parent[lca];
          std::vector<int> cyc;
          for (int x = v; x != lca; x = parent[x]) cyc.push_back(x);
          cyc.push_back(lca);
          std::vector<int> uside;
          for (int x = u; x != lca; x = parent[x]) uside.push_back(x);
          std::reverse(uside.begin(), uside.end());
          cyc.insert(cyc.end(), uside.begin(), uside.end());
          return cyc;
        }
        parent[u] = v;
        stack.push_back({u, v});
      }
    }
  }
  return std::nullopt;
}

}  // namespace stardecomp
