#include "stardecomp/config.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "stardecomp/density.hpp"
#include "stardecomp/threads.hpp"

namespace stardecomp {

std::string family_name(Family f) {
  switch (f) {
    case Family::L2: return "L2";
    case Family::L3: return "L3";
    case Family::L5: return "L5";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "L2") return Family::L2;
  if (s == "L3") return Family::L3;
  if (s == "L5") return Family::L5;
  return std::nullopt;
}

namespace {

// the unique neighbor of a degree-2 vertex other than `not_this`
int other_nbr(const Graph& g, int v, int not_this) {
  for (int w : g.neighbors(v))
    if (w != not_this) return w;
  return not_this;  // degenerate, caller guarantees degree 2
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// count of degree-2 neighbors == threads with at least one internal vertex
int count_t1(const Graph& g, int v) {
  int c = 0;
  for (int w : g.neighbors(v))
    if (g.degree(w) == 2) ++c;
  return c;
}

// threads with at least two internal vertices
int count_t2(const Graph& g, int v) {
  int c = 0;
  for (int w : g.neighbors(v)) {
    if (g.degree(w) != 2) continue;
    if (g.degree(other_nbr(g, w, v)) == 2) ++c;
  }
  return c;
}

std::vector<int> deg2_nbrs(const Graph& g, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(v))
    if (g.degree(w) == 2) out.push_back(w);
  return out;
}

// degree-2 neighbors heading threads with >= 2 internals, ascending
std::vector<int> long_nbrs(const Graph& g, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(v)) {
    if (g.degree(w) != 2) continue;
    if (g.degree(other_nbr(g, w, v)) == 2) out.push_back(w);
  }
  return out;
}

// degree-2 neighbors ordered by (thread length from v, id); used to pick
// "the short thread" deterministically under inclusive profile matching
std::vector<int> nbrs_by_thread_len(const Graph& g, int v) {
  std::vector<std::pair<size_t, int>> keyed;
  for (int w : g.neighbors(v)) {
    if (g.degree(w) != 2) continue;
    keyed.push_back({walk_thread(g, v, w).internals.size(), w});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& [len, w] : keyed) out.push_back(w);
  return out;
}

}  // namespace

bool has_profile(const Graph& g, int v, int k, int ones, int twos) {
  if (g.degree(v) != k) return false;
  return count_t2(g, v) >= twos && count_t1(g, v) >= ones + twos;
}

bool bad3(const Graph& g, int v) {
  if (g.degree(v) != 3) return false;
  auto nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (g.degree(nb[i]) == 2 && g.degree(nb[j]) == 2 &&
          g.has_edge(nb[i], nb[j]))
        return true;
  return false;
}

JSubgraph build_J(const Graph& g) {
  JSubgraph j;
  int n = g.vertex_count();
  j.in_a.assign(n, 0);
  j.j_degree.assign(n, -1);
  std::vector<char> is3012(n, 0);
  for (int v : g.alive_vertices())
    if (has_profile(g, v, 3, 1, 1)) is3012[v] = 1;
  for (int v : g.alive_vertices()) {
    int d = g.degree(v);
    if (d == 2 && count_t1(g, v) >= 1) {
      j.in_a[v] = 1;
    } else if (d == 3 && count_t2(g, v) >= 2) {
      j.in_a[v] = 1;
    } else if (is3012[v]) {
      for (int w : g.neighbors(v))
        if (is3012[w]) {
          j.in_a[v] = 1;
          break;
        }
    }
  }
  for (int v : g.alive_vertices()) {
    if (!j.in_a[v]) continue;
    j.a_vertices.push_back(v);
    int d = 0;
    for (int w : g.neighbors(v)) {
      if (!j.in_a[w]) continue;
      ++d;
      if (w > v) j.edges.push_back({v, w});
    }
    j.j_degree[v] = d;
  }
  return j;
}

namespace {

// shortest J-cycle through r, as an ordered vertex list starting at r;
// empty when r lies on no cycle of J
std::vector<int> j_cycle_through(const Graph& g, const JSubgraph& j, int r) {
  std::vector<int> best;
  for (int b : g.neighbors(r)) {
    if (!j.in_a[b]) continue;
    // BFS from b back to r in J avoiding the direct edge r-b
    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    parent[b] = -1;
    q.push(b);
    while (!q.empty() && parent[r] == -2) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (!j.in_a[w] || parent[w] != -2) continue;
        if (u == b && w == r) continue;
        parent[w] = u;
        q.push(w);
        if (w == r) break;
      }
    }
    if (parent[r] == -2) continue;
    std::vector<int> path;  // r, ..., b along parent links
    for (int x = r; x != -1; x = parent[x]) path.push_back(x);
    // cycle order: r, b, ..., predecessor of r
    std::vector<int> cyc;
    cyc.push_back(r);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      if (*it != r) cyc.push_back(*it);
    if (cyc.size() >= 3 && (best.empty() || cyc.size() < best.size()))
      best = cyc;
  }
  return best;
}

ConfigurationMatch make_match(Family f, int kind,
                              std::map<std::string, int> roles,
                              std::vector<int> del) {
  ConfigurationMatch m;
  m.family = f;
  m.kind = kind;
  m.roles = std::move(roles);
  m.deletion_set = sorted_unique(std::move(del));
  return m;
}

void add_indexed(std::map<std::string, int>& roles, const std::string& base,
                 int idx, int v) {
  roles[base + std::to_string(idx)] = v;
}

}  // namespace

std::optional<ConfigurationMatch> detect_L2(const Graph& g) {
  auto verts = g.alive_vertices();
  // kind 0: vertex of degree at most 1
  for (int v : verts)
    if (g.degree(v) <= 1)
      return make_match(Family::L2, 0, {{"v", v}}, {v});
  // kind 1: degree-2 vertex with two degree-2 neighbors
  for (int x : verts) {
    if (g.degree(x) != 2 || count_t1(g, x) < 2) continue;
    auto nb = g.neighbors(x);
    int n1 = nb[0], n2 = nb[1];
    return make_match(Family::L2, 1,
                      {{"x", x},
                       {"n1", n1},
                       {"n2", n2},
                       {"s1", other_nbr(g, n1, x)},
                       {"s2", other_nbr(g, n2, x)}},
                      {x, n1, n2});
  }
  // kind 2: degree-3 vertex, every neighbor degree 2, one thread >= 2
  for (int x : verts) {
    if (!has_profile(g, x, 3, 2, 1)) continue;
    auto longs = long_nbrs(g, x);
    if (longs.empty()) continue;
    int y = longs[0];
    int y2 = other_nbr(g, y, x);
    std::vector<int> rest;
    for (int w : g.neighbors(x))
      if (w != y) rest.push_back(w);
    int z = other_nbr(g, y2, y);
    std::map<std::string, int> roles = {{"x", x},   {"y", y},
                                        {"y2", y2}, {"n1", rest[0]},
                                        {"n2", rest[1]}, {"z", z},
                                        {"s1", other_nbr(g, rest[0], x)},
                                        {"s2", other_nbr(g, rest[1], x)}};
    return make_match(Family::L2, 2, std::move(roles),
                      {x, y, y2, rest[0], rest[1]});
  }
  // kind 3: degree-4 vertex, four threads each >= 2
  for (int x : verts) {
    if (!has_profile(g, x, 4, 0, 4)) continue;
    std::map<std::string, int> roles = {{"x", x}};
    std::vector<int> del = {x};
    auto nb = g.neighbors(x);
    for (int i = 0; i < 4; ++i) {
      int m2 = other_nbr(g, nb[i], x);
      add_indexed(roles, "n", i + 1, nb[i]);
      add_indexed(roles, "m", i + 1, m2);
      del.push_back(nb[i]);
      del.push_back(m2);
    }
    return make_match(Family::L2, 3, std::move(roles), std::move(del));
  }
  // kind 4: degree-3 vertex with one long and one short thread, adjacent to
  // a degree-3 vertex on a triangle with two degree-2 vertices
  for (int u : verts) {
    if (!has_profile(g, u, 3, 1, 1)) continue;
    for (int v : g.neighbors(u)) {
      if (!bad3(g, v)) continue;
      auto nb = g.neighbors(v);
      int w = -1, x = -1;
      for (size_t i = 0; i < nb.size() && w < 0; ++i)
        for (size_t j = i + 1; j < nb.size() && w < 0; ++j)
          if (g.degree(nb[i]) == 2 && g.degree(nb[j]) == 2 &&
              g.has_edge(nb[i], nb[j])) {
            w = nb[i];
            x = nb[j];
          }
      return make_match(Family::L2, 4,
                        {{"u", u}, {"v", v}, {"w", w}, {"x", x}}, {v, w, x});
    }
  }
  // kind 5: J-cycle through a vertex of J-degree 3
  JSubgraph j = build_J(g);
  for (int r : j.a_vertices) {
    if (j.j_degree[r] != 3) continue;
    auto cyc = j_cycle_through(g, j, r);
    if (cyc.empty()) continue;
    std::map<std::string, int> roles = {{"r", r}};
    for (size_t i = 0; i < cyc.size(); ++i)
      add_indexed(roles, "c", static_cast<int>(i), cyc[i]);
    return make_match(Family::L2, 5, std::move(roles), cyc);
  }
  return std::nullopt;
}

std::optional<ConfigurationMatch> detect_L3(const Graph& g) {
  auto verts = g.alive_vertices();
  // 1: vertex of degree at most 1
  for (int v : verts)
    if (g.degree(v) <= 1)
      return make_match(Family::L3, 1, {{"v", v}}, {v});
  // 2: degree-2 vertex with two degree-2 neighbors
  for (int w : verts) {
    if (g.degree(w) != 2 || count_t1(g, w) < 2) continue;
    auto nb = g.neighbors(w);
    int v = nb[0], x = nb[1];
    return make_match(Family::L3, 2,
                      {{"w", w},
                       {"v", v},
                       {"x", x},
                       {"u", other_nbr(g, v, w)},
                       {"y", other_nbr(g, x, w)}},
                      {w, v, x});
  }
  // 3: degree-3 vertex with three degree-2 neighbors
  for (int w : verts) {
    if (!has_profile(g, w, 3, 3, 0)) continue;
    auto nb = g.neighbors(w);
    return make_match(Family::L3, 3,
                      {{"w", w},
                       {"v", nb[0]},
                       {"x", nb[1]},
                       {"z", nb[2]},
                       {"u", other_nbr(g, nb[0], w)},
                       {"y", other_nbr(g, nb[1], w)},
                       {"t", other_nbr(g, nb[2], w)}},
                      {w, nb[0], nb[1], nb[2]});
  }
  // 4: degree-3 vertex heading a thread with >= 2 internals
  for (int v : verts) {
    if (g.degree(v) != 3) continue;
    auto longs = long_nbrs(g, v);
    if (longs.empty()) continue;
    int w = longs[0];
    int y = other_nbr(g, w, v);
    int z = other_nbr(g, y, w);
    std::vector<int> rest;
    for (int q : g.neighbors(v))
      if (q != w) rest.push_back(q);
    return make_match(Family::L3, 4,
                      {{"v", v},
                       {"w", w},
                       {"y", y},
                       {"z", z},
                       {"u", rest[0]},
                       {"x", rest[1]}},
                      {v, w});
  }
  // 5: adjacent pair of degree-3 vertices with two short threads each
  for (int w : verts) {
    if (!has_profile(g, w, 3, 2, 0)) continue;
    for (int r : g.neighbors(w)) {
      if (!has_profile(g, r, 3, 2, 0)) continue;
      auto wd = deg2_nbrs(g, w), rd = deg2_nbrs(g, r);
      int v = wd[0], q = wd[1], x = rd[0], s = rd[1];
      return make_match(Family::L3, 5,
                        {{"w", w},
                         {"r", r},
                         {"v", v},
                         {"q", q},
                         {"x", x},
                         {"s", s},
                         {"u", other_nbr(g, v, w)},
                         {"p", other_nbr(g, q, w)},
                         {"y", other_nbr(g, x, r)},
                         {"t", other_nbr(g, s, r)}},
                        {w, r, v, q, x, s});
    }
  }
  // 6: degree-3 vertex with a degree-2 neighbor, adjacent to two
  // degree-3 vertices that each have two degree-2 neighbors
  for (int u : verts) {
    if (g.degree(u) != 3 || count_t1(g, u) < 1) continue;
    std::vector<int> partners;
    for (int w : g.neighbors(u))
      if (has_profile(g, w, 3, 2, 0)) partners.push_back(w);
    if (partners.size() < 2) continue;
    int a = partners[0], b = partners[1];
    int c = deg2_nbrs(g, u)[0];
    auto ad = deg2_nbrs(g, a), bd = deg2_nbrs(g, b);
    return make_match(Family::L3, 6,
                      {{"u", u},
                       {"c", c},
                       {"a", a},
                       {"b", b},
                       {"d", ad[0]},
                       {"e", ad[1]},
                       {"f", bd[0]},
                       {"h", bd[1]}},
                      {u, c, a, ad[0], ad[1], b, bd[0], bd[1]});
  }
  // 7: degree-4 vertex, four degree-2 neighbors, one thread >= 2
  for (int v : verts) {
    if (!has_profile(g, v, 4, 3, 1)) continue;
    auto longs = long_nbrs(g, v);
    if (longs.empty()) continue;
    int d = longs[0];
    int e = other_nbr(g, d, v);
    std::vector<int> rest;
    for (int q : g.neighbors(v))
      if (q != d) rest.push_back(q);
    return make_match(Family::L3, 7,
                      {{"v", v},
                       {"a", rest[0]},
                       {"b", rest[1]},
                       {"c", rest[2]},
                       {"d", d},
                       {"e", e}},
                      {v, rest[0], rest[1], rest[2], d, e});
  }
  // 8: degree-4 vertex with three threads >= 2, adjacent to a 3-vertex
  for (int w : verts) {
    if (g.degree(w) != 4 || count_t2(g, w) < 3) continue;
    int x = -1;
    for (int q : g.neighbors(w))
      if (g.degree(q) == 3) {
        x = q;
        break;
      }
    if (x < 0) continue;
    auto longs = long_nbrs(g, w);
    int o = longs[0], r = longs[1], u = longs[2];
    int p = other_nbr(g, o, w), s = other_nbr(g, r, w), v = other_nbr(g, u, w);
    std::vector<int> xo;
    for (int q : g.neighbors(x))
      if (q != w) xo.push_back(q);
    return make_match(Family::L3, 8,
                      {{"w", w},
                       {"o", o},
                       {"p", p},
                       {"r", r},
                       {"s", s},
                       {"u", u},
                       {"v", v},
                       {"x", x},
                       {"y", xo[0]},
                       {"z", xo[1]},
                       {"n", other_nbr(g, p, o)},
                       {"q", other_nbr(g, s, r)},
                       {"m", other_nbr(g, v, u)}},
                      {w, o, p, r, s, u, v});
  }
  // 9: degree-4 vertex with three degree-2 neighbors, adjacent to a
  // degree-3 vertex with two degree-2 neighbors
  for (int a : verts) {
    if (g.degree(a) != 4 || count_t1(g, a) < 3) continue;
    int b = -1;
    for (int q : g.neighbors(a))
      if (has_profile(g, q, 3, 2, 0)) {
        b = q;
        break;
      }
    if (b < 0) continue;
    auto ad = deg2_nbrs(g, a);
    auto bd = deg2_nbrs(g, b);
    return make_match(Family::L3, 9,
                      {{"a", a},
                       {"b", b},
                       {"i1", ad[0]},
                       {"i2", ad[1]},
                       {"i3", ad[2]},
                       {"j1", bd[0]},
                       {"j2", bd[1]}},
                      {a, ad[0], ad[1], ad[2], b, bd[0], bd[1]});
  }
  // 10: degree-4 with three degree-2 neighbors adjacent to degree-4 with
  // three threads >= 2
  for (int u : verts) {
    if (g.degree(u) != 4 || count_t1(g, u) < 3) continue;
    int v = -1;
    for (int q : g.neighbors(u))
      if (g.degree(q) == 4 && count_t2(g, q) >= 3) {
        v = q;
        break;
      }
    if (v < 0) continue;
    auto ud = deg2_nbrs(g, u);
    auto vl = long_nbrs(g, v);
    std::map<std::string, int> roles = {{"u", u}, {"v", v}};
    std::vector<int> del = {u, v};
    for (int i = 0; i < 3; ++i) {
      add_indexed(roles, "a", i + 1, ud[i]);
      add_indexed(roles, "y", i + 1, other_nbr(g, ud[i], u));
      del.push_back(ud[i]);
      int b = vl[i], c = other_nbr(g, b, v);
      add_indexed(roles, "b", i + 1, b);
      add_indexed(roles, "c", i + 1, c);
      add_indexed(roles, "y", i + 4, other_nbr(g, c, b));
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L3, 10, std::move(roles), std::move(del));
  }
  // 11: degree-4 with two threads >= 2, adjacent to two degree-4 vertices
  // with three threads >= 2 each
  for (int z : verts) {
    if (g.degree(z) != 4 || count_t2(g, z) < 2) continue;
    std::vector<int> partners;
    for (int q : g.neighbors(z))
      if (g.degree(q) == 4 && count_t2(g, q) >= 3) partners.push_back(q);
    if (partners.size() < 2) continue;
    int u = partners[0], v = partners[1];
    auto zl = long_nbrs(g, z);
    std::map<std::string, int> roles = {{"z", z}, {"u", u}, {"v", v}};
    std::vector<int> del = {z, u, v};
    int d1 = zl[0], d2 = other_nbr(g, zl[0], z);
    int e1 = zl[1], e2 = other_nbr(g, zl[1], z);
    roles["d1"] = d1;
    roles["d2"] = d2;
    roles["e1"] = e1;
    roles["e2"] = e2;
    del.insert(del.end(), {d1, d2, e1, e2});
    int fi = 1;
    for (int b : long_nbrs(g, u)) {
      if (fi > 6) break;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "f", fi++, b);
      add_indexed(roles, "f", fi++, c);
      del.push_back(b);
      del.push_back(c);
    }
    int hi = 1;
    for (int b : long_nbrs(g, v)) {
      if (hi > 6) break;
      int c = other_nbr(g, b, v);
      add_indexed(roles, "h", hi++, b);
      add_indexed(roles, "h", hi++, c);
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L3, 11, std::move(roles), std::move(del));
  }
  // 12: degree-4 with two threads >= 2, adjacent to a degree-4 vertex with
  // three threads >= 2 and a degree-3 vertex with two degree-2 neighbors
  for (int z : verts) {
    if (g.degree(z) != 4 || count_t2(g, z) < 2) continue;
    int u = -1, v = -1;
    for (int q : g.neighbors(z)) {
      if (u < 0 && g.degree(q) == 4 && count_t2(g, q) >= 3) u = q;
      if (v < 0 && has_profile(g, q, 3, 2, 0)) v = q;
    }
    if (u < 0 || v < 0) continue;
    auto zl = long_nbrs(g, z);
    std::map<std::string, int> roles = {{"z", z}, {"u", u}, {"v", v}};
    std::vector<int> del = {z, u, v};
    roles["d1"] = zl[0];
    roles["d2"] = other_nbr(g, zl[0], z);
    roles["e1"] = zl[1];
    roles["e2"] = other_nbr(g, zl[1], z);
    del.insert(del.end(),
               {zl[0], roles["d2"], zl[1], roles["e2"]});
    int fi = 1;
    for (int b : long_nbrs(g, u)) {
      if (fi > 6) break;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "f", fi++, b);
      add_indexed(roles, "f", fi++, c);
      del.push_back(b);
      del.push_back(c);
    }
    auto vd = deg2_nbrs(g, v);
    roles["p1"] = vd[0];
    roles["p2"] = vd[1];
    roles["q1"] = other_nbr(g, vd[0], v);
    roles["q2"] = other_nbr(g, vd[1], v);
    del.push_back(vd[0]);
    del.push_back(vd[1]);
    return make_match(Family::L3, 12, std::move(roles), std::move(del));
  }
  // 13: degree-5 vertex, five degree-2 neighbors, four threads >= 2
  for (int u : verts) {
    if (!has_profile(g, u, 5, 1, 4)) continue;
    auto order = nbrs_by_thread_len(g, u);
    int a5 = order[0];
    std::map<std::string, int> roles = {{"u", u},
                                        {"a5", a5},
                                        {"y5", other_nbr(g, a5, u)}};
    std::vector<int> del = {u, a5};
    int bi = 1;
    for (int b : order) {
      if (b == a5) continue;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L3, 13, std::move(roles), std::move(del));
  }
  // 14: degree-5 with four threads >= 2 adjacent to degree-4 with three
  // threads >= 2
  for (int u : verts) {
    if (g.degree(u) != 5 || count_t2(g, u) < 4) continue;
    int v = -1;
    for (int q : g.neighbors(u))
      if (g.degree(q) == 4 && count_t2(g, q) >= 3) {
        v = q;
        break;
      }
    if (v < 0) continue;
    std::map<std::string, int> roles = {{"u", u}, {"v", v}};
    std::vector<int> del = {u, v};
    int ai = 1;
    for (int b : long_nbrs(g, u)) {
      if (ai > 8) break;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "a", ai++, b);
      add_indexed(roles, "a", ai++, c);
      del.push_back(b);
      del.push_back(c);
    }
    int bi = 1;
    for (int b : long_nbrs(g, v)) {
      if (bi > 6) break;
      int c = other_nbr(g, b, v);
      add_indexed(roles, "b", bi++, b);
      add_indexed(roles, "b", bi++, c);
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L3, 14, std::move(roles), std::move(del));
  }
  return std::nullopt;
}

namespace {

// centers of the parametrized high-degree shapes used by the third family
bool l5_side_011(const Graph& g, int v) {  // k'_{0,1,1,2,...,2}, k' >= 5
  int k = g.degree(v);
  return k >= 5 && count_t1(g, v) >= k - 1 && count_t2(g, v) >= k - 3;
}

bool l5_side_01(const Graph& g, int v) {  // k''_{0,1,2,...,2}, k'' >= 5
  int k = g.degree(v);
  return k >= 5 && count_t1(g, v) >= k - 1 && count_t2(g, v) >= k - 2;
}

}  // namespace

std::optional<ConfigurationMatch> detect_L5(const Graph& g) {
  auto verts = g.alive_vertices();
  // 1: vertex of degree at most 1
  for (int v : verts)
    if (g.degree(v) <= 1)
      return make_match(Family::L5, 1, {{"v", v}}, {v});
  // 2: degree-2 vertex with a degree-2 neighbor, all neighbors degree <= 4
  for (int v : verts) {
    if (g.degree(v) != 2 || count_t1(g, v) < 1) continue;
    bool small = true;
    for (int q : g.neighbors(v))
      if (g.degree(q) > 4) small = false;
    if (!small) continue;
    auto nb = g.neighbors(v);
    int w = g.degree(nb[0]) == 2 ? nb[0] : nb[1];
    int u = w == nb[0] ? nb[1] : nb[0];
    std::map<std::string, int> roles = {
        {"v", v}, {"w", w}, {"u", u}, {"x", other_nbr(g, w, v)}};
    int yi = 1;
    for (int q : g.neighbors(u))
      if (q != v) add_indexed(roles, "y", yi++, q);
    return make_match(Family::L5, 2, std::move(roles), {v, w});
  }
  // 3: degree-3 vertex with two degree-2 neighbors, all neighbors degree <= 3
  for (int v : verts) {
    if (!has_profile(g, v, 3, 2, 0)) continue;
    bool small = true;
    for (int q : g.neighbors(v))
      if (g.degree(q) > 3) small = false;
    if (!small) continue;
    auto vd = deg2_nbrs(g, v);
    int w = vd[0], z = vd[1];
    int u = -1;
    for (int q : g.neighbors(v))
      if (q != w && q != z) u = q;
    if (u < 0) u = vd[2];  // all three neighbors degree 2
    int x = other_nbr(g, w, v);
    int r = other_nbr(g, z, v);
    std::map<std::string, int> roles = {{"v", v}, {"w", w}, {"z", z},
                                        {"u", u}, {"x", x}, {"r", r}};
    int yi = 1;
    for (int q : g.neighbors(x)) {
      if (q == w || yi > 2) continue;
      add_indexed(roles, "y", yi++, q);
    }
    return make_match(Family::L5, 3, std::move(roles), {v, w, z});
  }
  // 4: k >= 5, all neighbors degree 2, at least k-2 threads >= 2
  for (int x : verts) {
    int k = g.degree(x);
    if (k < 5 || count_t1(g, x) < k || count_t2(g, x) < k - 2) continue;
    auto order = nbrs_by_thread_len(g, x);
    int a1 = order[0], a2 = order[1];
    std::map<std::string, int> roles = {{"x", x},
                                        {"a1", a1},
                                        {"a2", a2},
                                        {"v1", other_nbr(g, a1, x)},
                                        {"v2", other_nbr(g, a2, x)}};
    std::vector<int> del = {x, a1, a2};
    int bi = 1;
    for (int b : order) {
      if (b == a1 || b == a2) continue;
      int c = other_nbr(g, b, x);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L5, 4, std::move(roles), std::move(del));
  }
  // 5: k >= 5 with k-1 threads >= 2, adjacent to a degree-3 vertex
  for (int x : verts) {
    int k = g.degree(x);
    if (k < 5 || count_t2(g, x) < k - 1) continue;
    int v = -1;
    for (int q : g.neighbors(x))
      if (g.degree(q) == 3) {
        v = q;
        break;
      }
    if (v < 0) continue;
    std::map<std::string, int> roles = {{"x", x}, {"v", v}};
    int vi = 1;
    for (int q : g.neighbors(v))
      if (q != x) add_indexed(roles, "v", vi++, q);
    std::vector<int> del = {x};
    int bi = 1;
    for (int b : long_nbrs(g, x)) {
      int c = other_nbr(g, b, x);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L5, 5, std::move(roles), std::move(del));
  }
  // 6: k_{0,1,2,...,2} adjacent to k'_{0,1,1,2,...,2}, both >= 5
  for (int u : verts) {
    if (!l5_side_01(g, u)) continue;
    int v = -1;
    for (int q : g.neighbors(u))
      if (l5_side_011(g, q)) {
        v = q;
        break;
      }
    if (v < 0) continue;
    auto uo = nbrs_by_thread_len(g, u);
    auto vo = nbrs_by_thread_len(g, v);
    std::map<std::string, int> roles = {{"u", u}, {"v", v}};
    std::vector<int> del = {u, v};
    int a = uo[0];
    roles["a"] = a;
    roles["v1"] = other_nbr(g, a, u);
    del.push_back(a);
    int bi = 1;
    for (int b : uo) {
      if (b == a) continue;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    int d1 = vo[0], d2 = vo[1];
    roles["d1"] = d1;
    roles["d2"] = d2;
    roles["v2"] = other_nbr(g, d1, v);
    roles["v3"] = other_nbr(g, d2, v);
    del.push_back(d1);
    del.push_back(d2);
    int ei = 1;
    for (int b : vo) {
      if (b == d1 || b == d2) continue;
      int c = other_nbr(g, b, v);
      add_indexed(roles, "e", ei, b);
      add_indexed(roles, "ee", ei, c);
      ++ei;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L5, 6, std::move(roles), std::move(del));
  }
  // 7: k >= 5 with k-2 threads >= 2 adjacent to two degree-3 vertices that
  // each have two degree-2 neighbors
  for (int x : verts) {
    int k = g.degree(x);
    if (k < 5 || count_t2(g, x) < k - 2) continue;
    std::vector<int> partners;
    for (int q : g.neighbors(x))
      if (has_profile(g, q, 3, 2, 0)) partners.push_back(q);
    if (partners.size() < 2) continue;
    int r = partners[0], s = partners[1];
    auto rd = deg2_nbrs(g, r), sd = deg2_nbrs(g, s);
    std::map<std::string, int> roles = {{"x", x},  {"r", r},  {"s", s},
                                        {"ra", rd[0]}, {"rb", rd[1]},
                                        {"sa", sd[0]}, {"sb", sd[1]}};
    roles["u1"] = other_nbr(g, rd[0], r);
    roles["u2"] = other_nbr(g, rd[1], r);
    roles["w1"] = other_nbr(g, sd[0], s);
    roles["w2"] = other_nbr(g, sd[1], s);
    std::vector<int> del = {x, r, s, rd[0], rd[1], sd[0], sd[1]};
    int bi = 1;
    for (int b : long_nbrs(g, x)) {
      int c = other_nbr(g, b, x);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L5, 7, std::move(roles), std::move(del));
  }
  // 8: k >= 5 with k-2 threads >= 2 adjacent to a k'_{0,1,1,2,...,2} and a
  // k''_{0,1,2,...,2}
  for (int x : verts) {
    int k = g.degree(x);
    if (k < 5 || count_t2(g, x) < k - 2) continue;
    int v = -1, u = -1;
    for (int q : g.neighbors(x)) {
      if (l5_side_011(g, q)) {
        for (int q2 : g.neighbors(x)) {
          if (q2 == q) continue;
          if (l5_side_01(g, q2)) {
            v = q;
            u = q2;
            break;
          }
        }
      }
      if (v >= 0) break;
    }
    if (v < 0) continue;
    std::map<std::string, int> roles = {{"x", x}, {"u", u}, {"v", v}};
    std::vector<int> del = {x, u, v};
    int bi = 1;
    for (int b : long_nbrs(g, x)) {
      if (b == u || b == v) continue;
      int c = other_nbr(g, b, x);
      add_indexed(roles, "b", bi, b);
      add_indexed(roles, "c", bi, c);
      ++bi;
      del.push_back(b);
      del.push_back(c);
    }
    auto vo = nbrs_by_thread_len(g, v);
    roles["d1"] = vo[0];
    roles["d2"] = vo[1];
    roles["v1"] = other_nbr(g, vo[0], v);
    roles["v2"] = other_nbr(g, vo[1], v);
    del.push_back(vo[0]);
    del.push_back(vo[1]);
    int ei = 1;
    for (int b : vo) {
      if (b == vo[0] || b == vo[1]) continue;
      int c = other_nbr(g, b, v);
      add_indexed(roles, "e", ei, b);
      add_indexed(roles, "ee", ei, c);
      ++ei;
      del.push_back(b);
      del.push_back(c);
    }
    auto uo = nbrs_by_thread_len(g, u);
    roles["a"] = uo[0];
    roles["v3"] = other_nbr(g, uo[0], u);
    del.push_back(uo[0]);
    int fi = 1;
    for (int b : uo) {
      if (b == uo[0]) continue;
      int c = other_nbr(g, b, u);
      add_indexed(roles, "f", fi, b);
      add_indexed(roles, "ff", fi, c);
      ++fi;
      del.push_back(b);
      del.push_back(c);
    }
    return make_match(Family::L5, 8, std::move(roles), std::move(del));
  }
  return std::nullopt;
}

std::optional<ConfigurationMatch> detect(const Graph& g, Family family) {
  switch (family) {
    case Family::L2: return detect_L2(g);
    case Family::L3: return detect_L3(g);
    case Family::L5: return detect_L5(g);
  }
  return std::nullopt;
}

namespace {

struct role_reader {
  const std::map<std::string, int>& roles;
  bool ok = true;
  int get(const std::string& name) {
    auto it = roles.find(name);
    if (it == roles.end()) {
      ok = false;
      return -1;
    }
    return it->second;
  }
  bool has(const std::string& name) const { return roles.count(name) > 0; }
  std::vector<int> indexed(const std::string& base) {
    std::vector<int> out;
    for (int i = 1; roles.count(base + std::to_string(i)); ++i)
      out.push_back(roles.at(base + std::to_string(i)));
    return out;
  }
};

bool del_matches(const ConfigurationMatch& m, std::vector<int> expect) {
  return m.deletion_set == sorted_unique(std::move(expect));
}

bool all_alive(const Graph& g, const ConfigurationMatch& m) {
  for (const auto& [name, v] : m.roles)
    if (v < 0 || v >= g.vertex_count() || !g.alive(v)) return false;
  for (int v : m.deletion_set)
    if (v < 0 || v >= g.vertex_count() || !g.alive(v)) return false;
  // every deleted vertex carries a role name
  for (int v : m.deletion_set) {
    bool named = false;
    for (const auto& [name, r] : m.roles)
      if (r == v) named = true;
    if (!named) return false;
  }
  return true;
}

// is `second` the next vertex after `first` on the thread leaving `start`?
bool thread_step(const Graph& g, int start, int first, int second) {
  return g.degree(first) == 2 && g.has_edge(start, first) &&
         other_nbr(g, first, start) == second;
}

bool validate_L2(const Graph& g, const ConfigurationMatch& m) {
  role_reader rr{m.roles};
  switch (m.kind) {
    case 0: {
      int v = rr.get("v");
      return rr.ok && g.degree(v) <= 1 && del_matches(m, {v});
    }
    case 1: {
      int x = rr.get("x"), n1 = rr.get("n1"), n2 = rr.get("n2");
      int s1 = rr.get("s1"), s2 = rr.get("s2");
      if (!rr.ok || g.degree(x) != 2) return false;
      if (g.neighbors(x) != std::vector<int>{std::min(n1, n2),
                                             std::max(n1, n2)})
        return false;
      if (g.degree(n1) != 2 || g.degree(n2) != 2) return false;
      if (other_nbr(g, n1, x) != s1 || other_nbr(g, n2, x) != s2) return false;
      return del_matches(m, {x, n1, n2});
    }
    case 2: {
      int x = rr.get("x"), y = rr.get("y"), y2 = rr.get("y2");
      int n1 = rr.get("n1"), n2 = rr.get("n2");
      if (!rr.ok || g.degree(x) != 3) return false;
      for (int q : g.neighbors(x))
        if (g.degree(q) != 2) return false;
      if (!thread_step(g, x, y, y2) || g.degree(y2) != 2) return false;
      if (!g.has_edge(x, n1) || !g.has_edge(x, n2)) return false;
      if (n1 == y || n2 == y || n1 == n2) return false;
      return del_matches(m, {x, y, y2, n1, n2});
    }
    case 3: {
      int x = rr.get("x");
      if (!rr.ok || g.degree(x) != 4) return false;
      std::vector<int> del = {x};
      for (int i = 1; i <= 4; ++i) {
        int n = rr.get("n" + std::to_string(i));
        int mm = rr.get("m" + std::to_string(i));
        if (!rr.ok || !thread_step(g, x, n, mm) || g.degree(mm) != 2)
          return false;
        del.push_back(n);
        del.push_back(mm);
      }
      return del_matches(m, del);
    }
    case 4: {
      int u = rr.get("u"), v = rr.get("v"), w = rr.get("w"), x = rr.get("x");
      if (!rr.ok) return false;
      if (g.degree(u) != 3 || count_t2(g, u) < 1 || count_t1(g, u) < 2)
        return false;
      if (!g.has_edge(u, v) || g.degree(v) != 3) return false;
      if (g.degree(w) != 2 || g.degree(x) != 2) return false;
      if (!g.has_edge(v, w) || !g.has_edge(v, x) || !g.has_edge(w, x))
        return false;
      return del_matches(m, {v, w, x});
    }
    case 5: {
      int r = rr.get("r");
      if (!rr.ok) return false;
      JSubgraph j = build_J(g);
      if (r >= g.vertex_count() || !j.in_a[r] || j.j_degree[r] != 3)
        return false;
      std::vector<int> cyc;
      for (int i = 0; rr.has("c" + std::to_string(i)); ++i)
        cyc.push_back(m.roles.at("c" + std::to_string(i)));
      if (cyc.size() < 3 || cyc[0] != r) return false;
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (!j.in_a[a] || !g.has_edge(a, b)) return false;
      }
      if (sorted_unique(cyc).size() != cyc.size()) return false;
      return del_matches(m, cyc);
    }
  }
  return false;
}

bool validate_L3(const Graph& g, const ConfigurationMatch& m) {
  role_reader rr{m.roles};
  switch (m.kind) {
    case 1: {
      int v = rr.get("v");
      return rr.ok && g.degree(v) <= 1 && del_matches(m, {v});
    }
    case 2: {
      int w = rr.get("w"), v = rr.get("v"), x = rr.get("x");
      if (!rr.ok || g.degree(w) != 2) return false;
      if (!g.has_edge(w, v) || !g.has_edge(w, x) || v == x) return false;
      if (g.degree(v) != 2 || g.degree(x) != 2) return false;
      if (other_nbr(g, v, w) != rr.get("u")) return false;
      if (other_nbr(g, x, w) != rr.get("y")) return false;
      return rr.ok && del_matches(m, {w, v, x});
    }
    case 3: {
      int w = rr.get("w"), v = rr.get("v"), x = rr.get("x"), z = rr.get("z");
      if (!rr.ok || g.degree(w) != 3) return false;
      for (int q : {v, x, z})
        if (!g.has_edge(w, q) || g.degree(q) != 2) return false;
      if (v == x || v == z || x == z) return false;
      if (other_nbr(g, v, w) != rr.get("u") ||
          other_nbr(g, x, w) != rr.get("y") ||
          other_nbr(g, z, w) != rr.get("t"))
        return false;
      return rr.ok && del_matches(m, {w, v, x, z});
    }
    case 4: {
      int v = rr.get("v"), w = rr.get("w"), y = rr.get("y"), z = rr.get("z");
      int u = rr.get("u"), x = rr.get("x");
      if (!rr.ok || g.degree(v) != 3) return false;
      if (!thread_step(g, v, w, y) || g.degree(y) != 2) return false;
      if (other_nbr(g, y, w) != z) return false;
      if (!g.has_edge(v, u) || !g.has_edge(v, x) || u == w || x == w || u == x)
        return false;
      return del_matches(m, {v, w});
    }
    case 5: {
      int w = rr.get("w"), r = rr.get("r");
      if (!rr.ok || !g.has_edge(w, r)) return false;
      if (!has_profile(g, w, 3, 2, 0) || !has_profile(g, r, 3, 2, 0))
        return false;
      int v = rr.get("v"), q = rr.get("q"), x = rr.get("x"), s = rr.get("s");
      for (int t : {v, q})
        if (!g.has_edge(w, t) || g.degree(t) != 2) return false;
      for (int t : {x, s})
        if (!g.has_edge(r, t) || g.degree(t) != 2) return false;
      if (v == q || x == s) return false;
      return rr.ok && del_matches(m, {w, r, v, q, x, s});
    }
    case 6: {
      int u = rr.get("u"), c = rr.get("c"), a = rr.get("a"), b = rr.get("b");
      if (!rr.ok || g.degree(u) != 3 || a == b) return false;
      if (!g.has_edge(u, c) || g.degree(c) != 2) return false;
      for (int t : {a, b})
        if (!g.has_edge(u, t) || !has_profile(g, t, 3, 2, 0)) return false;
      int d = rr.get("d"), e = rr.get("e"), f = rr.get("f"), h = rr.get("h");
      if (!g.has_edge(a, d) || !g.has_edge(a, e) || d == e) return false;
      if (!g.has_edge(b, f) || !g.has_edge(b, h) || f == h) return false;
      for (int t : {d, e, f, h})
        if (g.degree(t) != 2) return false;
      return rr.ok && del_matches(m, {u, c, a, d, e, b, f, h});
    }
    case 7: {
      int v = rr.get("v"), d = rr.get("d"), e = rr.get("e");
      int a = rr.get("a"), b = rr.get("b"), c = rr.get("c");
      if (!rr.ok || g.degree(v) != 4) return false;
      for (int t : {a, b, c})
        if (!g.has_edge(v, t) || g.degree(t) != 2) return false;
      if (a == b || a == c || b == c) return false;
      if (!thread_step(g, v, d, e) || g.degree(e) != 2) return false;
      return del_matches(m, {v, a, b, c, d, e});
    }
    case 8: {
      int w = rr.get("w"), x = rr.get("x");
      if (!rr.ok || g.degree(w) != 4 || g.degree(x) != 3) return false;
      if (!g.has_edge(w, x)) return false;
      int o = rr.get("o"), p = rr.get("p"), r = rr.get("r"), s = rr.get("s");
      int u = rr.get("u"), v = rr.get("v");
      if (!rr.ok) return false;
      if (!thread_step(g, w, o, p) || g.degree(p) != 2) return false;
      if (!thread_step(g, w, r, s) || g.degree(s) != 2) return false;
      if (!thread_step(g, w, u, v) || g.degree(v) != 2) return false;
      if (o == r || o == u || r == u) return false;
      return del_matches(m, {w, o, p, r, s, u, v});
    }
    case 9: {
      int a = rr.get("a"), b = rr.get("b");
      if (!rr.ok || g.degree(a) != 4 || !g.has_edge(a, b)) return false;
      if (!has_profile(g, b, 3, 2, 0)) return false;
      auto i = rr.indexed("i"), j = rr.indexed("j");
      if (i.size() != 3 || j.size() != 2) return false;
      for (int t : i)
        if (!g.has_edge(a, t) || g.degree(t) != 2) return false;
      for (int t : j)
        if (!g.has_edge(b, t) || g.degree(t) != 2) return false;
      if (sorted_unique(i).size() != 3 || sorted_unique(j).size() != 2)
        return false;
      std::vector<int> del = {a, b};
      del.insert(del.end(), i.begin(), i.end());
      del.insert(del.end(), j.begin(), j.end());
      return del_matches(m, del);
    }
    case 10: {
      int u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || g.degree(u) != 4 || g.degree(v) != 4) return false;
      if (!g.has_edge(u, v) || count_t2(g, v) < 3) return false;
      auto a = rr.indexed("a"), b = rr.indexed("b"), c = rr.indexed("c");
      if (a.size() != 3 || b.size() != 3 || c.size() != 3) return false;
      std::vector<int> del = {u, v};
      for (int t : a) {
        if (!g.has_edge(u, t) || g.degree(t) != 2) return false;
        del.push_back(t);
      }
      for (int i2 = 0; i2 < 3; ++i2) {
        if (!thread_step(g, v, b[i2], c[i2]) || g.degree(c[i2]) != 2)
          return false;
        del.push_back(b[i2]);
        del.push_back(c[i2]);
      }
      return del_matches(m, del);
    }
    case 11: {
      int z = rr.get("z"), u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || g.degree(z) != 4 || u == v) return false;
      for (int t : {u, v})
        if (!g.has_edge(z, t) || g.degree(t) != 4 || count_t2(g, t) < 3)
          return false;
      int d1 = rr.get("d1"), d2 = rr.get("d2");
      int e1 = rr.get("e1"), e2 = rr.get("e2");
      if (!thread_step(g, z, d1, d2) || g.degree(d2) != 2) return false;
      if (!thread_step(g, z, e1, e2) || g.degree(e2) != 2) return false;
      if (d1 == e1) return false;
      auto f = rr.indexed("f"), h = rr.indexed("h");
      if (f.size() != 6 || h.size() != 6) return false;
      std::vector<int> del = {z, u, v, d1, d2, e1, e2};
      for (int i2 = 0; i2 < 6; i2 += 2) {
        if (!thread_step(g, u, f[i2], f[i2 + 1]) ||
            g.degree(f[i2 + 1]) != 2)
          return false;
        if (!thread_step(g, v, h[i2], h[i2 + 1]) ||
            g.degree(h[i2 + 1]) != 2)
          return false;
        del.insert(del.end(), {f[i2], f[i2 + 1], h[i2], h[i2 + 1]});
      }
      return del_matches(m, del);
    }
    case 12: {
      int z = rr.get("z"), u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || g.degree(z) != 4) return false;
      if (!g.has_edge(z, u) || g.degree(u) != 4 || count_t2(g, u) < 3)
        return false;
      if (!g.has_edge(z, v) || !has_profile(g, v, 3, 2, 0)) return false;
      int d1 = rr.get("d1"), d2 = rr.get("d2");
      int e1 = rr.get("e1"), e2 = rr.get("e2");
      if (!thread_step(g, z, d1, d2) || g.degree(d2) != 2) return false;
      if (!thread_step(g, z, e1, e2) || g.degree(e2) != 2) return false;
      if (d1 == e1) return false;
      auto f = rr.indexed("f");
      auto p = rr.indexed("p");
      if (f.size() != 6 || p.size() != 2) return false;
      std::vector<int> del = {z, u, v, d1, d2, e1, e2};
      for (int i2 = 0; i2 < 6; i2 += 2) {
        if (!thread_step(g, u, f[i2], f[i2 + 1]) ||
            g.degree(f[i2 + 1]) != 2)
          return false;
        del.push_back(f[i2]);
        del.push_back(f[i2 + 1]);
      }
      for (int t : p) {
        if (!g.has_edge(v, t) || g.degree(t) != 2) return false;
        del.push_back(t);
      }
      return del_matches(m, del);
    }
    case 13: {
      int u = rr.get("u"), a5 = rr.get("a5");
      if (!rr.ok || g.degree(u) != 5) return false;
      if (!g.has_edge(u, a5) || g.degree(a5) != 2) return false;
      auto b = rr.indexed("b"), c = rr.indexed("c");
      if (b.size() != 4 || c.size() != 4) return false;
      std::vector<int> del = {u, a5};
      for (int i2 = 0; i2 < 4; ++i2) {
        if (!thread_step(g, u, b[i2], c[i2]) || g.degree(c[i2]) != 2)
          return false;
        del.push_back(b[i2]);
        del.push_back(c[i2]);
      }
      return del_matches(m, del);
    }
    case 14: {
      int u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || g.degree(u) != 5 || g.degree(v) != 4) return false;
      if (!g.has_edge(u, v) || count_t2(g, v) < 3) return false;
      auto a = rr.indexed("a"), b = rr.indexed("b");
      if (a.size() != 8 || b.size() != 6) return false;
      std::vector<int> del = {u, v};
      for (int i2 = 0; i2 < 8; i2 += 2) {
        if (!thread_step(g, u, a[i2], a[i2 + 1]) ||
            g.degree(a[i2 + 1]) != 2)
          return false;
        del.push_back(a[i2]);
        del.push_back(a[i2 + 1]);
      }
      for (int i2 = 0; i2 < 6; i2 += 2) {
        if (!thread_step(g, v, b[i2], b[i2 + 1]) ||
            g.degree(b[i2 + 1]) != 2)
          return false;
        del.push_back(b[i2]);
        del.push_back(b[i2 + 1]);
      }
      return del_matches(m, del);
    }
  }
  return false;
}

bool validate_paired_threads(const Graph& g, role_reader& rr, int center,
                             const std::string& first_base,
                             const std::string& second_base, int expect,
                             std::vector<int>& del) {
  auto b = rr.indexed(first_base), c = rr.indexed(second_base);
  if (static_cast<int>(b.size()) != expect ||
      static_cast<int>(c.size()) != expect)
    return false;
  for (int i = 0; i < expect; ++i) {
    if (!thread_step(g, center, b[i], c[i]) || g.degree(c[i]) != 2)
      return false;
    del.push_back(b[i]);
    del.push_back(c[i]);
  }
  return true;
}

bool validate_L5(const Graph& g, const ConfigurationMatch& m) {
  role_reader rr{m.roles};
  switch (m.kind) {
    case 1: {
      int v = rr.get("v");
      return rr.ok && g.degree(v) <= 1 && del_matches(m, {v});
    }
    case 2: {
      int v = rr.get("v"), w = rr.get("w"), u = rr.get("u"), x = rr.get("x");
      if (!rr.ok || g.degree(v) != 2) return false;
      if (!g.has_edge(v, w) || g.degree(w) != 2) return false;
      if (!g.has_edge(v, u) || u == w) return false;
      for (int q : g.neighbors(v))
        if (g.degree(q) > 4) return false;
      if (other_nbr(g, w, v) != x) return false;
      return del_matches(m, {v, w});
    }
    case 3: {
      int v = rr.get("v"), w = rr.get("w"), z = rr.get("z"), u = rr.get("u");
      if (!rr.ok || !has_profile(g, v, 3, 2, 0)) return false;
      for (int q : g.neighbors(v))
        if (g.degree(q) > 3) return false;
      if (!g.has_edge(v, w) || !g.has_edge(v, z) || w == z) return false;
      if (g.degree(w) != 2 || g.degree(z) != 2) return false;
      if (!g.has_edge(v, u)) return false;
      if (other_nbr(g, w, v) != rr.get("x")) return false;
      if (other_nbr(g, z, v) != rr.get("r")) return false;
      return rr.ok && del_matches(m, {v, w, z});
    }
    case 4: {
      int x = rr.get("x");
      if (!rr.ok) return false;
      int k = g.degree(x);
      if (k < 5 || count_t1(g, x) < k) return false;
      int a1 = rr.get("a1"), a2 = rr.get("a2");
      if (!g.has_edge(x, a1) || !g.has_edge(x, a2) || a1 == a2) return false;
      if (g.degree(a1) != 2 || g.degree(a2) != 2) return false;
      std::vector<int> del = {x, a1, a2};
      if (!validate_paired_threads(g, rr, x, "b", "c", k - 2, del))
        return false;
      return del_matches(m, del);
    }
    case 5: {
      int x = rr.get("x"), v = rr.get("v");
      if (!rr.ok) return false;
      int k = g.degree(x);
      if (k < 5 || !g.has_edge(x, v) || g.degree(v) != 3) return false;
      std::vector<int> del = {x};
      if (!validate_paired_threads(g, rr, x, "b", "c", k - 1, del))
        return false;
      // v is structural but survives the reduction
      for (int q : m.deletion_set)
        if (q == v) return false;
      return del_matches(m, del);
    }
    case 6: {
      int u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || !g.has_edge(u, v)) return false;
      int k = g.degree(u), kp = g.degree(v);
      if (k < 5 || kp < 5) return false;
      if (count_t1(g, u) < k - 1 || count_t1(g, v) < kp - 1) return false;
      int a = rr.get("a");
      if (!g.has_edge(u, a) || g.degree(a) != 2) return false;
      int d1 = rr.get("d1"), d2 = rr.get("d2");
      if (!g.has_edge(v, d1) || !g.has_edge(v, d2) || d1 == d2) return false;
      if (g.degree(d1) != 2 || g.degree(d2) != 2) return false;
      std::vector<int> del = {u, v, a, d1, d2};
      if (!validate_paired_threads(g, rr, u, "b", "c", k - 2, del))
        return false;
      if (!validate_paired_threads(g, rr, v, "e", "ee", kp - 3, del))
        return false;
      return del_matches(m, del);
    }
    case 7: {
      int x = rr.get("x"), r = rr.get("r"), s = rr.get("s");
      if (!rr.ok || r == s) return false;
      int k = g.degree(x);
      if (k < 5) return false;
      for (int t : {r, s})
        if (!g.has_edge(x, t) || !has_profile(g, t, 3, 2, 0)) return false;
      int ra = rr.get("ra"), rb = rr.get("rb");
      int sa = rr.get("sa"), sb = rr.get("sb");
      for (int t : {ra, rb})
        if (!g.has_edge(r, t) || g.degree(t) != 2) return false;
      for (int t : {sa, sb})
        if (!g.has_edge(s, t) || g.degree(t) != 2) return false;
      if (ra == rb || sa == sb) return false;
      std::vector<int> del = {x, r, s, ra, rb, sa, sb};
      if (!validate_paired_threads(g, rr, x, "b", "c", k - 2, del))
        return false;
      return del_matches(m, del);
    }
    case 8: {
      int x = rr.get("x"), u = rr.get("u"), v = rr.get("v");
      if (!rr.ok || u == v) return false;
      int k = g.degree(x), ku = g.degree(u), kv = g.degree(v);
      if (k < 5 || ku < 5 || kv < 5) return false;
      if (!g.has_edge(x, u) || !g.has_edge(x, v)) return false;
      if (count_t1(g, u) < ku - 1 || count_t1(g, v) < kv - 1) return false;
      int a = rr.get("a");
      if (!g.has_edge(u, a) || g.degree(a) != 2) return false;
      int d1 = rr.get("d1"), d2 = rr.get("d2");
      if (!g.has_edge(v, d1) || !g.has_edge(v, d2) || d1 == d2) return false;
      if (g.degree(d1) != 2 || g.degree(d2) != 2) return false;
      std::vector<int> del = {x, u, v, a, d1, d2};
      if (!validate_paired_threads(g, rr, x, "b", "c", k - 2, del))
        return false;
      if (!validate_paired_threads(g, rr, v, "e", "ee", kv - 3, del))
        return false;
      if (!validate_paired_threads(g, rr, u, "f", "ff", ku - 2, del))
        return false;
      return del_matches(m, del);
    }
  }
  return false;
}

}  // namespace

bool validate_match(const Graph& g, const ConfigurationMatch& m) {
  if (!all_alive(g, m)) return false;
  switch (m.family) {
    case Family::L2: return validate_L2(g, m);
    case Family::L3: return validate_L3(g, m);
    case Family::L5: return validate_L5(g, m);
  }
  return false;
}

std::string match_to_string(const ConfigurationMatch& m) {
  std::ostringstream out;
  out << "family=" << family_name(m.family) << " kind=" << m.kind
      << " roles{";
  bool first = true;
  for (const auto& [name, v] : m.roles) {
    if (!first) out << " ";
    first = false;
    out << name << "=" << v;
  }
  out << "} delete{";
  first = true;
  for (int v : m.deletion_set) {
    if (!first) out << " ";
    first = false;
    out << v;
  }
  out << "}";
  return out.str();
}

UnavoidabilityReport assert_unavoidable(const Graph& g, Family family,
                                        const Rational& mad_bound,
                                        int girth_min) {
  UnavoidabilityReport rep;
  if (g.alive_count() == 0) {
    rep.hypotheses_met = false;
    rep.pass = true;
    rep.detail = "empty graph";
    return rep;
  }
  bool mad_ok = mad_below(g, mad_bound);
  bool girth_ok = girth_at_least(g, girth_min);
  rep.hypotheses_met = mad_ok && girth_ok;
  if (!rep.hypotheses_met) {
    rep.pass = true;
    rep.detail = mad_ok ? "girth below minimum" : "density bound not met";
    return rep;
  }
  auto m = detect(g, family);
  if (!m) {
    rep.pass = false;
    rep.detail = "no configuration found";
    return rep;
  }
  rep.match = m;
  if (!validate_match(g, *m)) {
    rep.pass = false;
    rep.detail = "match failed validation";
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace stardecomp
