#include "stardecomp/threads.hpp"

#include <algorithm>
#include <set>

namespace stardecomp {

ThreadWalk walk_thread(const Graph& g, int v, int first) {
  ThreadWalk w;
  int prev = v, cur = first;
  while (g.degree(cur) == 2 && cur != v) {
    w.internals.push_back(cur);
    int nxt = -1;
    for (int u : g.raw_adj(cur))
      if (g.alive(u) && u != prev) {
        nxt = u;
        break;
      }
    prev = cur;
    cur = nxt;
  }
  w.end = cur;
  w.closed = (cur == v);
  return w;
}

VertexProfile classify_vertex(const Graph& g, int v) {
  VertexProfile p;
  p.vertex = v;
  p.degree = g.degree(v);
  p.nbrs = g.neighbors(v);
  for (int u : p.nbrs) {
    p.walks.push_back(walk_thread(g, v, u));
    p.signature.push_back((int)p.walks.back().internals.size());
  }
  std::sort(p.signature.begin(), p.signature.end());
  return p;
}

bool dominates(const std::vector<int>& sig, const std::vector<int>& pattern) {
  if (sig.size() != pattern.size()) return false;
  for (size_t i = 0; i < sig.size(); ++i)
    if (sig[i] < pattern[i]) return false;
  return true;
}

std::vector<Thread> enumerate_threads(const Graph& g) {
  std::vector<Thread> out;
  std::set<std::vector<int>> seen;
  std::vector<char> covered(g.vertex_count(), 0);

  auto sequence = [](const Thread& t) {
    std::vector<int> seq{t.a};
    seq.insert(seq.end(), t.internals.begin(), t.internals.end());
    seq.push_back(t.b);
    return seq;
  };

  for (int a : g.alive_vertices()) {
    if (g.degree(a) == 2) continue;
    for (int first : g.neighbors(a)) {
      ThreadWalk w = walk_thread(g, a, first);
      Thread t;
      t.a = a;
      t.b = w.end;
      t.internals = w.internals;
      std::vector<int> seq = sequence(t);
      std::vector<int> rev(seq.rbegin(), seq.rend());
      if (rev < seq) {
        std::reverse(t.internals.begin(), t.internals.end());
        std::swap(t.a, t.b);
        seq = rev;
      }
      if (!seen.insert(seq).second) continue;
      for (int x : t.internals) covered[x] = 1;
      out.push_back(std::move(t));
    }
  }

  // Remaining degree-2 vertices lie on components that are bare cycles.
  for (int v : g.alive_vertices()) {
    if (g.degree(v) != 2 || covered[v]) continue;
    std::vector<int> cyc{v};
    int prev = v, cur = g.neighbors(v)[0];
    while (cur != v) {
      cyc.push_back(cur);
      int nxt = -1;
      for (int u : g.raw_adj(cur))
        if (g.alive(u) && u != prev) {
          nxt = u;
          break;
        }
      prev = cur;
      cur = nxt;
    }
    int root_pos = (int)(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> rot;
    for (size_t i = 0; i < cyc.size(); ++i)
      rot.push_back(cyc[(root_pos + i) % cyc.size()]);
    // Deterministic direction: walk toward the smaller of the root's two
    // cycle neighbors.
    if (cyc.size() > 2 && rot[1] > rot.back())
      std::reverse(rot.begin() + 1, rot.end());
    Thread t;
    t.a = t.b = rot[0];
    t.internals.assign(rot.begin() + 1, rot.end());
    t.full_cycle = true;
    for (int x : cyc) covered[x] = 1;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace stardecomp
