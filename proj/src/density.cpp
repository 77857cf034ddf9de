#include "stardecomp/density.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace stardecomp {

namespace {

struct dinic {
  struct arc {
    int to;
    long long cap;
  };
  std::vector<arc> arcs;
  std::vector<std::vector<int>> head;
  std::vector<int> level, it;

  explicit dinic(int n) : head(n), level(n), it(n) {}

  void add_arc(int u, int v, long long cap_uv, long long cap_vu) {
    head[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap_uv});
    head[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, cap_vu});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head[u]) {
        const arc& a = arcs[id];
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  long long dfs(int u, int t, long long lim) {
    if (u == t) return lim;
    long long pushed = 0;
    for (int& i = it[u]; i < static_cast<int>(head[u].size()); ++i) {
      int id = head[u][i];
      arc& a = arcs[id];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      long long got = dfs(a.to, t, std::min(lim - pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs[id ^ 1].cap += got;
        pushed += got;
        if (pushed == lim) break;
      }
    }
    if (pushed == 0) level[u] = -1;
    return pushed;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      long long f;
      while ((f = dfs(s, t, INT64_MAX)) > 0) total += f;
    }
    return total;
  }

  std::vector<char> source_side(int s) {
    std::vector<char> seen(head.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head[u]) {
        const arc& a = arcs[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
      }
    }
    return seen;
  }
};

long long edges_within(const Graph& g, const std::vector<int>& verts) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : verts) in[v] = 1;
  long long cnt = 0;
  for (int v : verts)
    for (int w : g.neighbors(v))
      if (in[w]) ++cnt;
  return cnt / 2;
}

// simplest rational strictly inside the open interval (lo, hi);
// requires 0 <= lo < hi; "simplest" minimizes the denominator, then the
// numerator, so a result with denominator > n proves the interval holds no
// fraction with denominator <= n
Rational simplest_between(const Rational& lo, const Rational& hi) {
  long long fl = lo.num / lo.den;
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  Rational lo_f = lo - Rational(fl);
  Rational hi_f = hi - Rational(fl);
  if (lo_f.num == 0) {
    long long k = hi_f.den / hi_f.num + 1;
    return Rational(fl) + Rational(1, k);
  }
  Rational inner = simplest_between(Rational(hi_f.den, hi_f.num),
                                    Rational(lo_f.den, lo_f.num));
  return Rational(fl) + Rational(inner.den, inner.num);
}

struct density_probe {
  bool feasible = false;
  std::vector<int> witness;
};

// decides whether some nonempty subset S has |E(S)|/|S| > a/b, by min cut:
// cut(S) = n*m*b + 2*(a|S| - b|E(S)|), so max-flow < n*m*b exactly when a
// denser-than-a/b subset exists; the residual source side is such a set
density_probe density_above(const Graph& g, const std::vector<int>& verts,
                            long long a, long long b) {
  int n = static_cast<int>(verts.size());
  long long m = g.edge_count();
  std::vector<int> idx(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) idx[verts[i]] = i;
  int s = n, t = n + 1;
  dinic net(n + 2);
  for (int i = 0; i < n; ++i) {
    int v = verts[i];
    net.add_arc(s, i, m * b, 0);
    net.add_arc(i, t, m * b + 2 * a - static_cast<long long>(g.degree(v)) * b,
                0);
    for (int w : g.neighbors(v))
      if (w > v) net.add_arc(i, idx[w], b, b);
  }
  long long target = static_cast<long long>(n) * m * b;
  long long flow = net.max_flow(s, t);
  density_probe r;
  r.feasible = flow < target;
  if (r.feasible) {
    auto side = net.source_side(s);
    for (int i = 0; i < n; ++i)
      if (side[i]) r.witness.push_back(verts[i]);
  }
  return r;
}

}  // namespace

MadResult mad_exact(const Graph& g) {
  auto verts = g.alive_vertices();
  if (verts.empty()) throw std::invalid_argument("mad: graph has no vertices");
  long long n = static_cast<long long>(verts.size());
  long long m = g.edge_count();
  if (m == 0) return {Rational(0), verts};

  // invariant: lo is the density of `witness`, no subset exceeds hi; all
  // achievable densities have denominator <= n, so once the open interval
  // (lo, hi) holds no such fraction the answer is lo or hi, settled by one
  // final probe at lo
  Rational lo(m, n);
  std::vector<int> witness = verts;
  Rational hi(n);
  while (lo != hi) {
    Rational mid = simplest_between(lo, hi);
    if (mid.den > n) {
      auto r = density_above(g, verts, lo.num, lo.den);
      if (r.feasible) {
        witness = r.witness;
        lo = Rational(edges_within(g, witness),
                      static_cast<long long>(witness.size()));
      }
      break;
    }
    auto r = density_above(g, verts, mid.num, mid.den);
    if (r.feasible) {
      witness = r.witness;
      lo = Rational(edges_within(g, witness),
                    static_cast<long long>(witness.size()));
    } else {
      hi = mid;
    }
  }
  return {lo * Rational(2), witness};
}

MadResult mad_bruteforce(const Graph& g, int max_n) {
  auto verts = g.alive_vertices();
  if (verts.empty()) throw std::invalid_argument("mad: graph has no vertices");
  if (static_cast<int>(verts.size()) > max_n)
    throw std::invalid_argument("mad_bruteforce: graph larger than max_n");
  int k = static_cast<int>(verts.size());
  std::vector<uint64_t> nb(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        nb[i] |= 1ull << j;
        nb[j] |= 1ull << i;
      }
  Rational best(0);
  uint64_t best_mask = 1;
  for (uint64_t mask = 1; mask < (1ull << k); ++mask) {
    long long deg_sum = 0, c = 0;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        ++c;
        deg_sum += __builtin_popcountll(nb[i] & mask);
      }
    Rational cur(deg_sum, c);  // deg_sum counts each inner edge twice
    if (best < cur) {
      best = cur;
      best_mask = mask;
    }
  }
  MadResult r;
  r.value = best;
  for (int i = 0; i < k; ++i)
    if (best_mask >> i & 1) r.witness.push_back(verts[i]);
  return r;
}

bool mad_below(const Graph& g, const Rational& bound) {
  return mad_exact(g).value < bound;
}

Rational subgraph_mad(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty())
    throw std::invalid_argument("subgraph_mad: empty vertex set");
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count() || !g.alive(v))
      throw std::invalid_argument("subgraph_mad: vertex not alive");
  return Rational(2 * edges_within(g, verts),
                  static_cast<long long>(verts.size()));
}

}  // namespace stardecomp
