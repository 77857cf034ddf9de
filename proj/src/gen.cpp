#include "stardecomp/gen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "stardecomp/density.hpp"
#include "stardecomp/star.hpp"

namespace stardecomp {

namespace {

// ---- catalog builders ----

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

Graph spider_graph(const std::vector<int>& legs) {
  Graph g(1);
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider legs must be positive");
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      g.add_vertex();
      int nv = g.vertex_count() - 1;
      g.add_edge(prev, nv);
      prev = nv;
    }
  }
  return g;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

int parse_count(const std::string& s, const std::string& what) {
  if (!all_digits(s) || s.size() > 6)
    throw std::invalid_argument("bad " + what + ": " + s);
  return std::stoi(s);
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// ---- seeded builders behind random_sparse ----

int rand_below(std::mt19937_64& rng, int n) {
  return (int)(rng() % (std::uint64_t)n);
}

Graph build_rejection(std::mt19937_64& rng, const GeneratorSpec& spec) {
  int n = std::max(1, spec.n);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(rand_below(rng, v), v);
  int extra = n >= 4 ? rand_below(rng, 3) : 0;
  for (int t = 0; t < extra; ++t) {
    int u = rand_below(rng, n);
    int w = rand_below(rng, n);
    if (u != w && !g.has_edge(u, w)) g.add_edge(u, w);
  }
  return g;
}

struct Skeleton {
  Graph g;
  int base_girth;
};

Skeleton pick_skeleton(std::mt19937_64& rng) {
  switch (rand_below(rng, 6)) {
    case 0: return {complete_graph(4), 3};
    case 1: return {complete_graph(5), 3};
    case 2: return {complete_bipartite_graph(3, 3), 4};
    case 3: {
      // triangular prism
      Graph g(6);
      for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
      }
      return {g, 3};
    }
    case 4: return {petersen_graph(), 5};
    default: {
      // 3-cube
      Graph g(8);
      for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
          if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
      return {g, 4};
    }
  }
}

Graph subdivide_randomized(const Graph& g, int at_least, int spread,
                           std::mt19937_64& rng) {
  auto verts = g.alive_vertices();
  std::vector<int> idx(g.vertex_count(), -1);
  for (int i = 0; i < (int)verts.size(); ++i) idx[verts[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u : verts)
    for (int w : g.neighbors(u))
      if (u < w) edges.emplace_back(u, w);
  std::sort(edges.begin(), edges.end());
  Graph out((int)verts.size());
  for (auto [u, w] : edges) {
    int times = at_least + (spread > 0 ? rand_below(rng, spread + 1) : 0);
    int prev = idx[u];
    for (int t = 0; t < times; ++t) {
      out.add_vertex();
      int nv = out.vertex_count() - 1;
      out.add_edge(prev, nv);
      prev = nv;
    }
    out.add_edge(prev, idx[w]);
  }
  return out;
}

Graph build_subdivision(std::mt19937_64& rng, const GeneratorSpec& spec) {
  Skeleton sk = pick_skeleton(rng);
  int ns = sk.g.vertex_count();
  int ms = (int)sk.g.edge_count();
  int for_girth = (spec.girth_min + sk.base_girth - 1) / sk.base_girth - 1;
  int for_size = spec.n > ns ? (spec.n - ns) / ms : 0;
  int t = std::max({1, for_girth, for_size});
  for (int bump = 0; bump < 8; ++bump) {
    Graph cand = subdivide_randomized(sk.g, t + bump, 1, rng);
    if (mad_below(cand, spec.mad_bound) && girth_at_least(cand, spec.girth_min))
      return cand;
  }
  return subdivide_randomized(sk.g, t + 8, 1, rng);
}

Graph build_thread_graft(std::mt19937_64& rng, const GeneratorSpec& spec) {
  int gm = std::max(3, spec.girth_min);
  int start = gm + rand_below(rng, 3);
  if (spec.n <= start) return path_graph(std::max(1, spec.n));
  Graph g = cycle_graph(start);
  for (int guard = 0; g.vertex_count() < spec.n && guard < 60 * spec.n; ++guard) {
    int op = rand_below(rng, 4);
    int u = rand_below(rng, g.vertex_count());
    if (op == 0) {
      int len = 1 + rand_below(rng, 3);
      int prev = u;
      for (int t = 0; t < len; ++t) {
        g.add_vertex();
        int nv = g.vertex_count() - 1;
        g.add_edge(prev, nv);
        prev = nv;
      }
    } else if (op <= 2) {
      int w = rand_below(rng, g.vertex_count());
      if (w == u) continue;
      int len = std::max(1, gm - 2) + rand_below(rng, 2);
      auto d = bfs_distance(g, u, w);
      if (d && *d + len + 1 < gm) continue;
      // necessary global-density budget; the caller re-checks exactly
      Rational after(2 * (g.edge_count() + len + 1), g.alive_count() + len);
      if (!(after < spec.mad_bound)) continue;
      int prev = u;
      for (int t = 0; t < len; ++t) {
        g.add_vertex();
        int nv = g.vertex_count() - 1;
        g.add_edge(prev, nv);
        prev = nv;
      }
      g.add_edge(prev, w);
    } else {
      g.add_vertex();
      g.add_edge(u, g.vertex_count() - 1);
    }
  }
  return g;
}

// ---- canonical forms for graphs on at most 9 vertices ----

constexpr int kMaxEnum = 9;

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

// Backtracking minimization of the upper-triangle bitstring over all vertex
// orders: vertices are placed one position at a time and a branch dies as
// soon as its filled prefix exceeds the best complete string seen so far.
struct CanonSearch {
  int n = 0;
  int total_bits = 0;
  std::array<std::uint16_t, kMaxEnum> adj{};
  std::array<int, kMaxEnum> order{};
  std::array<int, kMaxEnum> perm{};
  std::uint64_t best = ~0ULL;

  std::uint64_t run() {
    total_bits = n * (n - 1) / 2;
    if (total_bits == 0) return 0;
    std::array<int, kMaxEnum> deg{};
    for (int v = 0; v < n; ++v) deg[v] = std::popcount((unsigned)adj[v]);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    rec(0, 0, 0ULL);
    return best;
  }

  void rec(int k, std::uint16_t used, std::uint64_t prefix) {
    if (k == n) {
      if (prefix < best) best = prefix;
      return;
    }
    int shift = total_bits - k * (k + 1) / 2;
    for (int t = 0; t < n; ++t) {
      int v = order[t];
      if (used & (std::uint16_t)(1u << v)) continue;
      std::uint64_t row = 0;
      for (int p = 0; p < k; ++p) row = (row << 1) | ((adj[v] >> perm[p]) & 1u);
      std::uint64_t cand = prefix | (row << shift);
      if (cand > (best >> shift) << shift) continue;
      perm[k] = v;
      rec(k + 1, (std::uint16_t)(used | (1u << v)), cand);
    }
  }
};

std::uint64_t value_to_plain(std::uint64_t value, int total_bits) {
  std::uint64_t plain = 0;
  for (int idx = 0; idx < total_bits; ++idx)
    if ((value >> (total_bits - 1 - idx)) & 1ULL) plain |= 1ULL << idx;
  return plain;
}

std::uint64_t canonical_of(const std::array<std::uint16_t, kMaxEnum>& adj, int n) {
  CanonSearch cs;
  cs.n = n;
  cs.adj = adj;
  return value_to_plain(cs.run(), n * (n - 1) / 2);
}

}  // namespace

Graph named(const std::string& raw) {
  std::string name = strip(raw);
  if (name == "petersen") return petersen_graph();
  if (name.size() > 8 && name.rfind("spider(", 0) == 0 && name.back() == ')') {
    std::vector<int> legs;
    std::string inner = name.substr(7, name.size() - 8);
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ','))
      legs.push_back(parse_count(strip(tok), "spider leg"));
    if (legs.empty()) throw std::invalid_argument("spider needs legs: " + name);
    return spider_graph(legs);
  }
  if (name.size() > 5 && name.rfind("sub(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(4, name.size() - 5);
    size_t comma = inner.rfind(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("sub needs a base and a count: " + name);
    Graph base = named(inner.substr(0, comma));
    int times = parse_count(strip(inner.substr(comma + 1)), "subdivision count");
    return subdivide_each_edge(base, times);
  }
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'P' || name[0] == 'K')) {
    std::string rest = name.substr(1);
    size_t comma = rest.find(',');
    if (name[0] == 'K' && comma != std::string::npos) {
      int a = parse_count(rest.substr(0, comma), "part size");
      int b = parse_count(rest.substr(comma + 1), "part size");
      if (a < 1 || b < 1) throw std::invalid_argument("bad part sizes: " + name);
      return complete_bipartite_graph(a, b);
    }
    if (all_digits(rest)) {
      int k = parse_count(rest, "order");
      if (name[0] == 'C') {
        if (k < 3) throw std::invalid_argument("cycles need length >= 3: " + name);
        return cycle_graph(k);
      }
      if (name[0] == 'P') {
        if (k < 1) throw std::invalid_argument("paths need >= 1 vertex: " + name);
        return path_graph(k);
      }
      if (k < 1) throw std::invalid_argument("complete graphs need >= 1 vertex: " + name);
      return complete_graph(k);
    }
  }
  throw std::invalid_argument("unknown graph name: " + name);
}

Graph subdivide_each_edge(const Graph& g, int times) {
  if (times < 0) throw std::invalid_argument("subdivision count must be >= 0");
  auto verts = g.alive_vertices();
  std::vector<int> idx(g.vertex_count(), -1);
  for (int i = 0; i < (int)verts.size(); ++i) idx[verts[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u : verts)
    for (int w : g.neighbors(u))
      if (u < w) edges.emplace_back(u, w);
  std::sort(edges.begin(), edges.end());
  Graph out((int)verts.size());
  for (auto [u, w] : edges) {
    int prev = idx[u];
    for (int t = 0; t < times; ++t) {
      out.add_vertex();
      int nv = out.vertex_count() - 1;
      out.add_edge(prev, nv);
      prev = nv;
    }
    out.add_edge(prev, idx[w]);
  }
  return out;
}

Graph random_sparse(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("random_sparse: n must be positive");
  if (!(Rational(1) < spec.mad_bound))
    throw std::invalid_argument("random_sparse: mad bound must exceed 1");
  std::mt19937_64 rng(spec.seed);
  const int attempts = 4000;
  for (int a = 0; a < attempts; ++a) {
    Graph g;
    switch (spec.method) {
      case GeneratorSpec::Method::subdivision: g = build_subdivision(rng, spec); break;
      case GeneratorSpec::Method::rejection: g = build_rejection(rng, spec); break;
      case GeneratorSpec::Method::thread_graft: g = build_thread_graft(rng, spec); break;
    }
    if (g.alive_count() < 1) continue;
    if (mad_below(g, spec.mad_bound) && girth_at_least(g, spec.girth_min)) return g;
  }
  throw std::runtime_error("random_sparse: constraints unmet after bounded attempts");
}

Graph random_forest(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_forest: n must be >= 0");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    if (rng() % 8 == 0) continue;  // start a fresh component
    g.add_edge(rand_below(rng, v), v);
  }
  return g;
}

std::vector<std::uint64_t> enumerate_canonical_masks(int n) {
  if (n < 1 || n > kMaxEnum)
    throw std::invalid_argument("enumerate_canonical_masks: supported range is 1..9");
  std::vector<std::uint64_t> cur{0};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(cur.size() * 4);
    for (std::uint64_t parent : cur) {
      std::array<std::uint16_t, kMaxEnum> adj{};
      for (int j = 1; j < k - 1; ++j)
        for (int i = 0; i < j; ++i)
          if ((parent >> pair_bit(i, j)) & 1ULL) {
            adj[i] = (std::uint16_t)(adj[i] | (1u << j));
            adj[j] = (std::uint16_t)(adj[j] | (1u << i));
          }
      for (std::uint32_t s = 0; s < (1u << (k - 1)); ++s) {
        auto adj2 = adj;
        adj2[k - 1] = (std::uint16_t)s;
        for (int i = 0; i < k - 1; ++i)
          if (s & (1u << i)) adj2[i] = (std::uint16_t)(adj2[i] | (1u << (k - 1)));
        seen.insert(canonical_of(adj2, k));
      }
    }
    cur.assign(seen.begin(), seen.end());
    std::sort(cur.begin(), cur.end());
  }
  return cur;
}

Graph graph_from_mask(std::uint64_t mask, int n) {
  if (n < 0 || n > kMaxEnum)
    throw std::invalid_argument("graph_from_mask: supported range is 0..9");
  int total_bits = n * (n - 1) / 2;
  if (total_bits < 64 && (mask >> total_bits) != 0)
    throw std::invalid_argument("graph_from_mask: mask has bits beyond the triangle");
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_bit(i, j)) & 1ULL) g.add_edge(i, j);
  return g;
}

std::uint64_t canonical_mask(const Graph& g) {
  auto verts = g.alive_vertices();
  int n = (int)verts.size();
  if (n > kMaxEnum)
    throw std::invalid_argument("canonical_mask: supports at most 9 vertices");
  std::vector<int> idx(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) idx[verts[i]] = i;
  std::array<std::uint16_t, kMaxEnum> adj{};
  for (int u : verts)
    for (int w : g.neighbors(u))
      if (u < w) {
        adj[idx[u]] = (std::uint16_t)(adj[idx[u]] | (1u << idx[w]));
        adj[idx[w]] = (std::uint16_t)(adj[idx[w]] | (1u << idx[u]));
      }
  return canonical_of(adj, n);
}

std::vector<ExtremalRecord> extremal_search(int max_n, int target_colors,
                                            std::istream* stream, int solver_cap) {
  if (target_colors < 1)
    throw std::invalid_argument("extremal_search: target must be >= 1");
  std::vector<ExtremalRecord> out;
  auto consider = [&](Graph g) {
    if (exact_star_chromatic(g, target_colors).has_value()) return;
    ExtremalRecord r;
    r.mad = mad_exact(g).value;
    int cap = solver_cap > 0 ? std::max(solver_cap, target_colors + 1)
                             : std::max(g.alive_count(), 1);
    auto k = exact_star_chromatic(g, cap);
    if (k) {
      if (*k <= target_colors)
        throw std::logic_error("extremal_search: chromatic recheck disagreed");
      r.star_chromatic = *k;
      r.exact = true;
    } else {
      r.star_chromatic = cap + 1;
      r.exact = false;
    }
    r.graph = std::move(g);
    out.push_back(std::move(r));
  };
  if (stream) {
    std::string line;
    while (std::getline(*stream, line)) {
      std::string t = strip(line);
      if (t.empty() || t[0] == '#') continue;
      consider(parse_graph6_line(t));
    }
  } else {
    if (max_n < 1 || max_n > kMaxEnum)
      throw std::invalid_argument("extremal_search: internal enumeration covers 1..9");
    for (int n = 1; n <= max_n; ++n)
      for (std::uint64_t mask : enumerate_canonical_masks(n))
        consider(graph_from_mask(mask, n));
  }
  std::vector<std::string> keys(out.size());
  for (size_t i = 0; i < out.size(); ++i) keys[i] = to_graph6(out[i].graph);
  std::vector<size_t> ord(out.size());
  std::iota(ord.begin(), ord.end(), (size_t)0);
  std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
    if (out[a].mad != out[b].mad) return out[a].mad < out[b].mad;
    int na = out[a].graph.alive_count(), nb = out[b].graph.alive_count();
    if (na != nb) return na < nb;
    return keys[a] < keys[b];
  });
  std::vector<ExtremalRecord> sorted;
  sorted.reserve(out.size());
  for (size_t i : ord) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::string extremal_records_to_tsv(const std::vector<ExtremalRecord>& records) {
  std::ostringstream out;
  for (const ExtremalRecord& r : records) {
    out << to_graph6(r.graph) << '\t' << r.mad.str() << '\t';
    if (r.exact)
      out << r.star_chromatic;
    else
      out << '>' << (r.star_chromatic - 1);
    out << '\n';
  }
  return out.str();
}

}  // namespace stardecomp
