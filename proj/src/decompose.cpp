#include "stardecomp/decompose.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "stardecomp/density.hpp"

namespace stardecomp {

namespace {

constexpr int kNone = -1;  // unassigned
constexpr int kF = 0;

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// distance <= 2 neighborhood of v inside the masked subgraph, v excluded
std::vector<int> mask_ball2(const Graph& g, const std::vector<char>& mask,
                            int v) {
  std::vector<int> dist(g.vertex_count(), -1), q = {v}, out;
  dist[v] = 0;
  for (size_t i = 0; i < q.size(); ++i) {
    int x = q[i];
    if (dist[x] == 2) continue;
    for (int u : g.neighbors(x)) {
      if (!mask[u] || dist[u] >= 0) continue;
      dist[u] = dist[x] + 1;
      out.push_back(u);
      q.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// scheme conditions over a class-id vector (kF = forest, 1.. = independent
// classes); every alive vertex must be assigned
PartitionVerdict verify_cls(const Graph& g, const std::vector<int>& cls,
                            Scheme scheme) {
  PartitionVerdict out;
  int n = g.vertex_count();
  std::vector<char> fmask(n, 0);
  for (int v = 0; v < n; ++v) fmask[v] = g.alive(v) && cls[v] == kF;
  if (auto cyc = find_cycle_subset(g, fmask)) {
    out.ok = false;
    out.reason = "F contains a cycle";
    out.witness = *cyc;
    return out;
  }
  auto names = scheme_classes(scheme);
  std::vector<char> imask(n, 0);  // F + I1, for the induced-distance class
  if (scheme == Scheme::FI1I2)
    for (int v = 0; v < n; ++v)
      imask[v] = g.alive(v) && (cls[v] == kF || cls[v] == 1);
  for (int ci = 1; ci <= scheme_i_classes(scheme); ++ci) {
    bool induced = scheme == Scheme::FI1I2 && ci == 1;
    for (int v : g.alive_vertices()) {
      if (cls[v] != ci) continue;
      std::vector<int> near;
      if (induced) {
        near = mask_ball2(g, imask, v);
      } else {
        near = ball(g, v, 2);
        std::sort(near.begin(), near.end());
      }
      for (int u : near) {
        if (u == v || cls[u] != ci) continue;
        out.ok = false;
        out.reason = "two " + names[ci] + " vertices within distance 2";
        if (induced) out.reason += " in the forest-plus-" + names[ci] + " subgraph";
        out.witness = {v, u};
        return out;
      }
    }
  }
  return out;
}

// --- backtracking over the deleted set -------------------------------------

bool assign_ok(const Graph& g, const std::vector<int>& cls, int v, int c,
               Scheme scheme) {
  if (c == kF) {
    std::vector<int> fn;
    int i1_nbrs = 0;
    for (int u : g.neighbors(v)) {
      if (cls[u] == kF) fn.push_back(u);
      if (cls[u] == 1) ++i1_nbrs;
    }
    // a forest vertex between two same-class independent vertices puts them
    // at induced distance 2, fatal for the induced-metric class
    if (scheme == Scheme::FI1I2 && i1_nbrs >= 2) return false;
    if (fn.size() >= 2) {
      std::vector<char> seen(g.vertex_count(), 0);
      for (int s : fn) {
        if (seen[s]) return false;  // two forest neighbors already connected
        std::vector<int> q = {s};
        seen[s] = 1;
        for (size_t i = 0; i < q.size(); ++i)
          for (int u : g.neighbors(q[i]))
            if (cls[u] == kF && !seen[u]) {
              seen[u] = 1;
              q.push_back(u);
            }
      }
    }
    return true;
  }
  if (scheme == Scheme::FI1I2 && c == 1) {
    // independence plus distance > 2 inside the current forest + I1 set;
    // that set only grows, so a hit now stays a hit
    std::vector<int> dist(g.vertex_count(), -1), q = {v};
    dist[v] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int x = q[i];
      if (dist[x] == 2) continue;
      for (int u : g.neighbors(x)) {
        if ((cls[u] != kF && cls[u] != 1) || dist[u] >= 0) continue;
        if (cls[u] == 1) return false;
        dist[u] = dist[x] + 1;
        q.push_back(u);
      }
    }
    return true;
  }
  for (int u : ball(g, v, 2))
    if (cls[u] == c) return false;
  return true;
}

bool search_rec(const Graph& g, std::vector<int>& cls,
                const std::vector<int>& order, size_t idx, Scheme scheme) {
  if (idx == order.size()) return verify_cls(g, cls, scheme).ok;
  int v = order[idx];
  for (int c = 0; c <= scheme_i_classes(scheme); ++c) {
    if (!assign_ok(g, cls, v, c, scheme)) continue;
    cls[v] = c;
    if (search_rec(g, cls, order, idx + 1, scheme)) return true;
    cls[v] = kNone;
  }
  return false;
}

bool search_assign(const Graph& g, std::vector<int>& cls,
                   const std::vector<int>& order, Scheme scheme) {
  return search_rec(g, cls, order, 0, scheme);
}

// --- per-configuration placement rules -------------------------------------

struct Candidate {
  std::vector<std::pair<int, int>> place;  // deleted vertex -> class id
  std::vector<std::pair<int, int>> moves;  // survivor -> new class id
};

struct Fast {
  const Graph& g;
  std::vector<int> cls;  // scratch; survivors assigned, deleted kNone
  Candidate cand;
  int nclasses;

  bool ok(int v) const {
    return v >= 0 && v < g.vertex_count() && g.alive(v) && cls[v] != kNone;
  }
  int c(int v) const { return ok(v) ? cls[v] : kNone; }
  bool in_i(int v) const { return c(v) > 0; }
  void place(int v, int cl) {
    cls[v] = cl;
    cand.place.emplace_back(v, cl);
  }
  void move(int v, int cl) {
    cls[v] = cl;
    cand.moves.emplace_back(v, cl);
  }
  // lowest independent class with nothing assigned within distance 2 of v
  int free_class(int v) const {
    std::vector<char> blocked(nclasses + 1, 0);
    for (int u : ball(g, v, 2))
      if (cls[u] > 0) blocked[cls[u]] = 1;
    for (int cl = 1; cl <= nclasses; ++cl)
      if (!blocked[cl]) return cl;
    return kNone;
  }
};

int role(const ConfigurationMatch& m, const std::string& name) {
  auto it = m.roles.find(name);
  return it == m.roles.end() ? -1 : it->second;
}

bool fast_L2(Fast& f, const ConfigurationMatch& m) {
  const Graph& g = f.g;
  switch (m.kind) {
    case 0:
      return true;  // pendant vertex, forest placement via the epilogue
    case 1: {
      int x = role(m, "x"), s1 = role(m, "s1"), s2 = role(m, "s2");
      if (!f.ok(s1) || !f.ok(s2)) return false;
      if (!f.in_i(s1) && !f.in_i(s2)) f.place(x, 1);
      return true;
    }
    case 2: {
      int x = role(m, "x"), y = role(m, "y"), z = role(m, "z");
      int s1 = role(m, "s1"), s2 = role(m, "s2");
      if (z == x) {  // the long thread folds back into a triangle
        f.place(y, 1);
        return true;
      }
      if (!f.ok(s1) || !f.ok(s2) || !f.ok(z)) return false;
      bool a = f.in_i(s1), b = f.in_i(s2);
      if (a && b) return true;  // everything to the forest
      if (!a && !b) {
        f.place(x, 1);
        return true;
      }
      if (!f.in_i(z)) f.place(y, 1);
      return true;
    }
    case 3:
      f.place(role(m, "x"), 1);
      return true;
    case 4: {
      int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"),
          x = role(m, "x");
      if (!f.ok(u) || bad3(g, u)) return false;
      if (f.in_i(u)) {
        // u sits inside a thread of the reduced graph; pull it out of the
        // independent set, breaking the thread elsewhere if the forest
        // would otherwise close up
        std::vector<int> tn;
        for (int q : g.neighbors(u))
          if (q != v && q != w && q != x) tn.push_back(q);
        if (tn.size() != 2) return false;
        auto walk = [&](int start) -> std::optional<std::pair<int, int>> {
          int prev = u, cur = start, len = 1;
          while (true) {
            std::vector<int> nb;
            for (int q : g.neighbors(cur))
              if (q != v && q != w && q != x) nb.push_back(q);
            if (nb.size() != 2) return std::make_pair(cur, len);
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            if (nxt == u) return std::nullopt;  // thread closes on itself
            prev = cur;
            cur = nxt;
            if (++len > g.vertex_count()) return std::nullopt;
          }
        };
        auto w1 = walk(tn[0]), w2 = walk(tn[1]);
        if (!w1 || !w2 || !f.ok(w1->first) || !f.ok(w2->first)) return false;
        if (f.in_i(w1->first) || f.in_i(w2->first)) {
          f.move(u, kF);
        } else {
          int y = w1->second >= 3 ? tn[0] : (w2->second >= 3 ? tn[1] : -1);
          if (y < 0 || !f.ok(y)) return false;
          f.move(u, kF);
          f.move(y, 1);
        }
      }
      f.place(x, 1);
      return true;
    }
    default:
      return false;  // deleted cycles go straight to the search
  }
}

bool fast_L3(Fast& f, const ConfigurationMatch& m) {
  const Graph& g = f.g;
  switch (m.kind) {
    case 1:
      return true;
    case 2: {
      int w = role(m, "w"), u = role(m, "u"), y = role(m, "y");
      if (!f.ok(u) || !f.ok(y)) return false;
      if (f.c(u) == kF && f.c(y) == kF) f.place(w, 1);
      return true;
    }
    case 3: {
      int w = role(m, "w");
      int cons[3] = {role(m, "u"), role(m, "y"), role(m, "t")};
      int n_forest = 0, lone = kNone;
      for (int q : cons) {
        if (!f.ok(q)) return false;
        if (f.c(q) == kF)
          ++n_forest;
        else
          lone = f.c(q);
      }
      if (n_forest == 3)
        f.place(w, 1);
      else if (n_forest == 2)
        f.place(w, lone == 1 ? 2 : 1);
      return true;  // with one or no forest second, everything to the forest
    }
    case 4: {
      int v = role(m, "v"), w = role(m, "w");
      int u = role(m, "u"), x = role(m, "x"), y = role(m, "y"),
          z = role(m, "z");
      if (!f.ok(u) || !f.ok(x) || !f.ok(y) || !f.ok(z)) return false;
      if (f.c(u) == kF && f.c(x) == kF) {
        if (f.in_i(y) && f.in_i(z)) return true;
        if (f.c(y) != 1 && f.c(z) != 1) {
          f.place(w, 1);
          return true;
        }
        if (f.c(y) != 2 && f.c(z) != 2) {
          f.place(w, 2);
          return true;
        }
      }
      (void)v;
      return true;
    }
    case 5: {
      int w = role(m, "w"), r = role(m, "r");
      int u = role(m, "u"), p = role(m, "p"), y = role(m, "y"),
          t = role(m, "t");
      int cons[4] = {u, p, y, t};
      int n_forest = 0, lone_v = kNone, lone_c = kNone;
      for (int q : cons) {
        if (!f.ok(q)) return false;
        if (f.c(q) == kF) {
          ++n_forest;
        } else {
          lone_v = q;
          lone_c = f.c(q);
        }
      }
      if (n_forest == 4) {
        f.place(w, 1);
        f.place(r, 2);
        return true;
      }
      if (n_forest == 3) {
        // the center across from the lone independent second inherits its
        // class; the blocking path to it runs through forest vertices only
        if (lone_v == y || lone_v == t)
          f.place(w, lone_c);
        else
          f.place(r, lone_c);
        return true;
      }
      return false;
    }
    case 8: {
      int w = role(m, "w"), x = role(m, "x"), y = role(m, "y"),
          z = role(m, "z");
      if (!f.ok(x) || !f.ok(y) || !f.ok(z)) return false;
      auto pick = [&]() -> int {
        for (int ii = 1; ii <= 2; ++ii)
          if (f.c(y) != ii && f.c(z) != ii) return ii;
        return kNone;
      };
      if (f.c(x) == 2) {
        f.place(w, 1);
        return true;
      }
      if (f.c(x) == 1) {
        if (f.c(y) != 2 && f.c(z) != 2) {
          f.place(w, 2);
          return true;
        }
        f.move(x, kF);
      }
      int ii = pick();
      if (ii == kNone) return false;
      f.place(w, ii);
      return true;
    }
    case 10: {
      int u = role(m, "u"), v = role(m, "v");
      int near[3] = {role(m, "y1"), role(m, "y2"), role(m, "y3")};
      int far[3] = {role(m, "y4"), role(m, "y5"), role(m, "y6")};
      bool blocked[3] = {false, false, false};
      for (int q : near) {
        if (!f.ok(q)) return false;
        if (f.in_i(q)) blocked[f.c(q)] = true;
      }
      int cu = !blocked[1] ? 1 : (!blocked[2] ? 2 : kNone);
      if (cu == kNone) return false;
      int far_i = 0, far_cls = kNone;
      for (int q : far) {
        if (!f.ok(q)) return false;
        if (f.in_i(q)) {
          ++far_i;
          far_cls = f.c(q);
        }
      }
      if (far_i >= 2) {
        f.place(u, cu);
        return true;
      }
      int su = (far_i == 1 && !blocked[far_cls]) ? far_cls : cu;
      f.place(u, su);
      f.place(v, su == 1 ? 2 : 1);
      return true;
    }
    case 11: {
      int z = role(m, "z"), u = role(m, "u"), v = role(m, "v");
      if (g.has_edge(u, v)) return false;
      f.place(u, 1);
      f.place(v, 1);
      f.place(z, 2);
      return true;
    }
    case 12: {
      int z = role(m, "z"), u = role(m, "u"), v = role(m, "v");
      int q1 = role(m, "q1"), q2 = role(m, "q2");
      if (!f.ok(q1) || !f.ok(q2)) return false;
      if (f.c(q1) != kF || f.c(q2) != kF || g.has_edge(u, v)) return false;
      f.place(u, 1);
      f.place(v, 1);
      f.place(z, 2);
      return true;
    }
    case 13: {
      int u = role(m, "u"), y5 = role(m, "y5");
      if (!f.ok(y5)) return false;
      f.place(u, f.c(y5) == 1 ? 2 : 1);
      return true;
    }
    case 14:
      f.place(role(m, "u"), 1);
      f.place(role(m, "v"), 2);
      return true;
    default:
      return false;  // kinds 6, 7, 9 are search-only
  }
}

bool fast_L5(Fast& f, const ConfigurationMatch& m) {
  switch (m.kind) {
    case 1:
      return true;
    case 2: {
      int v = role(m, "v"), u = role(m, "u"), x = role(m, "x");
      if (!f.ok(u) || !f.ok(x)) return false;
      if (f.in_i(u) || f.in_i(x)) return true;
      int cv = f.free_class(v);
      if (cv != kNone) f.place(v, cv);
      return true;
    }
    case 3: {
      int v = role(m, "v"), u = role(m, "u"), x = role(m, "x"),
          r = role(m, "r");
      if (!f.ok(u) || !f.ok(x) || !f.ok(r)) return false;
      int in_sets = (f.in_i(x) ? 1 : 0) + (f.in_i(r) ? 1 : 0);
      for (int q : f.g.neighbors(u))
        if (q != v && f.in_i(q)) ++in_sets;
      if (in_sets >= 3) return true;
      int cv = f.free_class(v);
      if (cv == kNone && f.in_i(u)) {
        f.move(u, kF);
        cv = f.free_class(v);
      }
      if (cv != kNone) f.place(v, cv);
      return true;
    }
    case 4: {
      int x = role(m, "x");
      int cx = f.free_class(x);
      if (cx == kNone) return false;
      f.place(x, cx);
      return true;
    }
    case 5: {
      int x = role(m, "x"), v = role(m, "v");
      if (!f.ok(v)) return false;
      int cx = f.free_class(x);
      if (cx == kNone && f.in_i(v)) {
        f.move(v, kF);
        cx = f.free_class(x);
      }
      if (cx == kNone) return false;
      f.place(x, cx);
      return true;
    }
    case 6: {
      int u = role(m, "u"), v = role(m, "v");
      int cv = f.free_class(v);
      if (cv == kNone) return false;
      f.place(v, cv);
      int cu = f.free_class(u);
      if (cu == kNone) return false;
      f.place(u, cu);
      return true;
    }
    case 7: {
      int x = role(m, "x"), r = role(m, "r"), s = role(m, "s");
      int cr = f.free_class(r);
      if (cr == kNone) return false;
      f.place(r, cr);
      int cs = f.free_class(s);
      if (cs != kNone) f.place(s, cs);  // else the epilogue keeps s in F
      int cx = f.free_class(x);
      if (cx == kNone) return false;
      f.place(x, cx);
      return true;
    }
    case 8: {
      int x = role(m, "x"), u = role(m, "u"), v = role(m, "v");
      int cv = f.free_class(v);
      if (cv == kNone) return false;
      f.place(v, cv);
      int cu = f.free_class(u);
      if (cu == kNone) return false;
      f.place(u, cu);
      int cx = f.free_class(x);
      if (cx == kNone) return false;
      f.place(x, cx);
      return true;
    }
    default:
      return false;
  }
}

std::optional<Candidate> fast_path(const Graph& g, const ConfigurationMatch& m,
                                   const std::vector<int>& cls, Scheme scheme) {
  Fast f{g, cls, {}, scheme_i_classes(scheme)};
  bool got = false;
  switch (m.family) {
    case Family::L2: got = fast_L2(f, m); break;
    case Family::L3: got = fast_L3(f, m); break;
    case Family::L5: got = fast_L5(f, m); break;
  }
  if (!got) return std::nullopt;
  for (int v : m.deletion_set)
    if (f.cls[v] == kNone) f.place(v, kF);
  return f.cand;
}

// --- reduce-and-extend driver ----------------------------------------------

Partition assemble(const Graph& g, const std::vector<int>& cls, Scheme scheme) {
  Partition p;
  p.scheme = scheme;
  auto names = scheme_classes(scheme);
  for (const auto& nm : names) p.classes[nm];
  for (int v : g.alive_vertices()) p.classes[names[cls[v]]].push_back(v);
  return p;
}

// pendant vertices of the reduced graph, and 2-vertices beside them, are
// safest in the forest before a deleted cycle comes back
void pendant_sweep(const Graph& reduced, std::vector<int>& cls, Scheme scheme,
                   std::vector<std::pair<int, std::string>>& moved) {
  auto names = scheme_classes(scheme);
  for (int v : reduced.alive_vertices()) {
    bool low = reduced.degree(v) <= 1;
    if (!low && reduced.degree(v) == 2)
      for (int u : reduced.neighbors(v))
        if (reduced.degree(u) <= 1) low = true;
    if (!low || cls[v] <= 0) continue;
    int old = cls[v];
    cls[v] = kF;
    if (verify_cls(reduced, cls, scheme).ok)
      moved.emplace_back(v, names[kF]);
    else
      cls[v] = old;
  }
}

void extend_step(const Graph& work, std::vector<int>& cls, ReductionStep& st,
                 Scheme scheme) {
  auto names = scheme_classes(scheme);
  if (auto cand = fast_path(work, st.match, cls, scheme)) {
    std::vector<std::pair<int, int>> saved;
    for (const auto& pr : cand->moves) {
      saved.emplace_back(pr.first, cls[pr.first]);
      cls[pr.first] = pr.second;
    }
    for (const auto& pr : cand->place) {
      saved.emplace_back(pr.first, cls[pr.first]);
      cls[pr.first] = pr.second;
    }
    if (verify_cls(work, cls, scheme).ok) {
      for (const auto& pr : cand->place)
        st.extension.placement[pr.first] = names[pr.second];
      for (const auto& pr : cand->moves)
        st.extension.moved.emplace_back(pr.first, names[pr.second]);
      st.extension.via_search = false;
      return;
    }
    for (auto it = saved.rbegin(); it != saved.rend(); ++it)
      cls[it->first] = it->second;
  }
  if (search_assign(work, cls, st.match.deletion_set, scheme)) {
    for (int v : st.match.deletion_set)
      st.extension.placement[v] = names[cls[v]];
    st.extension.via_search = true;
    return;
  }
  // free the recorded survivors too and search the widened set
  std::vector<int> wide = st.match.deletion_set;
  for (const auto& [nm, rv] : st.match.roles)
    if (rv >= 0 && rv < work.vertex_count() && work.alive(rv) &&
        cls[rv] != kNone)
      wide.push_back(rv);
  wide = sorted_unique(std::move(wide));
  if (wide.size() > st.match.deletion_set.size() && wide.size() <= 16) {
    std::vector<std::pair<int, int>> saved;
    for (int v : wide)
      if (cls[v] != kNone) {
        saved.emplace_back(v, cls[v]);
        cls[v] = kNone;
      }
    if (search_assign(work, cls, wide, scheme)) {
      for (int v : st.match.deletion_set)
        st.extension.placement[v] = names[cls[v]];
      for (const auto& pr : saved)
        if (cls[pr.first] != pr.second)
          st.extension.moved.emplace_back(pr.first, names[cls[pr.first]]);
      st.extension.via_search = true;
      return;
    }
    for (const auto& pr : saved) cls[pr.first] = pr.second;
  }
  throw DecomposeError(
      "extension-not-found: no valid placement of the deleted set (" +
          match_to_string(st.match) + ")",
      to_graph6(work));
}

std::pair<Partition, ReductionTrace> run(const Graph& input, Scheme scheme) {
  Family fam = scheme_family(scheme);
  ReductionTrace trace;
  trace.scheme = scheme;
  Graph work = input;
  while (work.alive_count() > 0) {
    auto m = detect(work, fam);
    if (!m)
      throw DecomposeError("no-configuration: detector " + family_name(fam) +
                               " found nothing in a non-empty graph",
                           to_graph6(work));
    if (m->deletion_set.empty())
      throw DecomposeError("internal: empty deletion set", to_graph6(work));
    ReductionStep st;
    st.match = *m;
    std::vector<std::pair<int, int>> es;
    for (int v : m->deletion_set)
      for (int u : work.neighbors(v))
        es.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    st.removed_edges = std::move(es);
    for (int v : m->deletion_set) work.remove_vertex(v);
    trace.steps.push_back(std::move(st));
  }
  std::vector<int> cls(input.vertex_count(), kNone);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    ReductionStep& st = *it;
    if (st.match.family == Family::L2 && st.match.kind == 5)
      pendant_sweep(work, cls, scheme, st.extension.moved);
    for (auto rt = st.match.deletion_set.rbegin();
         rt != st.match.deletion_set.rend(); ++rt)
      work.restore_vertex(*rt);
    extend_step(work, cls, st, scheme);
  }
  Partition part = assemble(work, cls, scheme);
  auto verdict = verify_partition(input, part);
  if (!verdict.ok)
    throw DecomposeError(
        "internal: assembled partition failed verification: " + verdict.reason,
        to_graph6(input));
  return {part, trace};
}

int class_index(const std::vector<std::string>& names, const std::string& nm) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == nm) return (int)i;
  return -1;
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::FI: return "FI";
    case Scheme::FI1I2: return "FI1I2";
    default: return "FI1I2I3";
  }
}

std::vector<std::string> scheme_classes(Scheme s) {
  switch (s) {
    case Scheme::FI: return {"F", "I"};
    case Scheme::FI1I2: return {"F", "I1", "I2"};
    default: return {"F", "I1", "I2", "I3"};
  }
}

int scheme_i_classes(Scheme s) {
  switch (s) {
    case Scheme::FI: return 1;
    case Scheme::FI1I2: return 2;
    default: return 3;
  }
}

Family scheme_family(Scheme s) {
  switch (s) {
    case Scheme::FI: return Family::L2;
    case Scheme::FI1I2: return Family::L3;
    default: return Family::L5;
  }
}

PartitionVerdict verify_partition(const Graph& g, const Partition& p) {
  auto names = scheme_classes(p.scheme);
  std::vector<int> cls(g.vertex_count(), kNone);
  for (const auto& [nm, verts] : p.classes) {
    int id = class_index(names, nm);
    if (id < 0) throw std::invalid_argument("unknown class name: " + nm);
    for (int v : verts) {
      if (v < 0 || v >= g.vertex_count() || !g.alive(v))
        throw std::invalid_argument("class " + nm +
                                    " names a vertex outside the graph: " +
                                    std::to_string(v));
      if (cls[v] != kNone)
        throw std::invalid_argument("vertex in two classes: " +
                                    std::to_string(v));
      cls[v] = id;
    }
  }
  for (int v : g.alive_vertices())
    if (cls[v] == kNone)
      throw std::invalid_argument("vertex not covered by any class: " +
                                  std::to_string(v));
  return verify_cls(g, cls, p.scheme);
}

std::pair<Partition, ReductionTrace> decompose_FI(const Graph& g) {
  if (g.alive_count() > 0 && !mad_below(g, Rational(26, 11)))
    throw std::invalid_argument("maximum average degree must be below 26/11");
  return run(g, Scheme::FI);
}

std::pair<Partition, ReductionTrace> decompose_FI1I2(const Graph& g,
                                                     bool require_girth) {
  if (g.alive_count() > 0 && !mad_below(g, Rational(18, 7)))
    throw std::invalid_argument("maximum average degree must be below 18/7");
  if (require_girth && !girth_at_least(g, 6))
    throw std::invalid_argument("girth must be at least 6");
  return run(g, Scheme::FI1I2);
}

std::pair<Partition, ReductionTrace> decompose_FI1I2I3(const Graph& g,
                                                       bool require_girth) {
  if (g.alive_count() > 0 && !mad_below(g, Rational(8, 3)))
    throw std::invalid_argument("maximum average degree must be below 8/3");
  if (require_girth && !girth_at_least(g, 6))
    throw std::invalid_argument("girth must be at least 6");
  return run(g, Scheme::FI1I2I3);
}

Partition extend_by_search(const Graph& g, const Partition& partial,
                           const std::vector<int>& deleted, Scheme scheme) {
  if (partial.scheme != scheme)
    throw std::invalid_argument("partial partition scheme mismatch");
  std::vector<int> del = sorted_unique(deleted);
  Graph reduced = g;
  for (int v : del) {
    if (v < 0 || v >= g.vertex_count() || !g.alive(v))
      throw std::invalid_argument("deleted set names a vertex outside the graph");
    reduced.remove_vertex(v);
  }
  auto verdict = verify_partition(reduced, partial);
  if (!verdict.ok)
    throw std::invalid_argument("partial partition invalid on the reduced graph: " +
                                verdict.reason);
  auto names = scheme_classes(scheme);
  std::vector<int> cls(g.vertex_count(), kNone);
  for (const auto& [nm, verts] : partial.classes) {
    int id = class_index(names, nm);
    for (int v : verts) cls[v] = id;
  }
  if (!search_assign(g, cls, del, scheme))
    throw DecomposeError("extension-not-found: no valid placement of the deleted set",
                         to_graph6(g));
  return assemble(g, cls, scheme);
}

bool trace_rebuilds(const Graph& g, const ReductionTrace& t) {
  Graph work = g;
  for (const auto& st : t.steps) {
    std::vector<std::pair<int, int>> es;
    for (int v : st.match.deletion_set) {
      if (v < 0 || v >= work.vertex_count() || !work.alive(v)) return false;
      for (int u : work.neighbors(v))
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (es != st.removed_edges) return false;
    for (int v : st.match.deletion_set) work.remove_vertex(v);
  }
  return work.alive_count() == 0;
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (const auto& nm : scheme_classes(p.scheme)) {
    out += nm;
    auto it = p.classes.find(nm);
    if (it != p.classes.end()) {
      auto vs = it->second;
      std::sort(vs.begin(), vs.end());
      for (int v : vs) out += " " + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

Partition parse_partition(const std::string& text, Scheme scheme) {
  Partition p;
  p.scheme = scheme;
  auto names = scheme_classes(scheme);
  for (const auto& nm : names) p.classes[nm];
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string nm;
    if (!(ls >> nm)) continue;
    if (class_index(names, nm) < 0)
      throw std::invalid_argument("unknown class name: " + nm);
    int v;
    while (ls >> v) p.classes[nm].push_back(v);
    if (!ls.eof()) throw std::invalid_argument("bad vertex token in class " + nm);
  }
  return p;
}

Partition parse_partition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool plain_i = false, i3 = false, i12 = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string nm;
    if (!(ls >> nm)) continue;
    if (nm == "I") plain_i = true;
    if (nm == "I3") i3 = true;
    if (nm == "I1" || nm == "I2") i12 = true;
  }
  Scheme s = plain_i ? Scheme::FI
                     : (i3 ? Scheme::FI1I2I3 : (i12 ? Scheme::FI1I2 : Scheme::FI));
  return parse_partition(text, s);
}

}  // namespace stardecomp
