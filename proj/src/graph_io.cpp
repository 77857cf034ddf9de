#include <algorithm>
#include <cctype>
#include <sstream>

#include "stardecomp/graph.hpp"

namespace stardecomp {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Mapping of alive vertex ids to 0..k-1 in ascending order.
std::vector<int> compact_ids(const Graph& g, int& k) {
  std::vector<int> map(g.vertex_count(), -1);
  k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.alive(v)) map[v] = k++;
  return map;
}

}  // namespace

Graph parse_graph6_line(const std::string& raw) {
  std::string s = strip(raw);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw ParseError("graph6: empty line");
  if (s[0] == ':' || s[0] == ';')
    throw ParseError("graph6: sparse6 input is not supported");
  size_t pos = 0;
  long long n;
  auto need = [&](size_t k) {
    if (s.size() < pos + k) throw ParseError("graph6: truncated header");
  };
  auto sixbits = [&](size_t i) -> int {
    unsigned char c = s[i];
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte out of range at position " + std::to_string(i));
    return c - 63;
  };
  if ((unsigned char)s[0] != 126) {
    n = sixbits(0);
    pos = 1;
  } else {
    need(2);
    if ((unsigned char)s[1] == 126)
      throw ParseError("graph6: vertex counts above 258047 are not supported");
    need(4);
    n = ((long long)sixbits(1) << 12) | (sixbits(2) << 6) | sixbits(3);
    pos = 4;
  }
  long long nbits = n * (n - 1) / 2;
  size_t nbytes = (size_t)((nbits + 5) / 6);
  if (s.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) +
                     " data bytes, got " + std::to_string(s.size() - pos));
  Graph g((int)n);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int val = sixbits(pos + (size_t)(bit / 6));
      if ((val >> (5 - bit % 6)) & 1) g.add_edge(i, j);
      ++bit;
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = 0;
  std::vector<int> map = compact_ids(g, n);
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back((char)126);
    out.push_back((char)(63 + ((n >> 12) & 63)));
    out.push_back((char)(63 + ((n >> 6) & 63)));
    out.push_back((char)(63 + (n & 63)));
  } else {
    throw ParseError("graph6: graph too large to serialize");
  }
  // Dense adjacency of the compacted graph for O(1) bit lookup.
  std::vector<char> adj((size_t)n * n, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    for (int u : g.raw_adj(v))
      if (g.alive(u)) adj[(size_t)map[v] * n + map[u]] = 1;
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[(size_t)i * n + j];
      if (++nb == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back((char)((acc << (6 - nb)) + 63));
  return out;
}

static Graph parse_dimacs(const std::string& text) {
  Graph g;
  long long declared_m = -1, seen_m = 0;
  bool have_p = false;
  for (const std::string& raw : split_lines(text)) {
    std::string line = strip(raw);
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "p") {
      std::string kind;
      long long n, m;
      if (!(in >> kind >> n >> m) || kind.rfind("edge", 0) != 0)
        throw ParseError("dimacs: bad problem line: " + line);
      if (have_p) throw ParseError("dimacs: repeated problem line");
      have_p = true;
      declared_m = m;
      g = Graph((int)n);
    } else if (tag == "e") {
      long long u, v;
      if (!(in >> u >> v)) throw ParseError("dimacs: bad edge line: " + line);
      if (!have_p) throw ParseError("dimacs: edge before problem line");
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        throw ParseError("dimacs: edge endpoint out of range: " + line);
      g.add_edge((int)u - 1, (int)v - 1);
      ++seen_m;
    } else {
      throw ParseError("dimacs: unrecognized line: " + line);
    }
  }
  if (!have_p) throw ParseError("dimacs: missing problem line");
  if (declared_m != seen_m)
    throw ParseError("dimacs: declared " + std::to_string(declared_m) +
                     " edges, found " + std::to_string(seen_m));
  return g;
}

std::string to_dimacs(const Graph& g) {
  int n = 0;
  std::vector<int> map = compact_ids(g, n);
  std::ostringstream out;
  out << "p edge " << n << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    for (int u : g.raw_adj(v))
      if (g.alive(u) && u > v)
        out << "e " << map[v] + 1 << " " << map[u] + 1 << "\n";
  }
  return out.str();
}

static Graph parse_edgelist(const std::string& text) {
  long long declared_n = -1;
  std::vector<std::pair<long long, long long>> edges;
  long long max_id = -1;
  bool first_data = true;
  for (const std::string& raw : split_lines(text)) {
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (first_data && line.rfind("n=", 0) == 0) {
      try {
        declared_n = std::stoll(line.substr(2));
      } catch (const std::logic_error&) {
        throw ParseError("edgelist: bad header: " + line);
      }
      first_data = false;
      continue;
    }
    first_data = false;
    std::istringstream in(line);
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("edgelist: bad line: " + line);
    std::string extra;
    if (in >> extra) throw ParseError("edgelist: trailing tokens: " + line);
    if (u < 0 || v < 0) throw ParseError("edgelist: negative vertex id: " + line);
    edges.push_back({u, v});
    max_id = std::max(max_id, std::max(u, v));
  }
  long long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (max_id >= n)
    throw ParseError("edgelist: vertex id " + std::to_string(max_id) +
                     " exceeds declared n=" + std::to_string(n));
  Graph g((int)n);
  for (auto [u, v] : edges) g.add_edge((int)u, (int)v);
  return g;
}

std::string to_edgelist(const Graph& g) {
  int n = 0;
  std::vector<int> map = compact_ids(g, n);
  std::ostringstream out;
  out << "n=" << n << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    for (int u : g.raw_adj(v))
      if (g.alive(u) && u > v) out << map[v] << " " << map[u] << "\n";
  }
  return out.str();
}

Graph parse_graph(const std::string& text, GraphFormat fmt) {
  if (fmt == GraphFormat::Graph6) return parse_graph6_line(text);
  if (fmt == GraphFormat::Dimacs) return parse_dimacs(text);
  if (fmt == GraphFormat::EdgeList) return parse_edgelist(text);
  // Sniff: dimacs lines start with p/c, edgelist data contains spaces or a
  // header, anything else is graph6 (digits sort below the graph6 range, so
  // "0 1" cannot be mistaken for it).
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty graph input");
  std::string first;
  for (const std::string& raw : split_lines(t)) {
    first = strip(raw);
    if (!first.empty()) break;
  }
  if (first.rfind("p ", 0) == 0 || first.rfind("c ", 0) == 0 || first == "c")
    return parse_dimacs(t);
  if (first[0] == '#' || first.rfind("n=", 0) == 0 ||
      first.find(' ') != std::string::npos || first.find('\t') != std::string::npos)
    return parse_edgelist(t);
  return parse_graph6_line(t);
}

}  // namespace stardecomp
