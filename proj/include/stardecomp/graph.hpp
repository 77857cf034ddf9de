#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stardecomp {

// Simple undirected graph over vertex ids 0..n-1. Vertex deletion is an
// alive flag: ids are stable, neighbor queries filter dead endpoints, and
// restore_vertex undoes a removal exactly. Loops and parallel edges are
// rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n), alive_(n, 1), deg_(n, 0), alive_n_(n) {}

  int vertex_count() const { return (int)adj_.size(); }
  int alive_count() const { return alive_n_; }
  long long edge_count() const { return alive_m_; }

  void add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    deg_.push_back(0);
    ++alive_n_;
  }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  bool alive(int v) const { return alive_[v] != 0; }
  int degree(int v) const { return deg_[v]; }

  // Neighbor list including dead endpoints; callers filter with alive().
  const std::vector<int>& raw_adj(int v) const { return adj_[v]; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(adj_[v].size());
    for (int u : adj_[v])
      if (alive_[u]) out.push_back(u);
    return out;
  }

  void remove_vertex(int v);
  void restore_vertex(int v);

  std::vector<int> alive_vertices() const {
    std::vector<int> out;
    out.reserve(alive_n_);
    for (int v = 0; v < (int)adj_.size(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
  std::vector<int> deg_;  // alive degree
  int alive_n_ = 0;
  long long alive_m_ = 0;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { Auto, Graph6, Dimacs, EdgeList };

Graph parse_graph(const std::string& text, GraphFormat fmt = GraphFormat::Auto);
Graph parse_graph6_line(const std::string& line);
std::string to_graph6(const Graph& g);   // alive subgraph, ids compacted
std::string to_dimacs(const Graph& g);
std::string to_edgelist(const Graph& g);

// --- basic structure queries (all respect alive flags) ---

std::vector<std::vector<int>> components(const Graph& g);

// Distance between alive vertices; nullopt when disconnected.
std::optional<int> bfs_distance(const Graph& g, int from, int to);

// All alive vertices within distance <= radius of v (excluding v itself).
std::vector<int> ball(const Graph& g, int v, int radius);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

inline bool girth_at_least(const Graph& g, int k) {
  auto c = girth(g);
  return !c.has_value() || *c >= k;
}

// Forest test over an alive subset mask (empty mask = all alive vertices).
bool is_forest(const Graph& g);
bool is_forest_subset(const Graph& g, const std::vector<char>& in_set);

// A cycle in the induced alive subgraph restricted to in_set, as a vertex
// sequence; nullopt when that subgraph is a forest.
std::optional<std::vector<int>> find_cycle_subset(const Graph& g,
                                                  const std::vector<char>& in_set);

}  // namespace stardecomp
