#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"

namespace stardecomp {

enum class Family { L2, L3, L5 };

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

// one detected reducible configuration: role names map structural positions
// to vertex ids (role vertices may coincide where the structure allows);
// deletion_set lists the vertices removed by the reduction, each of which
// also appears under some role name
struct ConfigurationMatch {
  Family family = Family::L2;
  int kind = 0;
  std::map<std::string, int> roles;
  std::vector<int> deletion_set;  // sorted, unique
};

// induced subgraph J over the set A of chain-like low vertices:
// degree-2 vertices with a degree-2 neighbor, degree-3 vertices with two
// long threads, and mutually adjacent degree-3 vertices with one long and
// one short thread
struct JSubgraph {
  std::vector<int> a_vertices;             // sorted
  std::vector<std::pair<int, int>> edges;  // induced, u < v, lex sorted
  std::vector<int> j_degree;               // by vertex id, -1 outside A
  std::vector<char> in_a;                  // by vertex id
};

JSubgraph build_J(const Graph& g);

// family detectors: first match in fixed kind order, vertices scanned
// ascending; kind numbering is stable and 0 = low-degree vertex for L2,
// 1-based elsewhere
std::optional<ConfigurationMatch> detect_L2(const Graph& g);
std::optional<ConfigurationMatch> detect_L3(const Graph& g);
std::optional<ConfigurationMatch> detect_L5(const Graph& g);
std::optional<ConfigurationMatch> detect(const Graph& g, Family family);

// independent re-check of a match against the graph structure
bool validate_match(const Graph& g, const ConfigurationMatch& m);

std::string match_to_string(const ConfigurationMatch& m);

struct UnavoidabilityReport {
  bool hypotheses_met = false;
  bool pass = false;
  std::optional<ConfigurationMatch> match;
  std::string detail;
};

// if g meets the family's density/girth hypotheses, the detector must match
UnavoidabilityReport assert_unavoidable(const Graph& g, Family family,
                                        const Rational& mad_bound,
                                        int girth_min);

// shared structural predicates (also used by discharge rules)
bool has_profile(const Graph& g, int v, int k, int ones, int twos);
bool bad3(const Graph& g, int v);

}  // namespace stardecomp
