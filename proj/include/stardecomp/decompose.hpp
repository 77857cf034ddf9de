#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "graph.hpp"

namespace stardecomp {

// The three decomposition shapes: forest + one 2-independent set, forest +
// two distance-constrained independent sets, forest + three of them.
enum class Scheme { FI, FI1I2, FI1I2I3 };

const char* scheme_name(Scheme s);
std::vector<std::string> scheme_classes(Scheme s);  // {"F","I"}, {"F","I1","I2"}, ...
int scheme_i_classes(Scheme s);                     // 1, 2 or 3
Family scheme_family(Scheme s);                     // detector family used

struct Partition {
  Scheme scheme = Scheme::FI;
  std::map<std::string, std::vector<int>> classes;  // class name -> vertices
};

struct PartitionVerdict {
  bool ok = true;
  std::string reason;        // empty when ok
  std::vector<int> witness;  // offending pair, or the cycle found in F
};

// Checks the scheme conditions:
//   all schemes: F induces a forest;
//   FI:       I is independent with pairwise distance > 2 in the graph;
//   FI1I2:    I1 pairwise distance > 2 inside the subgraph induced by F + I1,
//             I2 pairwise distance > 2 in the graph;
//   FI1I2I3:  each Ii pairwise distance > 2 in the graph.
// Reports the first violation in a fixed order (forest cycle, then classes
// in scheme order, vertices ascending). Throws std::invalid_argument when
// the classes do not exactly cover the alive vertices or name an unknown
// class.
PartitionVerdict verify_partition(const Graph& g, const Partition& p);

struct ExtensionRecord {
  std::map<int, std::string> placement;            // deleted vertex -> class
  std::vector<std::pair<int, std::string>> moved;  // reassigned survivors
  bool via_search = false;
};

struct ReductionStep {
  ConfigurationMatch match;
  std::vector<std::pair<int, int>> removed_edges;  // u < v, sorted
  ExtensionRecord extension;
};

struct ReductionTrace {
  Scheme scheme = Scheme::FI;
  std::vector<ReductionStep> steps;
};

// Raised when the reduction cannot proceed: either the detector finds no
// configuration in a non-empty graph that meets the density precondition
// ("no-configuration"), or no extension of a deleted set exists
// ("extension-not-found"). Both carry the offending graph for archiving.
struct DecomposeError : std::runtime_error {
  DecomposeError(const std::string& what, std::string g6)
      : std::runtime_error(what), graph6(std::move(g6)) {}
  std::string graph6;
};

// Reduce-and-extend drivers. Preconditions (checked, throw
// std::invalid_argument): mad below 26/11, 18/7, 8/3 respectively; the two
// multi-set schemes also require girth >= 6 unless require_girth is false.
std::pair<Partition, ReductionTrace> decompose_FI(const Graph& g);
std::pair<Partition, ReductionTrace> decompose_FI1I2(const Graph& g,
                                                     bool require_girth = true);
std::pair<Partition, ReductionTrace> decompose_FI1I2I3(const Graph& g,
                                                       bool require_girth = true);

// Backtracking extension: assigns every vertex in `deleted` to F or an
// independent class so that the whole partition verifies; `partial` must be
// a valid partition of g minus `deleted`. Deterministic: vertices ascending,
// class order F, I1, I2, I3; returns the first assignment that verifies.
// Throws DecomposeError on exhaustion.
Partition extend_by_search(const Graph& g, const Partition& partial,
                           const std::vector<int>& deleted, Scheme scheme);

// Forward replay: deleting each step's set removes exactly the recorded
// edges and the final graph is empty.
bool trace_rebuilds(const Graph& g, const ReductionTrace& t);

// One line per class: "F 0 1 2". Classes in scheme order, vertices ascending,
// empty classes kept.
std::string partition_to_string(const Partition& p);
// Inverse of the above; scheme inferred from the class names present.
Partition parse_partition(const std::string& text);
Partition parse_partition(const std::string& text, Scheme scheme);

}  // namespace stardecomp
