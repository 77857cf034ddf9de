#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stardecomp/config.hpp"
#include "stardecomp/graph.hpp"
#include "stardecomp/rational.hpp"

namespace stardecomp {

// one charge movement; endpoint -1 is the bank (L2 only)
struct Transfer {
  int from = -1;
  int to = -1;
  Rational amount;
  std::string rule;  // "L2.R1" .. "L5.R3"

  bool operator==(const Transfer& o) const {
    return from == o.from && to == o.to && amount == o.amount && rule == o.rule;
  }
};

struct ChargeLedger {
  Family family = Family::L2;
  std::vector<Rational> initial;       // vertex degree at the start
  std::vector<Rational> final_charge;  // after every rule has fired
  Rational bank;                       // stays 0 outside L2
  std::vector<Transfer> transfers;     // ascending by giver, deterministic
};

// the density bound each family's rules are calibrated against:
// 26/11, 18/7, 8/3
Rational charge_threshold(Family family);

// replays the family's discharging rules literally on any graph
ChargeLedger apply_rules(const Graph& g, Family family);

// exact conservation: sum(final) + bank == sum(degree)
bool charge_identity(const ChargeLedger& led);

// re-derives every logged transfer's guard from the graph (giver degree,
// recipient profile, the relation between them, the amount) and checks the
// log is exactly what the rules produce -- no missing or extra entries
bool recheck_transfers(const Graph& g, const ChargeLedger& led);

struct DischargeReport {
  Family family = Family::L2;
  bool vacuous = false;  // a reducible configuration exists; rules not binding
  std::optional<ConfigurationMatch> found;
  bool conservation_ok = true;
  bool bank_ok = true;
  bool min_ok = true;
  bool pass = false;
  Rational threshold;
  Rational min_charge;  // over alive vertices, when any
  int min_vertex = -1;
  ChargeLedger ledger;
  std::string detail;
};

// configuration-free graphs must finish with every vertex at or above the
// family threshold and, for L2, a solvent bank; a graph that still contains
// a configuration passes vacuously since reduction applies there instead
DischargeReport audit_discharging(const Graph& g, Family family);

}  // namespace stardecomp
