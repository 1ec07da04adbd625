#pragma once

#include "greechie/logic.hpp"
#include "greechie/realization.hpp"
#include "greechie/states.hpp"

#include <set>
#include <string>
#include <vector>

namespace greechie {

/// Implications between atoms that hold in every two-valued state.
///
/// Only non-vacuous rules are kept: the antecedent is true in at least one
/// state. Atoms true in no state are listed in `never_true`. An empty state
/// space sets `explosion` (every rule holds vacuously) and leaves the sets empty.
struct RuleSet {
  bool explosion = false;
  std::set<AtomPair> one_zero;      // s(x)=1 implies s(y)=0
  std::set<AtomPair> one_one;       // s(x)=1 implies s(y)=1, reflexive pairs included
  std::set<AtomPair> equivalences;  // s(x)=s(y) for all s, x<y, both non-vacuous
  std::vector<std::string> never_true;

  bool has_one_zero(const std::string& x, const std::string& y) const {
    return one_zero.count({x, y}) > 0;
  }
  bool has_one_one(const std::string& x, const std::string& y) const {
    return one_one.count({x, y}) > 0;
  }
  bool are_equivalent(const std::string& x, const std::string& y) const {
    return equivalences.count({x, y}) > 0 || equivalences.count({y, x}) > 0;
  }
};

/// Checks every ordered atom pair against the state list of `report`, which
/// must have been produced from `logic`.
RuleSet derive_rules(const StateSpaceReport& report, const Logic& logic);

}  // namespace greechie
