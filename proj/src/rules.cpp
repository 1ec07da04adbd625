#include "greechie/rules.hpp"

#include "greechie/error.hpp"

#include <cstdint>

namespace greechie {

namespace {

using Mask = std::vector<std::uint64_t>;

bool any(const Mask& m) {
  for (auto w : m) {
    if (w) return true;
  }
  return false;
}

bool disjoint(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace

RuleSet derive_rules(const StateSpaceReport& report, const Logic& logic) {
  RuleSet rules;
  const auto& atoms = logic.atoms();
  for (const auto& s : report.states) {
    if (s.values.size() != atoms.size()) {
      throw LogicError("state report does not belong to this logic");
    }
  }
  if (report.states.empty()) {
    rules.explosion = true;
    return rules;
  }

  // Bit k of truth[x] is set iff state k assigns x the value 1.
  const std::size_t words = (report.states.size() + 63) / 64;
  std::vector<Mask> truth(atoms.size(), Mask(words, 0));
  for (std::size_t k = 0; k < report.states.size(); ++k) {
    for (std::size_t x = 0; x < atoms.size(); ++x) {
      if (report.states[k][x]) truth[x][k / 64] |= std::uint64_t{1} << (k % 64);
    }
  }

  for (std::size_t x = 0; x < atoms.size(); ++x) {
    if (!any(truth[x])) {
      rules.never_true.push_back(atoms[x].label);
      continue;
    }
    for (std::size_t y = 0; y < atoms.size(); ++y) {
      const AtomPair pair{atoms[x].label, atoms[y].label};
      if (disjoint(truth[x], truth[y])) rules.one_zero.insert(pair);
      if (subset(truth[x], truth[y])) {
        rules.one_one.insert(pair);
        if (x < y && truth[x] == truth[y]) rules.equivalences.insert(pair);
      }
    }
  }
  return rules;
}

}  // namespace greechie
