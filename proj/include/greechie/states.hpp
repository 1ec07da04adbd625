#pragma once

#include "greechie/logic.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace greechie {

/// Noncontextual {0,1} assignment, indexed like Logic::atoms() (sorted labels).
struct TwoValuedState {
  std::vector<std::uint8_t> values;

  bool operator[](std::size_t atom) const { return values[atom] != 0; }
  /// One character per atom in label order, e.g. "0100110".
  std::string bits() const;

  friend auto operator<=>(const TwoValuedState&, const TwoValuedState&) = default;
};

struct StateSpaceReport {
  std::vector<TwoValuedState> states;  // sorted by bits()
  std::size_t count = 0;
  bool empty = true;
  bool unital = false;      // every atom is true in some state
  bool separating = false;  // every pair of atoms differs in some state
};

struct EnumerationOptions {
  /// Worker threads for the top-level branches; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Complete, exact list of two-valued states: exactly one true atom per
/// context. Depth-first over contexts in declared order with unit propagation.
StateSpaceReport enumerate_states(const Logic& logic, const EnumerationOptions& options = {});

/// Number of two-valued states without materializing them.
std::size_t count_states(const Logic& logic);

/// Streams every state to `visit` in search order (not sorted).
void for_each_state(const Logic& logic, const std::function<void(const TwoValuedState&)>& visit);

/// True iff the assignment has exactly one true atom in every context.
bool is_two_valued(const Logic& logic, const TwoValuedState& state);

}  // namespace greechie
