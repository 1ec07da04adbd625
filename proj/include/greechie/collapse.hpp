#pragma once

#include "greechie/logic.hpp"
#include "greechie/realization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greechie {

/// Two atoms that every realization in the declared dimension maps to the
/// same ray, because both are orthogonal to the d-1 mutually orthogonal
/// atoms in `witness`.
struct Identification {
  AtomPair atoms;
  std::vector<std::string> witness;
};

struct CollapseReport {
  std::vector<Identification> identifications;  // sorted by atom pair
  /// Set when two atoms sharing a context end up identified; the logic then
  /// has no realization at all in its dimension.
  std::optional<AtomPair> contradiction;
};

/// Orthogonality is taken from context membership only (x and y orthogonal iff
/// they share a context). Identified atoms are merged and the closure is
/// iterated to a fixpoint. Sound, not complete: an empty report does not
/// prove realizability.
CollapseReport infer_collapses(const Logic& logic);

}  // namespace greechie
