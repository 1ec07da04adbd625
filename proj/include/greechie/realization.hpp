#pragma once

#include "greechie/logic.hpp"
#include "greechie/ray.hpp"

#include <string>
#include <vector>

namespace greechie {

struct AtomPair {
  std::string first;
  std::string second;

  friend auto operator<=>(const AtomPair&, const AtomPair&) = default;
};

struct NonOrthogonalPair {
  AtomPair atoms;
  Quad product;
};

struct ContextCheck {
  std::string context;
  std::vector<NonOrthogonalPair> offending;  // empty iff the context passes

  bool orthogonal() const { return offending.empty(); }
};

struct RealizationReport {
  std::vector<ContextCheck> contexts;
  std::vector<AtomPair> collinear;  // distinct atoms spanning the same ray

  bool passed() const;
  std::size_t orthogonal_contexts() const;
};

/// Exact check that every context is pairwise orthogonal and no two atoms are
/// collinear. Throws AbstractLogicError if some atom has no ray.
RealizationReport verify_realization(const Logic& logic);

struct LabeledRay {
  std::string label;
  Ray ray;
};

struct Completion {
  Logic logic;
  /// Maximal orthogonal cliques that do not span the space and were not
  /// needed to cover an atom; sorted, members sorted.
  std::vector<std::vector<std::string>> partial_cliques;
};

/// Builds contexts from the orthogonality relation of the given rays.
///
/// Contexts are the maximal mutually orthogonal subsets of size `dim`
/// (complete bases). An atom lying in no complete basis is covered by the
/// smaller maximal cliques containing it, which then appear as non-maximal
/// contexts. Contexts are labelled a, b, ... in lexicographic order of their
/// sorted members. Throws LogicError on collinear inputs, wrong lengths, or an
/// atom orthogonal to nothing.
Completion complete_contexts(const std::vector<LabeledRay>& vectors, int dim);

}  // namespace greechie
