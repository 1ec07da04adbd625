#pragma once

#include "greechie/ray.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greechie {

/// Elementary proposition; optionally realized as a ray.
struct Atom {
  std::string label;
  std::optional<Ray> ray;
};

/// Block of mutually compatible atoms, referenced by label.
struct Context {
  std::string label;
  std::vector<std::string> members;
};

/// A finite pasting of contexts in a Hilbert space of fixed dimension.
///
/// The constructor enforces the structural invariants (unique labels, declared
/// members, 2 <= |context| <= dimension, distinct member sets, every atom used,
/// ray lengths equal to the dimension) and throws LogicError otherwise.
/// Geometric consistency of the rays is left to verify_realization.
///
/// Atoms are stored sorted by label; contexts keep their declared order.
class Logic {
 public:
  Logic(int dimension, std::vector<Atom> atoms, std::vector<Context> contexts);

  int dimension() const { return dimension_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Context>& contexts() const { return contexts_; }

  std::optional<std::size_t> find_atom(std::string_view label) const;
  /// Throws LogicError for an unknown label.
  std::size_t atom_index(std::string_view label) const;
  const Atom& atom(std::string_view label) const { return atoms_[atom_index(label)]; }
  std::optional<std::size_t> find_context(std::string_view label) const;

  /// Context members as atom indices, in declared member order.
  const std::vector<std::vector<std::size_t>>& context_members() const { return members_; }
  /// For every atom, the indices of the contexts containing it (ascending).
  const std::vector<std::vector<std::size_t>>& atom_contexts() const { return incidence_; }

  /// True iff every atom carries a ray.
  bool is_realized() const;
  /// Throws AbstractLogicError naming the first atom without a ray.
  void require_realized() const;

  /// Indices of contexts with fewer members than the dimension.
  std::vector<std::size_t> non_maximal_contexts() const;

  /// True iff the two atoms share at least one context.
  bool share_context(std::size_t a, std::size_t b) const;

 private:
  int dimension_;
  std::vector<Atom> atoms_;
  std::vector<Context> contexts_;
  std::map<std::string, std::size_t, std::less<>> atom_index_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<std::size_t>> incidence_;
};

}  // namespace greechie
