#include "greechie/logic.hpp"

#include "greechie/error.hpp"

#include <algorithm>
#include <set>

namespace greechie {

Logic::Logic(int dimension, std::vector<Atom> atoms, std::vector<Context> contexts)
    : dimension_(dimension), atoms_(std::move(atoms)), contexts_(std::move(contexts)) {
  if (dimension_ < 3) {
    throw LogicError("dimension must be at least 3, got " + std::to_string(dimension_));
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    if (a.label.empty()) throw LogicError("empty atom label");
    if (!atom_index_.emplace(a.label, i).second) {
      throw LogicError("duplicate atom label '" + a.label + "'");
    }
    if (a.ray && a.ray->dimension() != static_cast<std::size_t>(dimension_)) {
      throw LogicError("atom '" + a.label + "' has " + std::to_string(a.ray->dimension()) +
                       " components, dimension is " + std::to_string(dimension_));
    }
  }

  incidence_.assign(atoms_.size(), {});
  std::set<std::string> context_labels;
  std::set<std::vector<std::size_t>> member_sets;
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    const auto& ctx = contexts_[c];
    if (!context_labels.insert(ctx.label).second) {
      throw LogicError("duplicate context label '" + ctx.label + "'");
    }
    if (ctx.members.size() < 2) {
      throw LogicError("context '" + ctx.label + "' has fewer than 2 members");
    }
    if (ctx.members.size() > static_cast<std::size_t>(dimension_)) {
      throw LogicError("context '" + ctx.label + "' has " + std::to_string(ctx.members.size()) +
                       " members, more than the dimension " + std::to_string(dimension_));
    }
    std::vector<std::size_t> idx;
    for (const auto& m : ctx.members) {
      const auto found = find_atom(m);
      if (!found) {
        throw LogicError("context '" + ctx.label + "' references undeclared atom '" + m + "'");
      }
      if (std::find(idx.begin(), idx.end(), *found) != idx.end()) {
        throw LogicError("context '" + ctx.label + "' lists atom '" + m + "' twice");
      }
      idx.push_back(*found);
    }
    auto key = idx;
    std::sort(key.begin(), key.end());
    if (!member_sets.insert(key).second) {
      throw LogicError("context '" + ctx.label + "' duplicates the member set of another context");
    }
    for (auto i : idx) incidence_[i].push_back(c);
    members_.push_back(std::move(idx));
  }

  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (incidence_[i].empty()) {
      throw LogicError("atom '" + atoms_[i].label + "' appears in no context");
    }
  }
}

std::optional<std::size_t> Logic::find_atom(std::string_view label) const {
  const auto it = atom_index_.find(label);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Logic::atom_index(std::string_view label) const {
  const auto found = find_atom(label);
  if (!found) throw LogicError("unknown atom '" + std::string(label) + "'");
  return *found;
}

std::optional<std::size_t> Logic::find_context(std::string_view label) const {
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    if (contexts_[c].label == label) return c;
  }
  return std::nullopt;
}

bool Logic::is_realized() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.ray.has_value(); });
}

void Logic::require_realized() const {
  for (const auto& a : atoms_) {
    if (!a.ray) throw AbstractLogicError(a.label);
  }
}

std::vector<std::size_t> Logic::non_maximal_contexts() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    if (members_[c].size() < static_cast<std::size_t>(dimension_)) out.push_back(c);
  }
  return out;
}

bool Logic::share_context(std::size_t a, std::size_t b) const {
  const auto& ca = incidence_[a];
  const auto& cb = incidence_[b];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ca.size() && j < cb.size()) {
    if (ca[i] == cb[j]) return true;
    if (ca[i] < cb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace greechie
