#include "greechie/collapse.hpp"

#include <algorithm>
#include <numeric>

namespace greechie {

namespace {

class Classes {
 public:
  explicit Classes(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Atom indices are in label order, so the smaller root is the class's
  // smallest label.
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Step {
  std::vector<std::size_t> witness;
  std::vector<std::size_t> common;
};

// Depth-first over cliques of `size` classes in increasing index order,
// collecting every clique with at least two common orthogonal classes.
void find_collapses(const std::vector<std::vector<bool>>& orth, std::size_t size,
                    std::vector<std::size_t>& clique, std::vector<Step>& steps) {
  const std::size_t n = orth.size();
  if (clique.size() == size) {
    std::vector<std::size_t> common;
    for (std::size_t z = 0; z < n; ++z) {
      if (std::find(clique.begin(), clique.end(), z) != clique.end()) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t s) { return orth[z][s]; })) {
        common.push_back(z);
      }
    }
    if (common.size() >= 2) steps.push_back({clique, std::move(common)});
    return;
  }
  const std::size_t start = clique.empty() ? 0 : clique.back() + 1;
  for (std::size_t v = start; v < n; ++v) {
    if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t s) { return orth[v][s]; })) {
      continue;
    }
    clique.push_back(v);
    find_collapses(orth, size, clique, steps);
    clique.pop_back();
  }
}

}  // namespace

CollapseReport infer_collapses(const Logic& logic) {
  CollapseReport report;
  const auto& atoms = logic.atoms();
  const std::size_t n = atoms.size();
  const std::size_t witness_size = static_cast<std::size_t>(logic.dimension()) - 1;
  Classes classes(n);

  for (;;) {
    std::vector<std::size_t> roots;
    std::vector<std::size_t> slot(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (classes.find(a) == a) roots.push_back(a);
    }
    for (std::size_t a = 0; a < n; ++a) {
      slot[a] = static_cast<std::size_t>(
          std::lower_bound(roots.begin(), roots.end(), classes.find(a)) - roots.begin());
    }

    std::vector<std::vector<bool>> orth(roots.size(), std::vector<bool>(roots.size(), false));
    for (const auto& members : logic.context_members()) {
      for (auto x : members) {
        for (auto y : members) {
          if (x == y) continue;
          if (slot[x] == slot[y]) {
            report.contradiction = AtomPair{atoms[std::min(x, y)].label, atoms[std::max(x, y)].label};
            break;
          }
          orth[slot[x]][slot[y]] = true;
        }
        if (report.contradiction) break;
      }
      if (report.contradiction) break;
    }
    if (report.contradiction) break;

    // All collapses visible in this snapshot are applied before the
    // orthogonality relation is rebuilt on the merged classes.
    std::vector<std::size_t> clique;
    std::vector<Step> steps;
    find_collapses(orth, witness_size, clique, steps);
    bool merged = false;
    for (const auto& step : steps) {
      std::vector<std::string> witness;
      for (auto w : step.witness) witness.push_back(atoms[roots[w]].label);
      const auto keep = roots[step.common.front()];
      for (std::size_t k = 1; k < step.common.size(); ++k) {
        const auto other = roots[step.common[k]];
        if (classes.find(keep) == classes.find(other)) continue;
        report.identifications.push_back({{atoms[keep].label, atoms[other].label}, witness});
        classes.merge(keep, other);
        merged = true;
      }
    }
    if (!merged) break;
  }

  std::sort(report.identifications.begin(), report.identifications.end(),
            [](const Identification& a, const Identification& b) { return a.atoms < b.atoms; });
  return report;
}

}  // namespace greechie
