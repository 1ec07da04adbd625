#include "greechie/realization.hpp"

#include "greechie/error.hpp"
#include "greechie/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace greechie {

bool RealizationReport::passed() const {
  return collinear.empty() && orthogonal_contexts() == contexts.size();
}

std::size_t RealizationReport::orthogonal_contexts() const {
  return static_cast<std::size_t>(std::count_if(
      contexts.begin(), contexts.end(), [](const ContextCheck& c) { return c.orthogonal(); }));
}

RealizationReport verify_realization(const Logic& logic) {
  logic.require_realized();
  RealizationReport report;
  const auto& atoms = logic.atoms();
  for (std::size_t c = 0; c < logic.contexts().size(); ++c) {
    ContextCheck check{logic.contexts()[c].label, {}};
    const auto& members = logic.context_members()[c];
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& x = atoms[members[i]];
        const auto& y = atoms[members[j]];
        Quad p = inner_product(*x.ray, *y.ray);
        if (!p.is_zero()) check.offending.push_back({{x.label, y.label}, std::move(p)});
      }
    }
    report.contexts.push_back(std::move(check));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (rays_collinear(*atoms[i].ray, *atoms[j].ray)) {
        report.collinear.push_back({atoms[i].label, atoms[j].label});
      }
    }
  }
  return report;
}

namespace {

using Clique = std::vector<std::size_t>;

// Bron-Kerbosch with pivoting over an adjacency matrix.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, Clique& r, std::vector<std::size_t> p,
                     std::vector<std::size_t> x, std::vector<Clique>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (auto u : *set) {
      std::size_t deg = 0;
      for (auto v : p) deg += adj[u][v] ? 1 : 0;
      if (deg >= best) {
        best = deg;
        pivot = u;
      }
    }
  }
  const auto candidates = p;
  for (auto v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> np;
    std::vector<std::size_t> nx;
    for (auto u : p) {
      if (adj[v][u]) np.push_back(u);
    }
    for (auto u : x) {
      if (adj[v][u]) nx.push_back(u);
    }
    r.push_back(v);
    maximal_cliques(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

Completion complete_contexts(const std::vector<LabeledRay>& vectors, int dim) {
  if (dim < 3) throw LogicError("dimension must be at least 3");
  const std::size_t n = vectors.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vectors[a].label < vectors[b].label; });
  std::vector<const LabeledRay*> rays;
  for (auto i : order) rays.push_back(&vectors[i]);

  for (std::size_t i = 0; i < n; ++i) {
    if (rays[i]->ray.dimension() != static_cast<std::size_t>(dim)) {
      throw LogicError("ray '" + rays[i]->label + "' has " + std::to_string(rays[i]->ray.dimension()) +
                       " components, expected " + std::to_string(dim));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_collinear(rays[i]->ray, rays[j]->ray)) {
        throw LogicError("rays '" + rays[j]->label + "' and '" + rays[i]->label + "' are collinear");
      }
    }
  }

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adj[i][j] = adj[j][i] = rays_orthogonal(rays[i]->ray, rays[j]->ray);
    }
  }

  std::vector<Clique> cliques;
  Clique r;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  maximal_cliques(adj, r, all, {}, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());

  std::vector<Clique> chosen;
  std::vector<Clique> partial;
  std::vector<bool> covered(n, false);
  for (const auto& c : cliques) {
    if (c.size() == static_cast<std::size_t>(dim)) {
      chosen.push_back(c);
      for (auto i : c) covered[i] = true;
    }
  }
  for (const auto& c : cliques) {
    if (c.size() == static_cast<std::size_t>(dim)) continue;
    if (c.size() < 2) {
      throw LogicError("ray '" + rays[c.front()]->label + "' is orthogonal to no other ray");
    }
    const bool needed = std::any_of(c.begin(), c.end(), [&](std::size_t i) { return !covered[i]; });
    (needed ? chosen : partial).push_back(c);
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<Atom> atoms;
  for (const auto* lr : rays) atoms.push_back({lr->label, lr->ray});
  std::vector<Context> contexts;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    Context ctx{alpha_label(k, false), {}};
    for (auto i : chosen[k]) ctx.members.push_back(rays[i]->label);
    contexts.push_back(std::move(ctx));
  }
  std::vector<std::vector<std::string>> partial_labels;
  for (const auto& c : partial) {
    std::vector<std::string> labels;
    for (auto i : c) labels.push_back(rays[i]->label);
    partial_labels.push_back(std::move(labels));
  }
  return {Logic(dim, std::move(atoms), std::move(contexts)), std::move(partial_labels)};
}

}  // namespace greechie
