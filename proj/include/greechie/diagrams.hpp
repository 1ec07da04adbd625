#pragma once

#include "greechie/logic.hpp"

#include <string>
#include <vector>

namespace greechie {

struct DualEdge {
  std::string first;
  std::string second;
  std::vector<std::string> shared;  // atoms common to both contexts, sorted
};

/// Contexts as nodes, an edge wherever two contexts share atoms.
struct DualGraph {
  std::vector<std::string> nodes;  // declared context order
  std::vector<DualEdge> edges;     // ordered by (first, second) declaration index
};

DualGraph tkadlec_dual(const Logic& logic);

enum class DotMode { greechie_incidence, tkadlec };

/// Graphviz text. Incidence mode draws atoms as circles and contexts as boxes
/// with one edge per membership; Tkadlec mode draws the dual graph with edges
/// labelled by the shared atoms.
std::string emit_dot(const Logic& logic, DotMode mode);

/// DOT identifier built from [A-Za-z0-9] and escapes; injective on labels.
std::string dot_identifier(const std::string& prefix, const std::string& label);

}  // namespace greechie
