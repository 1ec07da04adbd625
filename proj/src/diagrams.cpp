#include "greechie/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace greechie {

DualGraph tkadlec_dual(const Logic& logic) {
  DualGraph g;
  const auto& contexts = logic.contexts();
  for (const auto& c : contexts) g.nodes.push_back(c.label);
  const auto& members = logic.context_members();
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    for (std::size_t j = i + 1; j < contexts.size(); ++j) {
      std::vector<std::string> shared;
      for (auto a : members[i]) {
        if (std::find(members[j].begin(), members[j].end(), a) != members[j].end()) {
          shared.push_back(logic.atoms()[a].label);
        }
      }
      if (shared.empty()) continue;
      std::sort(shared.begin(), shared.end());
      g.edges.push_back({contexts[i].label, contexts[j].label, std::move(shared)});
    }
  }
  return g;
}

std::string dot_identifier(const std::string& prefix, const std::string& label) {
  std::string id = prefix + "_";
  for (unsigned char ch : label) {
    if (std::isalnum(ch)) {
      id.push_back(static_cast<char>(ch));
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "_%02X", ch);
      id += buf;
    }
  }
  return id;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string emit_dot(const Logic& logic, DotMode mode) {
  std::string out;
  if (mode == DotMode::greechie_incidence) {
    out += "graph greechie {\n";
    for (const auto& a : logic.atoms()) {
      out += "  " + dot_identifier("atom", a.label) + " [shape=circle, label=" + quoted(a.label) +
             "];\n";
    }
    for (const auto& c : logic.contexts()) {
      out += "  " + dot_identifier("ctx", c.label) + " [shape=box, label=" + quoted(c.label) +
             "];\n";
    }
    for (const auto& c : logic.contexts()) {
      for (const auto& m : c.members) {
        out += "  " + dot_identifier("ctx", c.label) + " -- " + dot_identifier("atom", m) + ";\n";
      }
    }
  } else {
    const auto g = tkadlec_dual(logic);
    out += "graph tkadlec {\n";
    for (const auto& n : g.nodes) {
      out += "  " + dot_identifier("ctx", n) + " [shape=box, label=" + quoted(n) + "];\n";
    }
    for (const auto& e : g.edges) {
      out += "  " + dot_identifier("ctx", e.first) + " -- " + dot_identifier("ctx", e.second) +
             " [label=" + quoted(join(e.shared, ",")) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace greechie
