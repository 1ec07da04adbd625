#include "greechie/diagrams.hpp"
#include "greechie/generators.hpp"
#include "greechie/gls.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

namespace greechie {
namespace {

using testing::corpus;

// Minimal structural check of the subset of DOT we emit.
struct DotShape {
  bool valid = true;
  std::set<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

DotShape parse_dot(const std::string& text) {
  static const std::regex header(R"(^graph (greechie|tkadlec) \{$)");
  static const std::regex node(R"(^  ([A-Za-z0-9_]+) \[shape=(circle|box), label="([^"\\]|\\.)*"\];$)");
  static const std::regex edge(R"(^  ([A-Za-z0-9_]+) -- ([A-Za-z0-9_]+)( \[label="([^"\\]|\\.)*"\])?;$)");
  DotShape shape;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.size() < 2 || !std::regex_match(lines.front(), header) || lines.back() != "}") {
    shape.valid = false;
    return shape;
  }
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    std::smatch m;
    if (lines[i].empty()) continue;
    if (std::regex_match(lines[i], m, node)) {
      shape.nodes.insert(m[1]);
    } else if (std::regex_match(lines[i], m, edge)) {
      shape.edges.emplace_back(m[1], m[2]);
    } else {
      shape.valid = false;
    }
  }
  for (const auto& [a, b] : shape.edges)
    if (!shape.nodes.count(a) || !shape.nodes.count(b)) shape.valid = false;
  return shape;
}

TEST(TkadlecDual, StarIsAStar) {
  const auto g = tkadlec_dual(make_star(4));
  EXPECT_EQ(g.nodes.size(), 5u);
  ASSERT_EQ(g.edges.size(), 4u);
  for (const auto& e : g.edges) {
    EXPECT_EQ(e.first, "a");
    EXPECT_EQ(e.shared.size(), 1u);
  }
}

TEST(TkadlecDual, SingleContext) {
  const auto g = tkadlec_dual(parse_logic("dim 3\natom A\natom B\natom C\ncontext a A B C\n"));
  EXPECT_EQ(g.nodes, std::vector<std::string>{"a"});
  EXPECT_TRUE(g.edges.empty());
}

TEST(TkadlecDual, Gamma1Edges) {
  const auto g = tkadlec_dual(corpus("gamma1.gls"));
  std::set<std::tuple<std::string, std::string, std::string>> got;
  for (const auto& e : g.edges) {
    ASSERT_EQ(e.shared.size(), 1u);
    got.emplace(e.first, e.second, e.shared.front());
  }
  const std::set<std::tuple<std::string, std::string, std::string>> expected{
      {"a", "b", "C"}, {"a", "f", "A"}, {"a", "g", "B"}, {"b", "c", "E"},
      {"c", "d", "G"}, {"d", "e", "I"}, {"d", "g", "H"}, {"e", "f", "K"}};
  EXPECT_EQ(got, expected);
}

TEST(TkadlecDual, CabelloEdgeCount) {
  const auto l = corpus("cabello18.gls");
  const auto g = tkadlec_dual(l);
  EXPECT_EQ(g.nodes.size(), 9u);
  // Each of the 18 atoms lies in exactly two contexts and no two contexts
  // share more than one atom, so there is one edge per atom.
  EXPECT_EQ(g.edges.size(), 18u);
  for (const auto& e : g.edges) EXPECT_EQ(e.shared.size(), 1u);
}

TEST(EmitDot, IncidenceSingleContext) {
  const auto dot = emit_dot(parse_logic("dim 3\natom A\natom B\natom C\ncontext a A B C\n"),
                            DotMode::greechie_incidence);
  const auto shape = parse_dot(dot);
  EXPECT_TRUE(shape.valid) << dot;
  EXPECT_EQ(shape.nodes.size(), 4u);
  EXPECT_EQ(shape.edges.size(), 3u);
  EXPECT_EQ(dot.rfind("graph greechie {", 0), 0u);
}

TEST(EmitDot, WellFormedAcrossCorpus) {
  for (const char* name : testing::kCorpusFiles) {
    const auto l = corpus(name);
    const auto inc = parse_dot(emit_dot(l, DotMode::greechie_incidence));
    EXPECT_TRUE(inc.valid) << name;
    EXPECT_EQ(inc.nodes.size(), l.atoms().size() + l.contexts().size()) << name;
    std::size_t memberships = 0;
    for (const auto& c : l.contexts()) memberships += c.members.size();
    EXPECT_EQ(inc.edges.size(), memberships) << name;

    const auto dual = parse_dot(emit_dot(l, DotMode::tkadlec));
    EXPECT_TRUE(dual.valid) << name;
    EXPECT_EQ(dual.nodes.size(), l.contexts().size()) << name;
    EXPECT_EQ(dual.edges.size(), tkadlec_dual(l).edges.size()) << name;
  }
}

TEST(EmitDot, PrimedLabelsAreEscaped) {
  const auto l = corpus("gamma3pair.gls");
  EXPECT_TRUE(parse_dot(emit_dot(l, DotMode::greechie_incidence)).valid);
  EXPECT_NE(dot_identifier("atom", "K'"), dot_identifier("atom", "K"));
  EXPECT_NE(dot_identifier("atom", "K'"), dot_identifier("atom", "K_27"));
}

}  // namespace
}  // namespace greechie
