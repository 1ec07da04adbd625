#include "greechie/gls.hpp"
#include "greechie/rules.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace greechie {
namespace {

using testing::corpus;

RuleSet rules_of(const Logic& l) { return derive_rules(enumerate_states(l), l); }

TEST(DeriveRules, Gamma1OneZero) {
  const auto rules = rules_of(corpus("gamma1.gls"));
  EXPECT_FALSE(rules.explosion);
  EXPECT_TRUE(rules.has_one_zero("K", "E"));
  EXPECT_TRUE(rules.has_one_zero("E", "K"));
  EXPECT_TRUE(rules.never_true.empty());
}

TEST(DeriveRules, Gamma3PairEquivalence) {
  const auto rules = rules_of(corpus("gamma3pair.gls"));
  EXPECT_TRUE(rules.are_equivalent("K", "K'"));
  EXPECT_TRUE(rules.has_one_one("K", "K'"));
  EXPECT_TRUE(rules.has_one_one("K'", "K"));
}

TEST(DeriveRules, SingleContext) {
  const auto rules = rules_of(parse_logic("dim 3\natom A\natom B\natom C\ncontext a A B C\n"));
  std::set<AtomPair> all_distinct;
  std::set<AtomPair> reflexive;
  for (const char* x : {"A", "B", "C"}) {
    reflexive.insert({x, x});
    for (const char* y : {"A", "B", "C"}) {
      if (std::string(x) != y) all_distinct.insert({x, y});
    }
  }
  EXPECT_EQ(rules.one_zero, all_distinct);
  EXPECT_EQ(rules.one_one, reflexive);
  EXPECT_TRUE(rules.equivalences.empty());
}

TEST(DeriveRules, EmptyStateSpaceExplodes) {
  const auto rules = rules_of(corpus("cabello18.gls"));
  EXPECT_TRUE(rules.explosion);
  EXPECT_TRUE(rules.one_zero.empty());
}

TEST(DeriveRules, NeverTrueAtomsListedSeparately) {
  // {A,B}, {A,C}, {B,C,D}: B true forces A false, hence C true, clashing in {B,C,D}.
  const auto l = parse_logic(
      "dim 3\natom A\natom B\natom C\natom D\ncontext a A B\ncontext b A C\ncontext c B C D\n");
  const auto rules = rules_of(l);
  EXPECT_EQ(rules.never_true, (std::vector<std::string>{"B", "C"}));
  for (const auto& p : rules.one_zero) EXPECT_NE(p.first, "B");
}

TEST(DeriveRulesProperty, InvariantsAndOrderIndependence) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto l = oracle::random_logic(rng, 12);
    const auto report = enumerate_states(l);
    const auto rules = derive_rules(report, l);
    std::set<std::string> never(rules.never_true.begin(), rules.never_true.end());
    for (const auto& p : rules.one_zero) {
      if (!never.count(p.second)) ASSERT_TRUE(rules.has_one_zero(p.second, p.first));
    }
    for (const auto& p : rules.equivalences) {
      ASSERT_TRUE(rules.has_one_one(p.first, p.second));
      ASSERT_TRUE(rules.has_one_one(p.second, p.first));
    }
    for (const auto& p : rules.one_one) {
      if (p.first < p.second && rules.has_one_one(p.second, p.first)) {
        ASSERT_TRUE(rules.are_equivalent(p.first, p.second));
      }
    }

    // Reversed declaration order gives the same rules.
    std::vector<Atom> atoms(l.atoms().rbegin(), l.atoms().rend());
    std::vector<Context> contexts(l.contexts().rbegin(), l.contexts().rend());
    for (auto& c : contexts) std::reverse(c.members.begin(), c.members.end());
    const Logic permuted(l.dimension(), atoms, contexts);
    const auto other = derive_rules(enumerate_states(permuted), permuted);
    ASSERT_EQ(rules.one_zero, other.one_zero);
    ASSERT_EQ(rules.one_one, other.one_one);
    ASSERT_EQ(rules.equivalences, other.equivalences);
    ASSERT_EQ(rules.never_true, other.never_true);
  }
}

}  // namespace
}  // namespace greechie
