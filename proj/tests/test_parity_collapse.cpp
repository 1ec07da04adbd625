#include "greechie/collapse.hpp"
#include "greechie/gls.hpp"
#include "greechie/parity.hpp"
#include "greechie/realization.hpp"
#include "greechie/states.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace greechie {
namespace {

using testing::corpus;

TEST(ParityObstruction, Cabello18Certificate) {
  const auto cert = parity_obstruction(corpus("cabello18.gls"));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->context_count, 9u);
  EXPECT_EQ(cert->multiplicities.size(), 18u);
  for (const auto& [atom, m] : cert->multiplicities) EXPECT_EQ(m, 2u) << atom;
}

TEST(ParityObstruction, Gamma1HasNone) {
  const auto l = corpus("gamma1.gls");
  EXPECT_EQ(l.contexts().size() % 2, 1u);
  EXPECT_FALSE(parity_obstruction(l));
}

TEST(ParityObstruction, SingleContextHasNone) {
  EXPECT_FALSE(parity_obstruction(parse_logic("dim 3\natom A\natom B\natom C\ncontext a A B C\n")));
}

TEST(ParityObstructionProperty, CertificateImpliesNoStates) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const auto l = oracle::random_parity_logic(rng);
    ASSERT_TRUE(parity_obstruction(l)) << serialize_logic(l);
    ASSERT_TRUE(enumerate_states(l).empty) << serialize_logic(l);
  }
}

std::set<std::set<std::string>> classes_of(const CollapseReport& r) {
  // Union of reported pairs.
  std::vector<std::set<std::string>> sets;
  for (const auto& id : r.identifications) {
    std::set<std::string> merged{id.atoms.first, id.atoms.second};
    std::vector<std::set<std::string>> keep;
    for (auto& s : sets) {
      if (s.count(id.atoms.first) || s.count(id.atoms.second)) {
        merged.insert(s.begin(), s.end());
      } else {
        keep.push_back(s);
      }
    }
    keep.push_back(merged);
    sets = keep;
  }
  return {sets.begin(), sets.end()};
}

TEST(InferCollapses, Tight3InThreeDimensions) {
  const auto l = corpus("tight3.gls");
  const auto r = infer_collapses(l);
  std::set<AtomPair> pairs;
  for (const auto& id : r.identifications) {
    pairs.insert(id.atoms);
    EXPECT_EQ(id.witness.size(), 2u);
  }
  EXPECT_EQ(pairs, (std::set<AtomPair>{{"B", "K"}, {"C", "D"}, {"A", "L"}}));
  EXPECT_FALSE(r.contradiction);
  EXPECT_EQ(classes_of(r), oracle::closure_classes(l));
}

TEST(InferCollapses, WitnessesAreMutuallyOrthogonal) {
  const auto l = corpus("tight3.gls");
  for (const auto& id : infer_collapses(l).identifications) {
    const auto& w = id.witness;
    EXPECT_TRUE(l.share_context(l.atom_index(w[0]), l.atom_index(w[1])));
    for (const auto& x : {id.atoms.first, id.atoms.second}) {
      for (const auto& y : w) EXPECT_TRUE(l.share_context(l.atom_index(x), l.atom_index(y)));
    }
  }
}

TEST(InferCollapses, Tight3In4DIsFreeAndRealized) {
  const auto l = corpus("tight3_4d.gls");
  EXPECT_TRUE(infer_collapses(l).identifications.empty());
  EXPECT_TRUE(verify_realization(l).passed());
}

TEST(InferCollapses, TwoTripodsAndChainAreFree) {
  EXPECT_TRUE(infer_collapses(corpus("l12.gls")).identifications.empty());
  EXPECT_TRUE(infer_collapses(corpus("chain3.gls")).identifications.empty());
}

TEST(InferCollapses, SoundOnRealizedCorpus) {
  for (const char* name : testing::kRealizedCorpusFiles) {
    const auto l = corpus(name);
    ASSERT_TRUE(verify_realization(l).passed());
    const auto r = infer_collapses(l);
    EXPECT_TRUE(r.identifications.empty()) << name;
    EXPECT_FALSE(r.contradiction) << name;
  }
}

TEST(InferCollapses, DetectsContradiction) {
  // Two triangles over the same three-context core force an atom onto a ray
  // orthogonal to itself.
  const auto l = parse_logic(
      "dim 3\natom A\natom B\natom C\natom D\natom K\natom L\n"
      "context a A B C\ncontext b A D K\ncontext c K L C\ncontext d B K D\n");
  const auto r = infer_collapses(l);
  EXPECT_TRUE(r.contradiction.has_value());
}

TEST(InferCollapsesProperty, MatchesClosureOracleOnRandomLogics) {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 100; ++i) {
    const auto l = oracle::random_logic(rng, 10);
    const auto r = infer_collapses(l);
    if (r.contradiction) continue;
    ASSERT_EQ(classes_of(r), oracle::closure_classes(l)) << serialize_logic(l);
  }
}

}  // namespace
}  // namespace greechie
