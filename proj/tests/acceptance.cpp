// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

#include "greechie/collapse.hpp"
#include "greechie/diagrams.hpp"
#include "greechie/generators.hpp"
#include "greechie/gls.hpp"
#include "greechie/parity.hpp"
#include "greechie/quantum.hpp"
#include "greechie/realization.hpp"
#include "greechie/rules.hpp"
#include "greechie/states.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace greechie {
namespace {

using testing::corpus;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Outcome realization() {
  Outcome o;
  const std::map<std::string, std::size_t> expected{
      {"gamma1.gls", 7}, {"gamma3pair.gls", 17}, {"cabello18.gls", 9}, {"tight3_4d.gls", 0}};
  for (const auto& [name, contexts] : expected) {
    const auto start = Clock::now();
    const auto report = verify_realization(corpus(name));
    const double t = seconds_since(start);
    o.detail << " " << name << " " << report.orthogonal_contexts() << "/" << report.contexts.size();
    o.require(report.passed(), name + " passes");
    if (contexts) o.require(report.contexts.size() == contexts, name + " context count");
    o.require(t < 0.1, name + " under 0.1 s");
  }
  return o;
}

Outcome ks_emptiness() {
  Outcome o;
  const auto start = Clock::now();
  const auto l = corpus("cabello18.gls");
  const auto report = enumerate_states(l);
  const auto cert = parity_obstruction(l);
  const double t = seconds_since(start);
  o.require(report.count == 0 && report.empty, "no two-valued states");
  o.require(cert.has_value(), "parity certificate");
  if (cert) {
    o.require(cert->context_count == 9, "9 contexts");
    for (const auto& [atom, m] : cert->multiplicities) o.require(m == 2, atom + " multiplicity 2");
  }
  o.detail << " states=" << report.count << " time=" << t << "s";
  o.require(t < 1.0, "under 1 s");
  return o;
}

Outcome one_zero_rule() {
  Outcome o;
  const auto l = corpus("gamma1.gls");
  const auto report = enumerate_states(l);
  const auto rules = derive_rules(report, l);
  o.require(rules.has_one_zero("K", "E") && rules.has_one_zero("E", "K"), "(K,E) and (E,K) one-zero");
  const auto k = l.atom_index("K");
  const auto e = l.atom_index("E");
  std::size_t k_true = 0, e_true = 0;
  for (const auto& s : report.states) {
    k_true += s[k];
    e_true += s[e];
  }
  o.require(k_true > 0 && e_true > 0, "non-vacuous antecedents");
  std::vector<std::string> got;
  for (const auto& s : report.states) got.push_back(s.bits());
  const auto oracle = oracle::brute_force_states(l);
  o.require(got == oracle, "state set equals 2^n brute force");
  o.detail << " atoms=" << l.atoms().size() << " states=" << report.count
           << " oracle=" << oracle.size();
  return o;
}

Outcome one_one_rule() {
  Outcome o;
  const auto l = corpus("gamma3pair.gls");
  const auto start = Clock::now();
  const auto report = enumerate_states(l);
  const double t = seconds_since(start);
  const auto rules = derive_rules(report, l);
  o.require(rules.are_equivalent("K", "K'"), "{K,K'} equivalent");
  std::vector<std::string> got;
  for (const auto& s : report.states) got.push_back(s.bits());
  const auto oracle = oracle::per_context_choice_states(l);
  o.require(got == oracle, "state set equals per-context choice oracle");
  o.require(t < 5.0, "enumerator under 5 s");
  o.detail << " states=" << report.count << " oracle=" << oracle.size() << " time=" << t << "s";
  return o;
}

Outcome star_structure() {
  Outcome o;
  const auto l = make_star(4);
  o.require(l.atoms().size() == 16, "16 atoms");
  o.require(l.contexts().size() == 5, "5 contexts");
  const auto g = tkadlec_dual(l);
  std::map<std::string, std::size_t> degree;
  for (const auto& e : g.edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  bool star = g.edges.size() == 4 && g.nodes.size() == 5;
  std::size_t hubs = 0;
  for (const auto& [node, deg] : degree) {
    if (deg == 4) ++hubs;
    else if (deg != 1) star = false;
  }
  o.require(star && hubs == 1, "dual is a 4-edge star");
  o.detail << " atoms=" << l.atoms().size() << " contexts=" << l.contexts().size()
           << " dual edges=" << g.edges.size();
  return o;
}

Outcome collapse() {
  Outcome o;
  const auto l = corpus("tight3.gls");
  const auto r = infer_collapses(l);
  std::set<AtomPair> pairs;
  for (const auto& id : r.identifications) pairs.insert(id.atoms);
  o.require(pairs == std::set<AtomPair>{{"B", "K"}, {"C", "D"}, {"A", "L"}},
            "identifications {B,K} {D,C} {L,A}");
  o.require(!r.contradiction, "no contradiction");
  std::set<std::set<std::string>> classes;
  for (const auto& p : pairs) classes.insert({p.first, p.second});
  o.require(classes == oracle::closure_classes(l), "matches closure oracle");
  const auto l4 = corpus("tight3_4d.gls");
  o.require(infer_collapses(l4).identifications.empty(), "none in four dimensions");
  o.require(verify_realization(l4).passed(), "4d realization passes");
  for (const auto& p : pairs) o.detail << " {" << p.first << "," << p.second << "}";
  return o;
}

Outcome quantum() {
  Outcome o;
  const auto l = corpus("gamma1.gls");
  const EntangledPair pair(3);
  const auto& e = *l.atom("E").ray;
  const auto& k = *l.atom("K").ray;
  const auto jp = joint_probability(pair, e, k);
  const auto eu = e.to_unit_doubles();
  const auto ku = k.to_unit_doubles();
  double dot = 0;
  for (std::size_t i = 0; i < 3; ++i) dot += eu[i] * ku[i];
  const double closed_form = dot * dot / 3.0;
  const double kron = oracle::kron_joint_probability(e.to_unit_doubles(), k.to_unit_doubles());
  o.require(jp.prob_both > kProbabilityTolerance, "strictly positive");
  o.require(std::abs(jp.prob_both - closed_form) <= kProbabilityTolerance, "equals (e.k)^2/3");
  o.require(std::abs(jp.prob_both - kron) <= kProbabilityTolerance, "equals Kronecker oracle");
  const auto rules = derive_rules(enumerate_states(l), l);
  o.require(classical_bound(rules, "E", "K") == ClassicalBound::zero, "classical prediction 0");
  bool violated = false;
  for (const auto& row : falsification_report(l, rules, pair)) {
    if (row.kind == RuleKind::one_zero &&
        (row.atoms == AtomPair{"E", "K"} || row.atoms == AtomPair{"K", "E"}))
      violated = violated || row.violated;
  }
  o.require(violated, "report marks violated");
  char buf[64];
  std::snprintf(buf, sizeof buf, " P(E,K)=%.12f oracle=%.12f", jp.prob_both, kron);
  o.detail << buf;
  return o;
}

Quad random_quad(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  return Quad(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

Outcome properties() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(1729);

  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto l = oracle::random_logic(rng, 16);
    std::vector<std::string> got;
    for (const auto& s : enumerate_states(l).states) got.push_back(s.bits());
    if (got != oracle::brute_force_states(l)) ++mismatches;
  }
  o.require(mismatches == 0, "enumerator equals brute force on 200 random logics");

  std::size_t axiom_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const Quad a = random_quad(rng), b = random_quad(rng), c = random_quad(rng);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
              a + b == b + a && a * (b + c) == a * b + a * c && a + Quad() == a &&
              a * Quad(1) == a && (a - a).is_zero();
    if (!a.is_zero()) ok = ok && a * (Quad(1) / a) == Quad(1);
    if (!ok) ++axiom_failures;
  }
  o.require(axiom_failures == 0, "field axioms on 10^4 triples");

  for (const char* name : testing::kCorpusFiles) {
    const auto text = serialize_logic(corpus(name));
    o.require(serialize_logic(parse_logic(text)) == text, std::string(name) + " round-trips");
  }

  for (const char* name : testing::kRealizedCorpusFiles) {
    const auto l = corpus(name);
    const EntangledPair pair(l.dimension());
    for (std::size_t c = 0; c < l.contexts().size(); ++c) {
      if (l.context_members()[c].size() != static_cast<std::size_t>(l.dimension())) continue;
      for (const auto& b : l.atoms()) {
        const double s = context_completeness(pair, l, l.contexts()[c].label, *b.ray);
        o.require(std::abs(s - 1.0 / l.dimension()) <= kProbabilityTolerance,
                  std::string(name) + " completeness");
      }
    }
  }

  std::size_t parity_failures = 0;
  for (int i = 0; i < 200; ++i) {
    const auto l = oracle::random_parity_logic(rng);
    if (!parity_obstruction(l) || count_states(l) != 0) ++parity_failures;
  }
  o.require(parity_failures == 0, "parity certificate implies no states");

  const double t = seconds_since(start);
  o.require(t < 60.0, "under 60 s");
  o.detail << " time=" << t << "s";
  return o;
}

}  // namespace
}  // namespace greechie

int main() {
  using namespace greechie;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"realization", realization},     {"KS emptiness", ks_emptiness},
      {"one-zero rule", one_zero_rule}, {"one-one rule", one_one_rule},
      {"star structure", star_structure}, {"collapse", collapse},
      {"quantum falsification", quantum}, {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s:%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
