#pragma once

// Floating-point predictions for two particles sharing the maximally
// entangled state (1/sqrt d) sum_i |i>|i>. For real rays this state gives the
// same joint probabilities as the spin-1 singlet up to a fixed local change of
// basis, and P(a, b) = (a.b)^2 / d for unit vectors a and b.

#include "greechie/logic.hpp"
#include "greechie/ray.hpp"
#include "greechie/rules.hpp"

#include <span>
#include <string>
#include <vector>

namespace greechie {

inline constexpr double kProbabilityTolerance = 1e-9;

class EntangledPair {
 public:
  /// Throws LogicError for d < 3.
  explicit EntangledPair(int d);

  int dimension() const { return dim_; }
  /// Row-major d x d amplitude matrix; psi = sum_ij amp(i,j) |i>|j>.
  double amplitude(std::size_t i, std::size_t j) const { return amp_[i * dim_ + j]; }
  double norm() const;

 private:
  int dim_;
  std::vector<double> amp_;
};

enum class ClassicalBound { zero, equal, unconstrained };

std::string to_string(ClassicalBound bound);

struct JointPrediction {
  double prob_both = 0.0;
  double marginal_left = 0.0;
  double marginal_right = 0.0;
  ClassicalBound classical_bound = ClassicalBound::unconstrained;
};

/// <psi| P_a (x) P_b |psi> by explicit contraction over all four indices.
/// Throws LogicError on zero or mismatched vectors.
JointPrediction joint_probability(const EntangledPair& pair, std::span<const double> a,
                                  std::span<const double> b);
JointPrediction joint_probability(const EntangledPair& pair, const Ray& a, const Ray& b);

/// What the two-valued states say about "x on the left and y on the right":
/// zero for a one-zero rule, equal for an equivalence.
ClassicalBound classical_bound(const RuleSet& rules, const std::string& x, const std::string& y);

enum class RuleKind { one_zero, equivalence };

std::string to_string(RuleKind kind);

/// For a one-zero rule (x,y) the classically forbidden event is "x and y both
/// occur"; for an equivalence {x,y} it is "x occurs and y does not". Both have
/// classical probability 0; `quantum` is the predicted probability of that
/// event and `violated` is quantum > kProbabilityTolerance.
struct FalsificationEntry {
  RuleKind kind;
  AtomPair atoms;
  double classical = 0.0;
  double quantum = 0.0;
  double prob_both = 0.0;
  bool violated = false;
};

/// Throws AbstractLogicError if some atom has no ray.
std::vector<FalsificationEntry> falsification_report(const Logic& logic, const RuleSet& rules,
                                                     const EntangledPair& pair);

/// Sum over a complete orthogonal context of P(x, b); equals 1/d.
/// Throws LogicError unless the context has exactly d rays.
double context_completeness(const EntangledPair& pair, std::span<const Ray> context, const Ray& b);
double context_completeness(const EntangledPair& pair, const Logic& logic,
                            const std::string& context, const Ray& b);

}  // namespace greechie
