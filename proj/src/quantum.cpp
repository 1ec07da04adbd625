#include "greechie/quantum.hpp"

#include "greechie/error.hpp"

#include <cmath>

namespace greechie {

EntangledPair::EntangledPair(int d) : dim_(d) {
  if (d < 3) throw LogicError("entangled pair needs dimension >= 3");
  const auto n = static_cast<std::size_t>(d);
  amp_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) amp_[i * n + i] = 1.0 / std::sqrt(static_cast<double>(d));
}

double EntangledPair::norm() const {
  double s = 0.0;
  for (double a : amp_) s += a * a;
  return std::sqrt(s);
}

std::string to_string(ClassicalBound bound) {
  switch (bound) {
    case ClassicalBound::zero:
      return "zero";
    case ClassicalBound::equal:
      return "equal";
    case ClassicalBound::unconstrained:
      break;
  }
  return "unconstrained";
}

std::string to_string(RuleKind kind) {
  return kind == RuleKind::one_zero ? "one-zero" : "equivalence";
}

namespace {

std::vector<double> projector(std::span<const double> v, std::size_t d) {
  if (v.size() != d) {
    throw LogicError("vector has " + std::to_string(v.size()) + " components, expected " +
                     std::to_string(d));
  }
  double n2 = 0.0;
  for (double x : v) n2 += x * x;
  if (n2 == 0.0) throw LogicError("zero vector has no projector");
  std::vector<double> p(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p[i * d + j] = v[i] * v[j] / n2;
  }
  return p;
}

// <psi| L (x) R |psi> for real d x d operators L and R.
double expectation(const EntangledPair& pair, const std::vector<double>& left,
                   const std::vector<double>& right) {
  const auto d = static_cast<std::size_t>(pair.dimension());
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double bra = pair.amplitude(i, j);
      if (bra == 0.0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          sum += bra * left[i * d + k] * right[j * d + l] * pair.amplitude(k, l);
        }
      }
    }
  }
  return sum;
}

std::vector<double> identity(std::size_t d) {
  std::vector<double> id(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1.0;
  return id;
}

}  // namespace

JointPrediction joint_probability(const EntangledPair& pair, std::span<const double> a,
                                  std::span<const double> b) {
  const auto d = static_cast<std::size_t>(pair.dimension());
  const auto pa = projector(a, d);
  const auto pb = projector(b, d);
  const auto id = identity(d);
  JointPrediction out;
  out.prob_both = expectation(pair, pa, pb);
  out.marginal_left = expectation(pair, pa, id);
  out.marginal_right = expectation(pair, id, pb);
  return out;
}

JointPrediction joint_probability(const EntangledPair& pair, const Ray& a, const Ray& b) {
  const auto ua = a.to_unit_doubles();
  const auto ub = b.to_unit_doubles();
  return joint_probability(pair, ua, ub);
}

ClassicalBound classical_bound(const RuleSet& rules, const std::string& x, const std::string& y) {
  if (x == y || rules.are_equivalent(x, y)) return ClassicalBound::equal;
  if (rules.has_one_zero(x, y)) return ClassicalBound::zero;
  return ClassicalBound::unconstrained;
}

std::vector<FalsificationEntry> falsification_report(const Logic& logic, const RuleSet& rules,
                                                     const EntangledPair& pair) {
  logic.require_realized();
  if (pair.dimension() != logic.dimension()) {
    throw LogicError("entangled pair dimension differs from the logic's");
  }
  std::vector<FalsificationEntry> out;
  auto ray = [&](const std::string& label) -> const Ray& { return *logic.atom(label).ray; };
  for (const auto& p : rules.one_zero) {
    const auto jp = joint_probability(pair, ray(p.first), ray(p.second));
    out.push_back({RuleKind::one_zero, p, 0.0, jp.prob_both, jp.prob_both,
                   jp.prob_both > kProbabilityTolerance});
  }
  for (const auto& p : rules.equivalences) {
    const auto jp = joint_probability(pair, ray(p.first), ray(p.second));
    const double mismatch = jp.marginal_left - jp.prob_both;
    out.push_back({RuleKind::equivalence, p, 0.0, mismatch, jp.prob_both,
                   mismatch > kProbabilityTolerance});
  }
  return out;
}

double context_completeness(const EntangledPair& pair, std::span<const Ray> context, const Ray& b) {
  if (context.size() != static_cast<std::size_t>(pair.dimension())) {
    throw LogicError("context has " + std::to_string(context.size()) + " rays, expected " +
                     std::to_string(pair.dimension()));
  }
  double sum = 0.0;
  for (const auto& x : context) sum += joint_probability(pair, x, b).prob_both;
  return sum;
}

double context_completeness(const EntangledPair& pair, const Logic& logic,
                            const std::string& context, const Ray& b) {
  const auto c = logic.find_context(context);
  if (!c) throw LogicError("unknown context '" + context + "'");
  std::vector<Ray> rays;
  for (auto a : logic.context_members()[*c]) {
    const auto& atom = logic.atoms()[a];
    if (!atom.ray) throw AbstractLogicError(atom.label);
    rays.push_back(*atom.ray);
  }
  return context_completeness(pair, rays, b);
}

}  // namespace greechie
