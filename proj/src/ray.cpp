#include "greechie/ray.hpp"

#include "greechie/error.hpp"

#include <cmath>

namespace greechie {

namespace {

void require_same_length(const Ray& r, const Ray& s) {
  if (r.dimension() != s.dimension()) {
    throw LogicError("ray length mismatch: " + std::to_string(r.dimension()) + " vs " +
                     std::to_string(s.dimension()));
  }
}

}  // namespace

Ray::Ray(std::vector<Quad> components) : components_(std::move(components)) {
  bool nonzero = false;
  for (const auto& c : components_) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw LogicError("zero vector does not span a ray");
}

Ray Ray::scaled(const Quad& factor) const {
  std::vector<Quad> out = components_;
  for (auto& c : out) c *= factor;
  return Ray(std::move(out));
}

std::vector<double> Ray::to_unit_doubles() const {
  std::vector<double> v;
  v.reserve(components_.size());
  double norm2 = 0.0;
  for (const auto& c : components_) {
    v.push_back(c.to_double());
    norm2 += v.back() * v.back();
  }
  const double norm = std::sqrt(norm2);
  for (auto& x : v) x /= norm;
  return v;
}

std::string Ray::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ",";
    s += components_[i].to_token();
  }
  return s + ")";
}

Quad inner_product(const Ray& r, const Ray& s) {
  require_same_length(r, s);
  Quad sum;
  for (std::size_t i = 0; i < r.dimension(); ++i) sum += r[i] * s[i];
  return sum;
}

bool rays_collinear(const Ray& r, const Ray& s) {
  require_same_length(r, s);
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    for (std::size_t j = i + 1; j < r.dimension(); ++j) {
      if (!(r[i] * s[j] - r[j] * s[i]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace greechie
