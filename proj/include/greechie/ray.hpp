#pragma once

#include "greechie/quad.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace greechie {

/// Unnormalized real vector spanning a one-dimensional subspace.
/// Construction rejects the zero vector.
class Ray {
 public:
  explicit Ray(std::vector<Quad> components);
  Ray(std::initializer_list<Quad> components) : Ray(std::vector<Quad>(components)) {}

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Quad>& components() const { return components_; }
  const Quad& operator[](std::size_t i) const { return components_[i]; }

  Ray scaled(const Quad& factor) const;
  std::vector<double> to_unit_doubles() const;
  std::string to_string() const;

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  std::vector<Quad> components_;
};

/// Sum of componentwise products; no conjugation. Throws LogicError on a
/// length mismatch.
Quad inner_product(const Ray& r, const Ray& s);

/// True iff every 2x2 minor of [r; s] vanishes.
bool rays_collinear(const Ray& r, const Ray& s);

inline bool rays_orthogonal(const Ray& r, const Ray& s) { return inner_product(r, s).is_zero(); }

}  // namespace greechie
