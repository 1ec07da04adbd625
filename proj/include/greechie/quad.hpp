#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace greechie {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Both parts are arbitrary-precision rationals kept in lowest terms with a
/// positive denominator, so equality is plain componentwise equality.
class Quad {
 public:
  Quad() = default;
  Quad(long long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Quad(Rational rat, Rational coef2 = 0)
      : rat_(std::move(rat)), coef2_(std::move(coef2)) {}

  static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return rat_; }
  const Rational& sqrt2_part() const { return coef2_; }

  bool is_zero() const { return rat_ == 0 && coef2_ == 0; }
  int sign() const;

  /// a - b*sqrt(2)
  Quad conjugate() const { return Quad(rat_, -coef2_); }
  /// Field norm a^2 - 2b^2; zero only for the zero element.
  Rational norm() const { return rat_ * rat_ - 2 * coef2_ * coef2_; }

  double to_double() const;

  /// Canonical component token: "3", "-1/2", "1r2", "1+1r2", "-1-1/2r2".
  std::string to_token() const;

  Quad operator-() const { return Quad(-rat_, -coef2_); }
  Quad& operator+=(const Quad& rhs);
  Quad& operator-=(const Quad& rhs);
  Quad& operator*=(const Quad& rhs);
  /// Throws DomainError on division by zero.
  Quad& operator/=(const Quad& rhs);

  friend Quad operator+(Quad lhs, const Quad& rhs) { return lhs += rhs; }
  friend Quad operator-(Quad lhs, const Quad& rhs) { return lhs -= rhs; }
  friend Quad operator*(Quad lhs, const Quad& rhs) { return lhs *= rhs; }
  friend Quad operator/(Quad lhs, const Quad& rhs) { return lhs /= rhs; }
  friend bool operator==(const Quad& lhs, const Quad& rhs) {
    return lhs.rat_ == rhs.rat_ && lhs.coef2_ == rhs.coef2_;
  }

 private:
  Rational rat_{0};
  Rational coef2_{0};
};

std::ostream& operator<<(std::ostream& os, const Quad& q);

}  // namespace greechie
