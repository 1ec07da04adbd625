#include "greechie/quad.hpp"

#include "greechie/error.hpp"

#include <cmath>
#include <ostream>

namespace greechie {

namespace {

std::string rational_token(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  const auto den = boost::multiprecision::denominator(r);
  if (den != 1) s += "/" + den.str();
  return s;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

int Quad::sign() const {
  // Sign of a + b*sqrt(2): compare a^2 with 2b^2 when the signs disagree.
  const int sa = rat_.sign();
  const int sb = coef2_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational n = norm();
  return n.sign() > 0 ? sa : sb;
}

double Quad::to_double() const {
  return rational_to_double(rat_) + std::sqrt(2.0) * rational_to_double(coef2_);
}

std::string Quad::to_token() const {
  if (coef2_ == 0) return rational_token(rat_);
  if (rat_ == 0) return rational_token(coef2_) + "r2";
  std::string s = rational_token(rat_);
  if (coef2_.sign() > 0) {
    s += "+" + rational_token(coef2_);
  } else {
    s += "-" + rational_token(-coef2_);
  }
  return s + "r2";
}

Quad& Quad::operator+=(const Quad& rhs) {
  rat_ += rhs.rat_;
  coef2_ += rhs.coef2_;
  return *this;
}

Quad& Quad::operator-=(const Quad& rhs) {
  rat_ -= rhs.rat_;
  coef2_ -= rhs.coef2_;
  return *this;
}

Quad& Quad::operator*=(const Quad& rhs) {
  // (a + b r2)(c + d r2) = (ac + 2bd) + (ad + bc) r2
  Rational a = rat_ * rhs.rat_ + 2 * coef2_ * rhs.coef2_;
  Rational b = rat_ * rhs.coef2_ + coef2_ * rhs.rat_;
  rat_ = std::move(a);
  coef2_ = std::move(b);
  return *this;
}

Quad& Quad::operator/=(const Quad& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero in Q(sqrt 2)");
  const Rational n = rhs.norm();
  *this *= rhs.conjugate();
  rat_ /= n;
  coef2_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.to_token(); }

}  // namespace greechie
