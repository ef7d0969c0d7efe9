#pragma once

#include <string>

#include "bruhat/rational.hpp"

namespace bruhat {

// Exact value coeff * sqrt(radicand). The radicand is kept in canonical square class:
// a square-free positive integer, every square factor moved into the coefficient.
// Zero is (0, 1).
class RadScalar {
 public:
  RadScalar() : coeff_(0), radicand_(1) {}
  RadScalar(Rational coeff, Rational radicand);
  static RadScalar sqrt_of(const Rational& radicand) { return RadScalar(1, radicand); }

  const Rational& coeff() const { return coeff_; }
  const Integer& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  int sign() const { return sgn(coeff_); }
  Rational square() const { return coeff_ * coeff_ * radicand_; }
  bool same_class(const RadScalar& other) const;

  // Approximation for display only.
  double to_double() const;
  std::string to_string() const;

  friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
  friend RadScalar operator/(const RadScalar& a, const RadScalar& b);
  friend RadScalar operator*(const Rational& q, const RadScalar& a);
  friend bool operator==(const RadScalar&, const RadScalar&) = default;

 private:
  Rational coeff_;
  Integer radicand_;
};

// Sum of two values in the same square class. Zero is compatible with every class.
// Throws MathError("incompatible radical classes").
RadScalar add_same_class(const RadScalar& a, const RadScalar& b);

}  // namespace bruhat
