#include "bruhat/radical.hpp"

#include <cmath>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

// Splits n > 0 as s^2 * f with f square-free; returns {s, f}.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer outside = 1;
  Integer inside = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned exponent = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++exponent;
    }
    for (unsigned k = 0; k < exponent / 2; ++k) outside *= p;
    if (exponent % 2 == 1) inside *= p;
  }
  inside *= n;
  return {outside, inside};
}

}  // namespace

RadScalar::RadScalar(Rational coeff, Rational radicand) : coeff_(std::move(coeff)), radicand_(1) {
  if (radicand < 0) throw MathError("negative radicand");
  if (coeff_ == 0 || radicand == 0) {
    coeff_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q) / q
  Integer pq = radicand.get_num() * radicand.get_den();
  auto [outside, inside] = split_square(pq);
  coeff_ *= make_rational(outside, radicand.get_den());
  coeff_.canonicalize();
  radicand_ = inside;
}

bool RadScalar::same_class(const RadScalar& other) const {
  return is_zero() || other.is_zero() || radicand_ == other.radicand_;
}

double RadScalar::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

std::string RadScalar::to_string() const {
  if (radicand_ == 1) return bruhat::to_string(coeff_);
  return bruhat::to_string(coeff_) + "*sqrt(" + radicand_.get_str() + ")";
}

RadScalar operator*(const RadScalar& a, const RadScalar& b) {
  return RadScalar(a.coeff_ * b.coeff_, Rational(a.radicand_ * b.radicand_));
}

RadScalar operator/(const RadScalar& a, const RadScalar& b) {
  if (b.is_zero()) throw MathError("division by zero radical");
  // a / (c sqrt(r)) = a * sqrt(r) / (c r)
  return RadScalar(a.coeff_ / (b.coeff_ * b.radicand_), Rational(a.radicand_ * b.radicand_));
}

RadScalar operator*(const Rational& q, const RadScalar& a) {
  RadScalar out = a;
  out.coeff_ *= q;
  if (out.coeff_ == 0) out.radicand_ = 1;
  return out;
}

RadScalar add_same_class(const RadScalar& a, const RadScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand() != b.radicand()) throw MathError("incompatible radical classes");
  RadScalar out(a.coeff() + b.coeff(), Rational(a.radicand()));
  return out;
}

}  // namespace bruhat
