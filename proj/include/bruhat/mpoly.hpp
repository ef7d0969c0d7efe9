#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/rational.hpp"

namespace bruhat {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial over Q in a fixed number of variables. Terms are kept
// in lexicographic exponent order and zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MPoly constant(std::size_t num_vars, const Rational& c);
  static MPoly variable(std::size_t num_vars, std::size_t index);
  static MPoly monomial(Exponents exps, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& exps) const;
  void add_term(const Exponents& exps, const Rational& c);

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // True if no term involves variable `index` with a positive exponent.
  bool independent_of(std::size_t index) const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const long> point) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  // Human-readable form, e.g. "1/2*m1^2 + 2*m1*m2".
  std::string to_string(const std::string& var_prefix = "m") const;

 private:
  std::size_t num_vars_;
  std::map<Exponents, Rational> terms_;
};

using Sample = std::pair<std::vector<Rational>, Rational>;

// Unique polynomial supported on `support` that matches every sample exactly. A square
// subsystem is chosen greedily from the samples; the remaining samples are checked.
// Throws MathError("insufficient sample geometry") if the monomial evaluation matrix has
// rank below |support|, MathError("inconsistent samples") if a leftover sample disagrees.
MPoly mpoly_interpolate(std::span<const Exponents> support, std::span<const Sample> samples);

}  // namespace bruhat
