#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bruhat/rational.hpp"

namespace bruhat {

// Dense vector of exact rationals. Dimension fixed at construction.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& s);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator-(QVector a) { return a *= Rational(-1); }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }

  friend bool operator==(const QVector&, const QVector&) = default;
  friend bool operator<(const QVector& a, const QVector& b);

 private:
  std::vector<Rational> entries_;
};

Rational dot(const QVector& a, const QVector& b);

// Row-major dense matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::span<const QVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector col(std::size_t c) const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;
  friend bool operator<(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Determinant by fraction-free (Bareiss) elimination.
Rational determinant(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Determinant of the matrix of pairwise inner products. For a lattice basis this is
// the squared lattice determinant. Throws MathError("degenerate basis") on dependent input.
Rational gram_det(std::span<const QVector> vectors);

// Exact solution of M x = b. Fraction-free elimination with first-nonzero pivoting.
// Throws MathError("singular system").
QVector solve_linear(const QMatrix& m, const QVector& b);

QMatrix inverse(const QMatrix& m);

}  // namespace bruhat
