#include "bruhat/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales each row of [m | extra] by the lcm of its denominators. The scale factors are
// returned so that determinants can be recovered.
IntRows integer_rows(const QMatrix& m, const QMatrix* extra, std::vector<Integer>* scales) {
  const std::size_t width = m.cols() + (extra ? extra->cols() : 0);
  IntRows out(m.rows(), std::vector<Integer>(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> row;
    row.reserve(width);
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    if (extra) {
      for (std::size_t c = 0; c < extra->cols(); ++c) row.push_back((*extra)(r, c));
    }
    Integer l = lcm_of_denominators(row.data(), row.data() + row.size());
    for (std::size_t c = 0; c < width; ++c) {
      Rational scaled = row[c] * l;
      out[r][c] = scaled.get_num();
    }
    if (scales) scales->push_back(l);
  }
  return out;
}

struct Elimination {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

// Bareiss elimination over the first `pivot_width` columns, in place. Pivot rows are
// chosen as the first row (at or below the current one) with a nonzero entry.
Elimination bareiss(IntRows& a, std::size_t pivot_width) {
  Elimination e;
  const std::size_t nrows = a.size();
  const std::size_t width = nrows ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_width && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

QVector& QVector::operator+=(const QVector& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

bool operator<(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

Rational dot(const QVector& a, const QVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  QVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

QVector QMatrix::col(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  assert(a.cols_ == b.rows_);
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  assert(a.cols_ == v.size());
  QVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) != 0) s += a(i, k) * v[k];
    }
    out[i] = s;
  }
  return out;
}

bool operator<(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw MathError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> scales;
  IntRows a = integer_rows(m, nullptr, &scales);
  Elimination e = bareiss(a, n);
  if (e.pivot_cols.size() < n) return 0;
  Rational det(a[n - 1][n - 1] * e.sign);
  for (const auto& s : scales) det /= s;
  return det;
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a = integer_rows(m, nullptr, nullptr);
  return bareiss(a, m.cols()).pivot_cols.size();
}

Rational gram_det(std::span<const QVector> vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  QMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      g(i, j) = dot(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  }
  Rational d = determinant(g);
  if (d == 0) throw MathError("degenerate basis");
  return d;
}

QVector solve_linear(const QMatrix& m, const QVector& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw MathError("solve_linear: dimension mismatch");
  QMatrix rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = b[i];
  IntRows a = integer_rows(m, &rhs, nullptr);
  Elimination e = bareiss(a, n);
  if (e.pivot_cols.size() < n) throw MathError("singular system");
  QVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    QVector e(n);
    e[c] = 1;
    QVector x = solve_linear(m, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

}  // namespace bruhat
