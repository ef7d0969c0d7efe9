#include "bruhat/mpoly.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

#include "bruhat/errors.hpp"
#include "bruhat/linalg.hpp"

namespace bruhat {

namespace {

template <typename T>
Rational eval_impl(const std::map<Exponents, Rational>& terms, std::span<const T> point) {
  Rational total = 0;
  for (const auto& [exps, c] : terms) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational monomial_value(const Exponents& exps, std::span<const Rational> point) {
  Rational v = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (unsigned k = 0; k < exps[i]; ++k) v *= point[i];
  }
  return v;
}

}  // namespace

MPoly MPoly::constant(std::size_t num_vars, const Rational& c) {
  MPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t num_vars, std::size_t index) {
  assert(index < num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  MPoly p(num_vars);
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::monomial(Exponents exps, const Rational& c) {
  MPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

Rational MPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
  assert(exps.size() == num_vars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [exps, c] : terms_) {
    d = std::max(d, static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u)));
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [exps, c] : terms_) {
    int td = static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u));
    if (d >= 0 && td != d) return false;
    d = td;
  }
  return true;
}

bool MPoly::independent_of(std::size_t index) const {
  for (const auto& [exps, c] : terms_) {
    if (exps[index] > 0) return false;
  }
  return true;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  assert(point.size() == num_vars_);
  return eval_impl(terms_, point);
}

Rational MPoly::evaluate(std::span<const long> point) const {
  assert(point.size() == num_vars_);
  return eval_impl(terms_, point);
}

MPoly& MPoly::operator+=(const MPoly& other) {
  assert(num_vars_ == other.num_vars_);
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  assert(num_vars_ == other.num_vars_);
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  assert(a.num_vars_ == b.num_vars_);
  MPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) os << "*";
      os << var_prefix << (i + 1);
      if (exps[i] > 1) os << "^" << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

MPoly mpoly_interpolate(std::span<const Exponents> support, std::span<const Sample> samples) {
  const std::size_t k = support.size();
  if (k == 0) throw MathError("empty support");
  const std::size_t nv = support[0].size();
  if (samples.size() < k) throw MathError("insufficient sample geometry");

  // Greedy choice of rows that raise the rank of the evaluation matrix.
  std::vector<QVector> rows;
  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; s < samples.size() && chosen.size() < k; ++s) {
    if (samples[s].first.size() != nv) throw MathError("sample dimension mismatch");
    QVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = monomial_value(support[j], samples[s].first);
    rows.push_back(row);
    if (rank(QMatrix::from_rows(rows)) == rows.size()) {
      chosen.push_back(s);
    } else {
      rows.pop_back();
    }
  }
  if (chosen.size() < k) throw MathError("insufficient sample geometry");

  QMatrix m = QMatrix::from_rows(rows);
  QVector b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = samples[chosen[i]].second;
  QVector coeffs = solve_linear(m, b);

  MPoly p(nv);
  for (std::size_t j = 0; j < k; ++j) p.add_term(support[j], coeffs[j]);
  for (const auto& [point, value] : samples) {
    if (p.evaluate(std::span<const Rational>(point)) != value) {
      throw MathError("inconsistent samples");
    }
  }
  return p;
}

}  // namespace bruhat
