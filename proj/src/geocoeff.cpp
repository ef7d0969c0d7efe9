#include "bruhat/geocoeff.hpp"

#include <functional>
#include <set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

// Stirling numbers with out-of-range arguments read as zero, as inside sums.
Integer stirling1_or_zero(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return stirling1(a, b);
}

Integer power(long base, unsigned long exp) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

void for_each_point(int n, long lo, long hi, const std::function<void(const Coweight&)>& f) {
  Coweight m(n, lo);
  for (;;) {
    f(m);
    int j = 0;
    while (j < n && m[j] == hi) m[j++] = lo;
    if (j == n) break;
    ++m[j];
  }
}

Rational evaluate_rel(const GeometricCoefficients& coeffs, VolumeTable& volumes,
                      const Coweight& lambda) {
  Rational total = 0;
  for (const auto& [J, mu] : coeffs.mu_prime) {
    total += mu * volumes.get(J).rel_poly.evaluate(std::span<const long>(lambda));
  }
  return total;
}

// Square-free extraction: interpolate the interval-size polynomial on a full grid and
// read mu'_J = [m_J] p / [m_J] r_J.
std::map<NodeSet, Rational> fit_by_grid(const RootSystemData& data, VolumeTable& volumes,
                                        const FitOptions& options) {
  const int n = data.n;
  std::vector<Exponents> support;
  for_each_point(n, 0, n, [&](const Coweight& e) {
    long total = 0;
    for (long x : e) total += x;
    if (total <= n) support.emplace_back(e.begin(), e.end());
  });
  std::vector<Sample> samples;
  for_each_point(n, 1, n + 1, [&](const Coweight& m) {
    Integer count = interval_size_lattice(data, m, options.box_cap);
    samples.emplace_back(std::vector<Rational>(m.begin(), m.end()), Rational(count));
  });
  MPoly p = mpoly_interpolate(support, samples);
  std::map<NodeSet, Rational> mu;
  for (NodeSet J : subsets_of(n)) {
    Exponents e = squarefree_monomial(n, J);
    mu[J] = p.coefficient(e) / volumes.get(J).rel_poly.coefficient(e);
  }
  return mu;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::TypeAPipeline: return "type-A-pipeline";
    case Provenance::Fitted: return "fitted";
  }
  return "fitted";
}

Provenance parse_provenance(const std::string& text) {
  if (text == "closed-form") return Provenance::ClosedForm;
  if (text == "type-A-pipeline") return Provenance::TypeAPipeline;
  if (text == "fitted") return Provenance::Fitted;
  throw InvalidInput("unknown provenance '" + text + "'");
}

RadScalar GeometricCoefficients::mu(NodeSet J) const {
  return RadScalar(mu_prime.at(J), 1 / gram.at(J));
}

Rational mu_empty(const RootSystemData& data) { return Rational(data.wf_order); }

RadScalar mu_full(const RootSystemData& data) {
  return RadScalar(Rational(data.factorial_times_marks()), 1) / data.det_coweight_lattice;
}

Rational mu_full_normalized(const RootSystemData& data) {
  RadScalar v = mu_full(data) * RadScalar::sqrt_of(gram_of(data, NodeSet::full(data.n)));
  if (v.radicand() != 1) throw InternalError("mu'_{I_n} is not rational");
  return v.coeff();
}

Integer stirling1(long a, long b) {
  if (a < 0 || b < 0 || b > a) {
    throw InvalidInput("stirling1 needs 0 <= b <= a");
  }
  // Row-by-row recurrence [a,b] = [a-1,b-1] + (a-1)[a-1,b].
  std::vector<Integer> row{1};
  for (long i = 1; i <= a; ++i) {
    std::vector<Integer> next(i + 1, 0);
    for (long j = 0; j <= i; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j < i) next[j] += Integer(i - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[b];
}

Integer eulerian(long r, long s) {
  if (r < 1 || s < 1 || s > r) throw InvalidInput("eulerian needs 1 <= s <= r");
  // A(r,s) = s A(r-1,s) + (r-s+1) A(r-1,s-1), 1-based.
  std::vector<Integer> row{0, 1};
  for (long i = 2; i <= r; ++i) {
    std::vector<Integer> next(i + 1, 0);
    for (long j = 1; j <= i; ++j) {
      if (j <= i - 1) next[j] += Integer(j) * row[j];
      if (j >= 2) next[j] += Integer(i - j + 1) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[s];
}

MPoly hypersimplex_ehrhart(long k, long d) {
  if (d < 1 || k < 1 || k > d) throw InvalidInput("hypersimplex needs 1 <= k <= d");
  if (k == d) return MPoly::constant(1, 1);
  MPoly e(1);
  const Integer denom = factorial(d - 1);
  for (long m = 0; m < d; ++m) {
    Integer sum = 0;
    for (long j = 0; j <= k - 1; ++j) {
      for (long i = 0; i <= d - m - 1; ++i) {
        Integer term = binomial(d, j) * power(k - j, m) *
                       stirling1_or_zero(d - j, m + 1 + i - j) * stirling1_or_zero(j, j - i);
        if ((i + j) % 2) {
          sum -= term;
        } else {
          sum += term;
        }
      }
    }
    e.add_term({static_cast<unsigned>(m)}, make_rational(sum, denom));
  }
  return e;
}

Rational type_a_top_mu_prime(int n, int l) {
  return Rational(factorial(l) * (n + 1) * stirling1(n + 1, l + 1));
}

std::map<NodeSet, Rational> type_a_connected_mu(int n) {
  if (n < 1) throw InvalidInput("type A pipeline needs n >= 1");
  auto interval = [](int l, int u) {
    NodeSet J;
    for (int i = u + 1; i <= u + l; ++i) J = J.with(i);
    return J;
  };
  const Integer nfact = factorial(n + 1);
  std::map<NodeSet, Rational> mu;
  for (int l = 1; l <= n; ++l) {
    const Rational lfact(factorial(l));
    // Row i: sum over u in [i-l, i-1] of mu'_{I(l,u)} A(l, i-u) / l! = e_{i,l}.
    for (int i = 1; i <= n - l + 1; ++i) {
      Rational e = nfact * hypersimplex_ehrhart(i, n + 1).coefficient({static_cast<unsigned>(l)});
      Rational rhs = e;
      for (int u = std::max(0, i - l); u < i - 1; ++u) {
        rhs -= mu.at(interval(l, u)) * Rational(eulerian(l, i - u)) / lfact;
      }
      Rational diag = Rational(eulerian(l, 1)) / lfact;
      if (diag == 0) throw InternalError("zero diagonal in type A system");
      mu[interval(l, i - 1)] = rhs / diag;
    }
    if (mu.at(interval(l, 0)) != type_a_top_mu_prime(n, l)) {
      throw InternalError("type A pipeline disagrees with the closed form for I_l");
    }
  }
  if (mu.at(interval(n, 0)) != nfact) {
    throw InternalError("type A pipeline disagrees with 1/vol(A_id)");
  }
  return mu;
}

GeometricCoefficients fit_mu(const RootSystemData& data, const FitOptions& options) {
  const int n = data.n;
  if (n > options.max_rank) {
    throw BudgetExceeded("fitting " + std::to_string(std::uint64_t{1} << n) +
                         " coefficients exceeds the rank limit of " + std::to_string(options.max_rank));
  }
  VolumeTable volumes(data);
  const std::vector<NodeSet> subsets = subsets_of(n);
  const NodeSet full = NodeSet::full(n);

  // Generic samples m_i in {1, 2}.
  std::vector<Coweight> sample_points;
  for (NodeSet K : subsets) {
    Coweight m(n, 1);
    for (int i : K.elements()) m[i - 1] = 2;
    sample_points.push_back(m);
  }
  QMatrix a(subsets.size(), subsets.size());
  QVector b(subsets.size());
  for (std::size_t s = 0; s < sample_points.size(); ++s) {
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      a(s, c) = volumes.get(subsets[c]).rel_poly.evaluate(std::span<const long>(sample_points[s]));
    }
    b[s] = Rational(interval_size_lattice(data, sample_points[s], options.box_cap));
  }

  std::map<NodeSet, Rational> fitted;
  try {
    QVector x = solve_linear(a, b);
    for (std::size_t c = 0; c < subsets.size(); ++c) fitted[subsets[c]] = x[c];
  } catch (const MathError&) {
    fitted = fit_by_grid(data, volumes, options);
  }

  GeometricCoefficients out;
  out.system = data.id;
  for (NodeSet J : subsets) {
    out.mu_prime[J] = fitted.at(J);
    out.gram[J] = volumes.get(J).gram;
    out.provenance[J] = Provenance::Fitted;
  }

  if (fitted.at(NodeSet()) != mu_empty(data) || fitted.at(full) != mu_full_normalized(data)) {
    throw FitFailed("fit failed verification: closed forms for the empty set or I_n disagree");
  }
  out.provenance[NodeSet()] = Provenance::ClosedForm;
  out.provenance[full] = Provenance::ClosedForm;
  if (data.id.family == 'A') {
    for (const auto& [J, mu] : type_a_connected_mu(n)) {
      if (fitted.at(J) != mu) {
        throw FitFailed("fit failed verification: type A pipeline disagrees on " + J.to_string());
      }
      if (J != full) out.provenance[J] = Provenance::TypeAPipeline;
    }
  }

  long vmax = options.validation_max;
  if (vmax <= 0) vmax = n <= 3 ? 3 : (n == 4 ? 2 : 1);
  std::set<Coweight> used(sample_points.begin(), sample_points.end());
  for_each_point(n, 0, vmax, [&](const Coweight& m) {
    if (used.count(m)) return;
    Rational predicted = evaluate_rel(out, volumes, m);
    Integer actual = interval_size_lattice(data, m, options.box_cap);
    if (predicted != actual) {
      std::string coords;
      for (long x : m) coords += (coords.empty() ? "" : ",") + std::to_string(x);
      throw FitFailed("fit failed verification at lambda = (" + coords + ")");
    }
  });
  return out;
}

Integer evaluate_formula(const GeometricCoefficients& coeffs, VolumeTable& volumes,
                         const Coweight& lambda) {
  Rational total = evaluate_rel(coeffs, volumes, lambda);
  if (!is_integer(total) || total < 0) throw MathError("formula evaluation inconsistent");
  return total.get_num();
}

Integer evaluate_formula(const RootSystemData& data, const GeometricCoefficients& coeffs,
                         const Coweight& lambda) {
  if (coeffs.system != data.id) throw InvalidInput("coefficients belong to another root system");
  if (lambda.size() != static_cast<std::size_t>(data.n)) {
    throw InvalidInput("expected " + std::to_string(data.n) + " coordinates for lambda");
  }
  if (coeffs.mu_prime.size() != (std::size_t{1} << data.n)) {
    throw InvalidInput("coefficient set is incomplete");
  }
  VolumeTable volumes(data);
  return evaluate_formula(coeffs, volumes, lambda);
}

}  // namespace bruhat
