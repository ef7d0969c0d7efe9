#include "bruhat/orbitpoly.hpp"

#include <algorithm>
#include <set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

void check_dominant(const RootSystemData& data, const Coweight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(data.n)) {
    throw InvalidInput("expected " + std::to_string(data.n) + " coordinates for lambda");
  }
  for (long m : lambda) {
    if (m < 0) throw InvalidInput("lambda must be dominant (non-negative coordinates)");
  }
}

// (lambda - w0 lambda, omega_j): coroot coordinates of lambda - w0 lambda.
std::vector<long> box_bounds(const RootSystemData& data, const Coweight& lambda) {
  QVector l = coweight_vector(data, lambda);
  QVector w0l = -dominant_representative(data, -l).first;
  std::vector<long> bounds;
  for (const auto& c : coroot_coords(data, l - w0l)) {
    if (!is_integer(c) || c < 0) throw InternalError("lambda - w0 lambda is not in the coroot cone");
    bounds.push_back(c.get_num().get_si());
  }
  return bounds;
}

struct BoxWalk {
  const RootSystemData& data;
  const Coweight& lambda;
  std::vector<long> bounds;
  std::size_t cap;
  std::size_t visited = 0;
  std::vector<long> x;
  std::vector<Coweight> found;

  // Largest value mu_i can still reach once x_0..x_{k-1} are fixed.
  bool feasible(std::size_t k) const {
    const int n = data.n;
    for (std::size_t i = 0; i < k; ++i) {
      long best = lambda[i];
      for (int j = 0; j < n; ++j) {
        long c = data.cartan[j][i];
        long xj = static_cast<std::size_t>(j) < k ? x[j] : (c < 0 ? bounds[j] : 0);
        best -= xj * c;
      }
      if (best < 0) return false;
    }
    return true;
  }

  void run(std::size_t k) {
    if (++visited > cap) {
      throw BudgetExceeded("box enumeration exceeds cap of " + std::to_string(cap) + " nodes");
    }
    if (!feasible(k)) return;
    if (k == static_cast<std::size_t>(data.n)) {
      Coweight mu(data.n);
      for (int i = 0; i < data.n; ++i) {
        long v = lambda[i];
        for (int j = 0; j < data.n; ++j) v -= x[j] * data.cartan[j][i];
        mu[i] = v;
      }
      found.push_back(std::move(mu));
      return;
    }
    for (long v = 0; v <= bounds[k]; ++v) {
      x[k] = v;
      run(k + 1);
    }
  }
};

}  // namespace

NodeSet vanishing_set(const Coweight& lambda) {
  NodeSet z;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) z = z.with(static_cast<int>(i) + 1);
  }
  return z;
}

std::vector<Coweight> enumerate_X(const RootSystemData& data, const Coweight& lambda,
                                  std::size_t box_cap) {
  check_dominant(data, lambda);
  BoxWalk walk{data, lambda, box_bounds(data, lambda), box_cap, 0,
               std::vector<long>(data.n, 0), {}};
  walk.run(0);
  std::sort(walk.found.begin(), walk.found.end());
  return walk.found;
}

Integer lattice_count(const RootSystemData& data, const Coweight& lambda, std::size_t box_cap) {
  Integer total = 0;
  for (const auto& mu : enumerate_X(data, lambda, box_cap)) {
    Integer stab = weyl_order(data, vanishing_set(mu));
    Integer size;
    mpz_divexact(size.get_mpz_t(), data.wf_order.get_mpz_t(), stab.get_mpz_t());
    total += size;
  }
  return total;
}

Integer interval_size_lattice(const RootSystemData& data, const Coweight& lambda,
                              std::size_t box_cap) {
  return data.wf_order * lattice_count(data, lambda, box_cap);
}

bool contains(const RootSystemData& data, const Coweight& lambda, const QVector& p) {
  check_dominant(data, lambda);
  QVector top = dominant_representative(data, p).first;
  for (const auto& c : coroot_coords(data, coweight_vector(data, lambda) - top)) {
    if (c < 0) return false;
  }
  return true;
}

Integer brute_force_lattice_count(const RootSystemData& data, const Coweight& lambda,
                                  std::size_t box_cap) {
  check_dominant(data, lambda);
  std::vector<long> bounds = box_bounds(data, lambda);
  Integer volume = 1;
  for (long b : bounds) volume *= b + 1;
  if (volume > box_cap) throw BudgetExceeded("brute-force box exceeds cap");

  const QVector top = coweight_vector(data, lambda);
  const int n = data.n;
  std::vector<long> x(n, 0);
  Integer count = 0;
  for (;;) {
    QVector p = top;
    for (int j = 0; j < n; ++j) {
      if (x[j] != 0) p -= Rational(x[j]) * data.simple_coroots[j];
    }
    if (contains(data, lambda, p)) ++count;
    int j = 0;
    while (j < n && x[j] == bounds[j]) x[j++] = 0;
    if (j == n) break;
    ++x[j];
  }
  return count;
}

std::vector<QVector> orbit(const RootSystemData& data, const QVector& v, NodeSet J) {
  std::set<QVector> seen{v};
  std::vector<QVector> frontier{v};
  const auto gens = J.elements();
  while (!frontier.empty()) {
    QVector cur = frontier.back();
    frontier.pop_back();
    for (int j : gens) {
      QVector next = reflect(data, j, cur);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

FaceDescriptor face(const RootSystemData& data, const Coweight& lambda, NodeSet J) {
  check_dominant(data, lambda);
  if (!J.is_subset_of(NodeSet::full(data.n))) throw InvalidInput("J must be a subset of I_n");
  FaceDescriptor f;
  f.J = J;
  QVector top = coweight_vector(data, lambda);
  f.vertices = orbit(data, top, J);
  std::vector<QVector> diffs;
  for (const auto& v : f.vertices) {
    if (!(v == top)) diffs.push_back(v - top);
  }
  f.dim = diffs.empty() ? 0 : rank(QMatrix::from_rows(diffs));
  return f;
}

std::size_t orbit_face_count(const RootSystemData& data, const Coweight& lambda, NodeSet J) {
  const FaceDescriptor f = face(data, lambda, J);
  std::set<std::vector<QVector>> seen{f.vertices};
  std::vector<std::vector<QVector>> frontier{f.vertices};
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= data.n; ++i) {
      std::vector<QVector> next;
      next.reserve(cur.size());
      for (const auto& v : cur) next.push_back(reflect(data, i, v));
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen.size();
}

}  // namespace bruhat
