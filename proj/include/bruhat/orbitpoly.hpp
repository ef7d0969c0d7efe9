#pragma once

#include <cstddef>
#include <vector>

#include "bruhat/linalg.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/rational.hpp"
#include "bruhat/rootsys.hpp"

namespace bruhat {

// Dominant coweight in the fundamental coweight basis.
using Coweight = std::vector<long>;

// Nodes j with m_j = 0.
NodeSet vanishing_set(const Coweight& lambda);

constexpr std::size_t kDefaultBoxCap = 50'000'000;

// Dominant mu with lambda - mu a non-negative integer combination of simple coroots.
// Enumerates the box 0 <= x_j <= (lambda - w0 lambda, omega_j) with pruning; the count of
// visited box nodes is capped (BudgetExceeded).
std::vector<Coweight> enumerate_X(const RootSystemData& data, const Coweight& lambda,
                                  std::size_t box_cap = kDefaultBoxCap);

// |P(lambda) ∩ (lambda + coroot lattice)| as a sum of W_f-orbit sizes over X_lambda.
Integer lattice_count(const RootSystemData& data, const Coweight& lambda,
                      std::size_t box_cap = kDefaultBoxCap);

// |W_f| * lattice_count(lambda).
Integer interval_size_lattice(const RootSystemData& data, const Coweight& lambda,
                              std::size_t box_cap = kDefaultBoxCap);

// Geometric membership of p in the orbit polytope Conv(W_f lambda).
bool contains(const RootSystemData& data, const Coweight& lambda, const QVector& p);

// Independent count: walks every coset point lambda - sum x_j alpha_j^vee in the
// enclosing box and tests membership.
Integer brute_force_lattice_count(const RootSystemData& data, const Coweight& lambda,
                                  std::size_t box_cap = kDefaultBoxCap);

struct FaceDescriptor {
  NodeSet J;
  std::vector<QVector> vertices;  // sorted
  std::size_t dim = 0;
};

// F_J = Conv(W_J lambda).
FaceDescriptor face(const RootSystemData& data, const Coweight& lambda, NodeSet J);

// Number of distinct faces w F_J, w in W_f.
std::size_t orbit_face_count(const RootSystemData& data, const Coweight& lambda, NodeSet J);

// Vertices of the orbit polytope, i.e. W_f lambda (sorted).
std::vector<QVector> orbit(const RootSystemData& data, const QVector& v, NodeSet J);

}  // namespace bruhat
