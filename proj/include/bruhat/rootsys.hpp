#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bruhat/linalg.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/radical.hpp"
#include "bruhat/rational.hpp"

namespace bruhat {

struct RootSystemId {
  char family = 'A';
  int rank = 1;

  // "A2", "G2", ...
  std::string to_string() const;
  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;
};

// Throws InvalidInput unless the family letter and rank name an irreducible system.
void validate(const RootSystemId& id);

// Per-index vectors below are 0-based: entry k belongs to Dynkin node k+1.
struct RootSystemData {
  RootSystemId id;
  int n = 0;
  std::size_t ambient_dim = 0;

  std::vector<QVector> simple_roots;
  std::vector<QVector> simple_coroots;
  std::vector<QVector> positive_roots;
  // Coordinates of each positive root in the simple-root basis, same order.
  std::vector<std::vector<long>> positive_root_coords;
  std::vector<QVector> fundamental_coweights;
  std::vector<QVector> fundamental_weights;

  // cartan[i][j] = (alpha_i^vee, alpha_j)
  std::vector<std::vector<long>> cartan;
  // coweight_to_coroot(i, j): coefficient of alpha_j^vee in varpi_i^vee (inverse Cartan).
  QMatrix coweight_to_coroot;

  QVector highest_root;
  QVector highest_coroot;
  std::vector<long> marks;
  // (highest_coroot, alpha_j) for each simple root.
  std::vector<long> highest_coroot_pairing;
  // 1-based node indices i with marks eta_i = 1.
  std::vector<int> minuscule;

  long index_of_connection = 1;
  Integer wf_order;
  RadScalar det_coweight_lattice;
  RadScalar alcove_volume;

  // n! * prod(eta_i)
  Integer factorial_times_marks() const;
};

RootSystemData build_root_system(const RootSystemId& id);

// |W_J| from the classification of the connected components of the sub-diagram on J.
Integer weyl_order(const RootSystemData& data, NodeSet J);

// Pairings (v, alpha_i), i.e. coordinates in the fundamental coweight basis.
std::vector<Rational> coweight_coords(const RootSystemData& data, const QVector& v);
// Coordinates in the simple coroot basis (v in the span of the roots).
std::vector<Rational> coroot_coords(const RootSystemData& data, const QVector& v);
QVector coweight_vector(const RootSystemData& data, const std::vector<long>& coords);
QVector coweight_vector(const RootSystemData& data, const std::vector<Rational>& coords);

// x -> x - (x, alpha_i) alpha_i^vee for the 1-based node i.
QVector reflect(const RootSystemData& data, int i, const QVector& v);
QMatrix reflection_matrix(const RootSystemData& data, int i);

// Dominant element of W_f v and the word i_1..i_k with v+ = s_{i_k} ... s_{i_1} v.
// Always reflects in the smallest index with a negative pairing.
std::pair<QVector, std::vector<int>> dominant_representative(const RootSystemData& data,
                                                             const QVector& v);

// All linear elements of the parabolic subgroup W_J. Refuses (BudgetExceeded) when
// |W_J| exceeds the cap; with the default cap this rules out E7 and E8.
std::vector<QMatrix> enumerate_weyl_group(const RootSystemData& data, NodeSet J,
                                          std::size_t cap = 1'000'000);

}  // namespace bruhat
