#pragma once

#include <map>
#include <vector>

#include "bruhat/linalg.hpp"
#include "bruhat/mpoly.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/radical.hpp"
#include "bruhat/rootsys.hpp"

namespace bruhat {

// V_J(m) = rel_poly(m) * sqrt(gram), where gram is the Gram determinant of the simple
// coroots in J (the covolume of the coroot lattice in the span of F_J).
struct VolumePolynomial {
  NodeSet J;
  MPoly rel_poly;
  Rational gram;

  RadScalar evaluate(const std::vector<long>& m) const;
};

struct MixedBasisVector {
  QVector nu;
  Rational norm2;
  // (varpi_i^vee, nu) for i = 1..n; zero outside J.
  std::vector<Rational> coweight_pairings;
};

// nu_j in Span{alpha_k : k in J} with (nu_j, alpha_i^vee) = delta_ij for i in J.
std::map<int, MixedBasisVector> mixed_basis_nu(const RootSystemData& data, NodeSet J);

Rational gram_of(const RootSystemData& data, NodeSet J);

// Pyramid recursion over faces, memoized over subsets.
class VolumeTable {
 public:
  explicit VolumeTable(const RootSystemData& data);
  const VolumePolynomial& get(NodeSet J);

 private:
  const RootSystemData* data_;
  std::map<NodeSet, VolumePolynomial> memo_;
};

VolumePolynomial volume_polynomial(const RootSystemData& data, NodeSet J);

// Coefficient of prod_{j in J} m_j in V_J. Throws InternalError unless positive.
RadScalar squarefree_coefficient(const RootSystemData& data, NodeSet J);

// Exponent vector of the square-free monomial m_J.
Exponents squarefree_monomial(int n, NodeSet J);

}  // namespace bruhat
