#pragma once

#include <map>
#include <string>
#include <vector>

#include "bruhat/mpoly.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/orbitpoly.hpp"
#include "bruhat/radical.hpp"
#include "bruhat/rootsys.hpp"
#include "bruhat/volume.hpp"

namespace bruhat {

enum class Provenance { ClosedForm, TypeAPipeline, Fitted };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

// Lattice-normalized coefficients mu'_J = mu_J * sqrt(gram_J), so that
// |<= theta(lambda)| = sum_J mu'_J r_J(lambda) is an identity over Q.
struct GeometricCoefficients {
  RootSystemId system;
  std::map<NodeSet, Rational> mu_prime;
  std::map<NodeSet, Provenance> provenance;
  std::map<NodeSet, Rational> gram;

  // Euclidean coefficient mu_J.
  RadScalar mu(NodeSet J) const;
};

Rational mu_empty(const RootSystemData& data);
// 1 / vol(A_id) = n! eta_1...eta_n / det(coweight lattice).
RadScalar mu_full(const RootSystemData& data);
// mu_full * sqrt(gram_{I_n}); must be rational.
Rational mu_full_normalized(const RootSystemData& data);

// Unsigned Stirling numbers of the first kind; InvalidInput unless 0 <= b <= a.
Integer stirling1(long a, long b);
// Eulerian numbers with 1 <= s <= r, A(1,1) = 1.
Integer eulerian(long r, long s);

// Ehrhart polynomial E_{k,d}(t) of the hypersimplex, in one variable.
// Valid for 1 <= k <= d; k = d is a single lattice point.
MPoly hypersimplex_ehrhart(long k, long d);

// mu'_J for the connected J = {u+1, ..., u+l} of A_n, by forward substitution in the
// triangular systems built from hypersimplex Ehrhart coefficients and Eulerian numbers.
std::map<NodeSet, Rational> type_a_connected_mu(int n);

// mu'_{I_l} for A_n in closed form: l! (n+1) [n+1, l+1].
Rational type_a_top_mu_prime(int n, int l);

struct FitOptions {
  std::size_t box_cap = kDefaultBoxCap;
  // Largest coordinate of the validation grid; 0 picks 3 for rank <= 3, else 2 (1 above rank 4).
  long validation_max = 0;
  // 2^n coefficients are fitted; larger ranks are refused (BudgetExceeded).
  int max_rank = 8;
};

// Fits mu' from exact lattice counts and verifies on a disjoint set of dominant weights,
// including non-generic ones. Throws FitFailed("fit failed verification").
GeometricCoefficients fit_mu(const RootSystemData& data, const FitOptions& options = {});

// sum_J mu'_J r_J(lambda); MathError("formula evaluation inconsistent") unless it is a
// non-negative integer.
Integer evaluate_formula(const GeometricCoefficients& coeffs, VolumeTable& volumes,
                         const Coweight& lambda);
Integer evaluate_formula(const RootSystemData& data, const GeometricCoefficients& coeffs,
                         const Coweight& lambda);

}  // namespace bruhat
