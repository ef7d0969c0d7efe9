#include "bruhat/volume.hpp"

#include "bruhat/errors.hpp"

namespace bruhat {

RadScalar VolumePolynomial::evaluate(const std::vector<long>& m) const {
  return rel_poly.evaluate(std::span<const long>(m)) * RadScalar::sqrt_of(gram);
}

std::map<int, MixedBasisVector> mixed_basis_nu(const RootSystemData& data, NodeSet J) {
  if (!J.is_subset_of(NodeSet::full(data.n))) throw InvalidInput("J must be a subset of I_n");
  const std::vector<int> js = J.elements();
  const std::size_t k = js.size();
  QMatrix m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m(a, b) = data.cartan[js[a] - 1][js[b] - 1];

  std::map<int, MixedBasisVector> out;
  for (std::size_t a = 0; a < k; ++a) {
    QVector e(k);
    e[a] = 1;
    QVector u = solve_linear(m, e);
    MixedBasisVector mb;
    mb.nu = QVector(data.ambient_dim);
    mb.coweight_pairings.assign(data.n, Rational(0));
    for (std::size_t b = 0; b < k; ++b) {
      mb.nu += u[b] * data.simple_roots[js[b] - 1];
      mb.coweight_pairings[js[b] - 1] = u[b];
    }
    mb.norm2 = dot(mb.nu, mb.nu);
    out.emplace(js[a], std::move(mb));
  }
  return out;
}

Rational gram_of(const RootSystemData& data, NodeSet J) {
  std::vector<QVector> coroots;
  for (int j : J.elements()) coroots.push_back(data.simple_coroots[j - 1]);
  return gram_det(coroots);
}

Exponents squarefree_monomial(int n, NodeSet J) {
  Exponents e(n, 0);
  for (int j : J.elements()) e[j - 1] = 1;
  return e;
}

VolumeTable::VolumeTable(const RootSystemData& data) : data_(&data) {}

const VolumePolynomial& VolumeTable::get(NodeSet J) {
  if (auto it = memo_.find(J); it != memo_.end()) return it->second;
  const RootSystemData& data = *data_;
  const std::size_t n = data.n;
  if (!J.is_subset_of(NodeSet::full(data.n))) throw InvalidInput("J must be a subset of I_n");

  VolumePolynomial v{J, MPoly(n), Rational(1)};
  if (J.empty()) {
    v.rel_poly = MPoly::constant(n, 1);
    return memo_.emplace(J, std::move(v)).first->second;
  }

  v.gram = gram_of(data, J);
  const RadScalar sqrt_gram = RadScalar::sqrt_of(v.gram);
  const Integer order_j = weyl_order(data, J);
  MPoly sum(n);
  for (const auto& [j, mb] : mixed_basis_nu(data, J)) {
    const NodeSet K = J.without(j);
    const VolumePolynomial& lower = get(K);
    Integer index;
    mpz_divexact(index.get_mpz_t(), order_j.get_mpz_t(), weyl_order(data, K).get_mpz_t());

    // sqrt(gram_K) / |nu_j| must be a rational multiple of sqrt(gram_J).
    RadScalar ratio = RadScalar::sqrt_of(lower.gram / mb.norm2);
    if (!ratio.same_class(sqrt_gram)) throw InternalError("radical inconsistency");
    Rational q = ratio.coeff() / sqrt_gram.coeff();

    MPoly height(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mb.coweight_pairings[i] != 0) {
        height += MPoly::variable(n, i) * mb.coweight_pairings[i];
      }
    }
    sum += (height * lower.rel_poly) * (Rational(index) * q);
  }
  v.rel_poly = sum * Rational(1, J.size());
  return memo_.emplace(J, std::move(v)).first->second;
}

VolumePolynomial volume_polynomial(const RootSystemData& data, NodeSet J) {
  VolumeTable table(data);
  return table.get(J);
}

RadScalar squarefree_coefficient(const RootSystemData& data, NodeSet J) {
  VolumePolynomial v = volume_polynomial(data, J);
  Rational c = v.rel_poly.coefficient(squarefree_monomial(data.n, J));
  if (c <= 0) throw InternalError("non-positive square-free coefficient for " + J.to_string());
  return c * RadScalar::sqrt_of(v.gram);
}

}  // namespace bruhat
