#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "bruhat/linalg.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/rootsys.hpp"

namespace bruhat {

// x -> linear * x + translation. Elements of W_a have translation in the coroot lattice,
// elements of the extended group W_e in the coweight lattice.
struct AffineElement {
  QMatrix linear;
  QVector translation;

  static AffineElement identity(std::size_t dim);
  QVector apply(const QVector& x) const;
  AffineElement inverse() const;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend bool operator<(const AffineElement& a, const AffineElement& b);
};

// (a * b)(x) = a(b(x))
AffineElement operator*(const AffineElement& a, const AffineElement& b);

struct ElementWithWord {
  AffineElement element;
  // w = s_{word[0]} s_{word[1]} ... s_{word.back()}
  std::vector<int> word;
};

// Node 0 is the affine reflection x -> s_{alpha~}(x) - alpha~^vee.
AffineElement simple_reflection(const RootSystemData& data, int i);
AffineElement element_from_word(const RootSystemData& data, const std::vector<int>& word);
bool in_affine_weyl(const RootSystemData& data, const AffineElement& w);

// Barycenter of the fundamental alcove, the base point for all hyperplane counts.
QVector alcove_barycenter(const RootSystemData& data);

// Number of hyperplanes H_{alpha,k} separating A_id from A_w.
long length(const RootSystemData& data, const AffineElement& w);

// The element w with p in A_w and a reduced word for it, obtained by folding p into the
// fundamental alcove across violated walls (smallest index first).
// Throws InvalidInput("point on reflection hyperplane").
ElementWithWord element_from_point(const RootSystemData& data, const QVector& p);

// Element whose alcove is A_{w0} + lambda, lambda given in the coweight basis.
ElementWithWord theta(const RootSystemData& data, const std::vector<long>& lambda);

struct Descents {
  NodeSet left;
  NodeSet right;
};
Descents descents(const RootSystemData& data, const AffineElement& w);

// 0 when lambda lies in the coroot lattice, otherwise the minuscule node i with
// lambda + varpi_i^vee in the coroot lattice.
int sigma_reflection(const RootSystemData& data, const QVector& lambda);

// Coxeter matrix of the affine system on nodes 0..n; 0 encodes infinity.
std::vector<std::vector<int>> coxeter_matrix(const RootSystemData& data);

// Integer coordinates of an alcove: key[j] = D * (w(x0), alpha_{j+1}) with a common
// denominator D. Ranks up to 8.
using AlcoveKey = std::array<std::int64_t, 8>;

struct AlcoveKeyHash {
  std::size_t operator()(const AlcoveKey& k) const;
};

class AlcoveWalker {
 public:
  explicit AlcoveWalker(const RootSystemData& data);

  const AlcoveKey& base() const { return base_; }
  std::int64_t denominator() const { return denom_; }
  // Key of s_i * w from the key of w.
  AlcoveKey reflect(int i, const AlcoveKey& key) const;
  // Key of the alcove translated by a coweight given in the coweight basis.
  AlcoveKey translate(const AlcoveKey& key, const std::vector<long>& coweight) const;
  long length(const AlcoveKey& key) const;
  AlcoveKey key_of(const AffineElement& w) const;

 private:
  const RootSystemData* data_;
  int n_;
  std::int64_t denom_;
  AlcoveKey base_{};
};

// Size of {u : u <= w}, by subword closure along the given reduced word. The word is
// validated against w (product and length). Throws BudgetExceeded above `cap`.
std::size_t lower_interval_size(const RootSystemData& data, const AffineElement& w,
                                const std::vector<int>& word, std::size_t cap = 1'000'000);

// Same closure, materializing every element.
std::vector<AffineElement> lower_interval(const RootSystemData& data, const AffineElement& w,
                                          const std::vector<int>& word,
                                          std::size_t cap = 1'000'000);

// Alcoves A_u for u in the subgroup generated by the given nodes (which must generate a
// finite group).
std::unordered_set<AlcoveKey, AlcoveKeyHash> parabolic_alcoves(const RootSystemData& data,
                                                                NodeSet generators,
                                                                std::size_t cap = 1'000'000);

}  // namespace bruhat
