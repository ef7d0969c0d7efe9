#include <gtest/gtest.h>

#include <random>

#include "bruhat/errors.hpp"
#include "bruhat/orbitpoly.hpp"
#include "bruhat/rootsys.hpp"
#include "bruhat/weyl.hpp"

using namespace bruhat;

namespace {

std::vector<RootSystemId> small_systems() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 2},
          {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}};
}

// Longest element of W_f: x0 lies in the antidominant chamber, and folding it to the
// dominant chamber traces out w0.
QMatrix longest_element(const RootSystemData& d) {
  auto [dom, word] = dominant_representative(d, alcove_barycenter(d));
  EXPECT_EQ(dom, -alcove_barycenter(d));
  QMatrix m = QMatrix::identity(d.ambient_dim);
  for (int i : word) m = reflection_matrix(d, i) * m;
  return m;
}

}  // namespace

TEST(RootSystemTest, A2Data) {
  auto d = build_root_system({'A', 2});
  EXPECT_EQ(d.wf_order, 6);
  EXPECT_EQ(d.marks, (std::vector<long>{1, 1}));
  EXPECT_EQ(d.index_of_connection, 3);
  EXPECT_EQ(d.factorial_times_marks() * d.index_of_connection, d.wf_order);
}

TEST(RootSystemTest, G2Data) {
  auto d = build_root_system({'G', 2});
  EXPECT_EQ(d.marks[0] * d.marks[1], 6);
  EXPECT_EQ(d.det_coweight_lattice, RadScalar(1, make_rational(1, 3)));
  EXPECT_EQ(d.alcove_volume, RadScalar(make_rational(1, 12), make_rational(1, 3)));
}

TEST(RootSystemTest, TypeAAlcoveVolume) {
  for (int n = 1; n <= 6; ++n) {
    auto d = build_root_system({'A', n});
    EXPECT_EQ(d.alcove_volume, RadScalar(Rational(1, 1) / Rational(factorial(n + 1)), n + 1)) << n;
  }
}

TEST(RootSystemTest, InvalidRanksAreRejected) {
  for (RootSystemId bad : std::vector<RootSystemId>{{'A', 0}, {'B', 1}, {'C', 1}, {'D', 2}, {'E', 5},
                                                    {'E', 9}, {'F', 3}, {'G', 3}, {'H', 3}, {'A', 31}}) {
    EXPECT_THROW(build_root_system(bad), InvalidInput) << bad.to_string();
  }
}

TEST(RootSystemTest, WeylOrderExamples) {
  auto a3 = build_root_system({'A', 3});
  EXPECT_EQ(weyl_order(a3, NodeSet::of({1, 3})), 4);
  auto a4 = build_root_system({'A', 4});
  EXPECT_EQ(weyl_order(a4, NodeSet::of({1, 2, 4})), 12);
  EXPECT_EQ(enumerate_weyl_group(a4, NodeSet::of({1, 2, 4})).size(), 12u);
  for (const auto& id : small_systems()) {
    EXPECT_EQ(weyl_order(build_root_system(id), NodeSet()), 1);
  }
}

TEST(RootSystemTest, ClassificationOrdersMatchEnumeration) {
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    // E6 is large; restrict to proper subsets there.
    for (NodeSet J : subsets_of(d.n)) {
      if (id.family == 'E' && J.size() > 5) continue;
      if (id.family == 'E' && J.size() > 4 && J.bits() % 3 != 0) continue;
      EXPECT_EQ(weyl_order(d, J), enumerate_weyl_group(d, J).size()) << id.to_string() << J.to_string();
    }
  }
}

TEST(RootSystemTest, ExceptionalOrders) {
  EXPECT_EQ(build_root_system({'E', 6}).wf_order, 51840);
  EXPECT_EQ(build_root_system({'E', 7}).wf_order, 2903040);
  EXPECT_EQ(build_root_system({'E', 8}).wf_order, 696729600);
  EXPECT_EQ(build_root_system({'F', 4}).wf_order, 1152);
  EXPECT_EQ(build_root_system({'G', 2}).wf_order, 12);
}

TEST(RootSystemTest, LargeEnumerationIsRefused) {
  for (int r : {7, 8}) {
    auto d = build_root_system({'E', r});
    EXPECT_THROW(enumerate_weyl_group(d, NodeSet::full(r)), BudgetExceeded);
  }
}

TEST(RootSystemTest, StructuralInvariants) {
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    for (int i = 0; i < d.n; ++i) {
      for (int j = 0; j < d.n; ++j) {
        EXPECT_EQ(dot(d.fundamental_coweights[i], d.simple_roots[j]), i == j ? 1 : 0);
        EXPECT_EQ(dot(d.fundamental_weights[i], d.simple_coroots[j]), i == j ? 1 : 0);
        EXPECT_EQ(Rational(d.cartan[i][j]), dot(d.simple_coroots[i], d.simple_roots[j]));
        if (i == j) EXPECT_EQ(d.cartan[i][j], 2);
        else EXPECT_LE(d.cartan[i][j], 0);
      }
      EXPECT_GT(d.marks[i], 0);
    }
    QVector sum(d.ambient_dim);
    for (int i = 0; i < d.n; ++i) sum += Rational(d.marks[i]) * d.simple_roots[i];
    EXPECT_EQ(sum, d.highest_root);
    EXPECT_EQ(d.factorial_times_marks() * d.index_of_connection, d.wf_order) << id.to_string();
    EXPECT_EQ(d.alcove_volume * RadScalar(Rational(d.factorial_times_marks()), 1), d.det_coweight_lattice);
  }
}

TEST(RootSystemTest, SimpleReflectionsPermuteOtherPositiveRoots) {
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    std::set<QVector> roots(d.positive_roots.begin(), d.positive_roots.end());
    for (int i = 1; i <= d.n; ++i) {
      for (const auto& a : d.positive_roots) {
        if (a == d.simple_roots[i - 1]) {
          EXPECT_EQ(reflect(d, i, a), -a);
        } else {
          EXPECT_TRUE(roots.count(reflect(d, i, a))) << id.to_string();
        }
      }
    }
  }
}

TEST(RootSystemTest, PositiveRootCountIsLengthOfLongestElement) {
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    AffineElement w0{longest_element(d), QVector(d.ambient_dim)};
    EXPECT_EQ(length(d, w0), static_cast<long>(d.positive_roots.size())) << id.to_string();
  }
}

TEST(RootSystemTest, StabilizerOfDominantWeightIsTheVanishingSet) {
  std::mt19937 rng(17);
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    for (int t = 0; t < 10; ++t) {
      Coweight m(d.n);
      for (auto& c : m) c = rng() % 3;
      QVector lambda = coweight_vector(d, m);
      NodeSet Z = vanishing_set(m);
      for (int i = 1; i <= d.n; ++i) EXPECT_EQ(reflect(d, i, lambda) == lambda, Z.contains(i));
    }
  }
}

TEST(RootSystemTest, DominantRepresentativeExamples) {
  auto a2 = build_root_system({'A', 2});
  QVector rho = coweight_vector(a2, std::vector<long>{1, 1});
  auto [same, empty] = dominant_representative(a2, rho);
  EXPECT_EQ(same, rho);
  EXPECT_TRUE(empty.empty());

  QVector s1rho = coweight_vector(a2, std::vector<long>{-1, 2});
  EXPECT_EQ(s1rho, reflect(a2, 1, rho));
  auto [back, word] = dominant_representative(a2, s1rho);
  EXPECT_EQ(back, rho);
  EXPECT_EQ(word, std::vector<int>{1});

  auto a1 = build_root_system({'A', 1});
  QVector w = a1.fundamental_coweights[0];
  EXPECT_EQ(dominant_representative(a1, -w).first, w);
}

TEST(RootSystemTest, DominantRepresentativeIsIdempotentAndInvariant) {
  std::mt19937 rng(23);
  for (const auto& id : small_systems()) {
    auto d = build_root_system(id);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> c(d.n);
      for (auto& x : c) x = make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
      QVector v = coweight_vector(d, c);
      auto [plus, word] = dominant_representative(d, v);
      for (const auto& p : coweight_coords(d, plus)) EXPECT_GE(p, 0);
      QVector replay = v;
      for (int i : word) replay = reflect(d, i, replay);
      EXPECT_EQ(replay, plus);
      EXPECT_EQ(dominant_representative(d, plus).first, plus);
      QVector moved = v;
      for (int k = 0; k < 6; ++k) moved = reflect(d, 1 + rng() % d.n, moved);
      EXPECT_EQ(dominant_representative(d, moved).first, plus);
    }
  }
}
