#include <gtest/gtest.h>

#include "bruhat/errors.hpp"
#include "bruhat/geocoeff.hpp"
#include "bruhat/orbitpoly.hpp"
#include "bruhat/volume.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {

std::vector<RootSystemId> rank_at_most3() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 3}, {'G', 2}};
}

bool is_connected_interval(NodeSet J) {
  if (J.empty()) return false;
  auto e = J.elements();
  return e.back() - e.front() + 1 == static_cast<int>(e.size());
}

Rational eval_univariate(const MPoly& p, long t) { return p.evaluate(std::vector<long>{t}); }

}  // namespace

TEST(GeoCoeffTest, ClosedFormExamples) {
  auto a2 = build_root_system({'A', 2});
  auto g2 = build_root_system({'G', 2});
  auto f4 = build_root_system({'F', 4});
  EXPECT_EQ(mu_empty(a2), 6);
  EXPECT_EQ(mu_empty(g2), 12);
  EXPECT_EQ(mu_empty(f4), 1152);
  EXPECT_EQ(mu_full(a2), RadScalar(2, 3));
  EXPECT_EQ(mu_full(a2).square(), 12);
  EXPECT_EQ(mu_full(g2), RadScalar(12, 3));
  EXPECT_EQ(mu_full(g2).square(), 432);
  EXPECT_EQ(mu_full(f4), RadScalar(576, 1));
  EXPECT_EQ(mu_full_normalized(a2), 6);
}

TEST(GeoCoeffTest, StirlingAndEulerianExamples) {
  EXPECT_EQ(stirling1(4, 2), 11);
  EXPECT_EQ(eulerian(3, 2), 4);
  EXPECT_EQ(eulerian(1, 1), 1);
  for (long a = 0; a <= 8; ++a) EXPECT_EQ(stirling1(a, a), 1);
  EXPECT_THROW(stirling1(2, 3), InvalidInput);
  EXPECT_THROW(stirling1(-1, 0), InvalidInput);
  EXPECT_THROW(eulerian(3, 0), InvalidInput);
  EXPECT_THROW(eulerian(3, 4), InvalidInput);
}

TEST(GeoCoeffTest, StirlingAndEulerianMatchPermutationCounts) {
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= a; ++b) EXPECT_EQ(stirling1(a, b), oracle::stirling1_by_permutations(a, b)) << a << "," << b;
    for (int s = 1; s <= a; ++s) EXPECT_EQ(eulerian(a, s), oracle::eulerian_by_permutations(a, s)) << a << "," << s;
  }
}

TEST(GeoCoeffTest, HypersimplexExamples) {
  MPoly e13 = hypersimplex_ehrhart(1, 3);
  MPoly expected(1);
  expected.add_term({2}, make_rational(1, 2));
  expected.add_term({1}, make_rational(3, 2));
  expected.add_term({0}, 1);
  EXPECT_EQ(e13, expected);
  EXPECT_EQ(eval_univariate(e13, 2), 6);
  for (long d = 1; d <= 6; ++d)
    for (long k = 1; k <= d; ++k) {
      EXPECT_EQ(eval_univariate(hypersimplex_ehrhart(k, d), 1), Rational(binomial(d, k)));
      EXPECT_EQ(eval_univariate(hypersimplex_ehrhart(k, d), 0), 1);
    }
  EXPECT_THROW(hypersimplex_ehrhart(0, 3), InvalidInput);
  EXPECT_THROW(hypersimplex_ehrhart(4, 3), InvalidInput);
}

TEST(GeoCoeffTest, HypersimplexMatchesDilationCounts) {
  for (int d = 1; d <= 6; ++d)
    for (int k = 1; k <= d; ++k) {
      MPoly e = hypersimplex_ehrhart(k, d);
      for (int m = 0; m <= 4; ++m)
        EXPECT_EQ(eval_univariate(e, m), oracle::hypersimplex_points(k, d, m)) << k << "," << d << "," << m;
    }
}

TEST(GeoCoeffTest, HypersimplexIdentityForMultiplesOfFundamentalCoweights) {
  for (int n = 1; n <= 3; ++n) {
    auto d = build_root_system({'A', n});
    Integer scale = factorial(n + 1);
    for (int k = 1; k <= n; ++k) {
      MPoly e = hypersimplex_ehrhart(k, n + 1);
      for (long m = 0; m <= 4; ++m) {
        Coweight lambda(n, 0);
        lambda[k - 1] = m;
        EXPECT_EQ(Rational(interval_size_lattice(d, lambda)), Rational(scale) * eval_univariate(e, m));
      }
    }
  }
}

TEST(GeoCoeffTest, TypeAPipelineExamples) {
  auto mu = type_a_connected_mu(2);
  EXPECT_EQ(mu.at(NodeSet::of({1})), 9);
  EXPECT_EQ(mu.at(NodeSet::of({2})), 9);
  EXPECT_EQ(mu.at(NodeSet::of({1, 2})), 6);
  EXPECT_EQ(type_a_top_mu_prime(2, 2), 6);
  auto a2 = build_root_system({'A', 2});
  EXPECT_EQ(RadScalar(type_a_top_mu_prime(2, 2), make_rational(1, 3)), mu_full(a2));
  EXPECT_THROW(type_a_connected_mu(0), InvalidInput);
}

TEST(GeoCoeffTest, TypeAPipelineAgreesWithClosedFormsAndFit) {
  for (int n = 1; n <= 4; ++n) {
    auto d = build_root_system({'A', n});
    auto pipeline = type_a_connected_mu(n);
    auto fitted = fit_mu(d);
    for (int l = 1; l <= n; ++l) {
      Rational closed = Rational(factorial(l) * (n + 1) * oracle::stirling1_by_permutations(n + 1, l + 1));
      EXPECT_EQ(type_a_top_mu_prime(n, l), closed);
      EXPECT_EQ(pipeline.at(NodeSet::full(l)), closed);
    }
    EXPECT_EQ(pipeline.at(NodeSet::full(n)), mu_full_normalized(d));
    for (NodeSet J : subsets_of(n)) {
      if (!is_connected_interval(J)) continue;
      EXPECT_EQ(pipeline.at(J), fitted.mu_prime.at(J)) << n << J.to_string();
    }
  }
}

TEST(GeoCoeffTest, FitExamples) {
  auto a2 = build_root_system({'A', 2});
  auto c = fit_mu(a2);
  EXPECT_EQ(c.mu_prime.at(NodeSet()), 6);
  EXPECT_EQ(c.mu_prime.at(NodeSet::of({1})), 9);
  EXPECT_EQ(c.mu_prime.at(NodeSet::of({2})), 9);
  EXPECT_EQ(c.mu_prime.at(NodeSet::full(2)), 6);
  EXPECT_EQ(c.provenance.at(NodeSet()), Provenance::ClosedForm);
  EXPECT_EQ(evaluate_formula(a2, c, {1, 1}), 42);
  EXPECT_EQ(evaluate_formula(a2, c, {1, 0}), 18);
  EXPECT_EQ(evaluate_formula(a2, c, {2, 2}), 114);
  EXPECT_EQ(evaluate_formula(a2, c, {0, 0}), 6);

  auto g2 = build_root_system({'G', 2});
  auto cg = fit_mu(g2);
  EXPECT_EQ(cg.mu_prime.at(NodeSet()), 12);
  EXPECT_EQ(cg.mu(NodeSet::full(2)).square(), 432);

  auto b2 = build_root_system({'B', 2});
  EXPECT_EQ(fit_mu(b2).mu_prime.at(NodeSet()), 8);
}

TEST(GeoCoeffTest, FittedEndpointsMatchClosedForms) {
  for (const auto& id : rank_at_most3()) {
    auto d = build_root_system(id);
    auto c = fit_mu(d);
    EXPECT_EQ(c.mu_prime.at(NodeSet()), Rational(d.wf_order));
    EXPECT_EQ(c.mu(NodeSet::full(d.n)), mu_full(d)) << id.to_string();
    EXPECT_EQ(c.mu_prime.size(), std::size_t{1} << d.n);
  }
}

TEST(GeoCoeffTest, FormulaMatchesLatticeCountsIncludingWalls) {
  for (const auto& id : rank_at_most3()) {
    auto d = build_root_system(id);
    auto c = fit_mu(d);
    VolumeTable table(d);
    for (const auto& lambda : oracle::grid(d.n, 4)) {
      EXPECT_EQ(evaluate_formula(c, table, lambda), interval_size_lattice(d, lambda)) << id.to_string();
    }
  }
}

TEST(GeoCoeffTest, RankFourFitsValidate) {
  for (RootSystemId id : std::vector<RootSystemId>{{'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}}) {
    auto d = build_root_system(id);
    auto c = fit_mu(d);
    VolumeTable table(d);
    for (const auto& lambda : oracle::grid(d.n, 1)) {
      EXPECT_EQ(evaluate_formula(c, table, lambda), interval_size_lattice(d, lambda)) << id.to_string();
    }
  }
}

// The degree-d part of the interval polynomial, recovered by interpolating lattice counts,
// is the sum over |J| = d of mu'_J r_J.
TEST(GeoCoeffTest, DegreeStructure) {
  for (const auto& id : std::vector<RootSystemId>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'C', 3}}) {
    auto d = build_root_system(id);
    std::vector<Exponents> support;
    for (const auto& e : oracle::grid(d.n, d.n)) {
      long total = 0;
      for (long x : e) total += x;
      if (total <= d.n) support.push_back(Exponents(e.begin(), e.end()));
    }
    std::vector<Sample> samples;
    for (const auto& lambda : oracle::grid(d.n, d.n + 1, 1)) {
      samples.push_back({std::vector<Rational>(lambda.begin(), lambda.end()),
                         Rational(interval_size_lattice(d, lambda))});
    }
    MPoly counts = mpoly_interpolate(support, samples);
    auto c = fit_mu(d);
    VolumeTable table(d);
    for (int deg = 0; deg <= d.n; ++deg) {
      MPoly expected(d.n), part(d.n);
      for (NodeSet J : subsets_of(d.n))
        if (J.size() == deg) expected += c.mu_prime.at(J) * table.get(J).rel_poly;
      for (const auto& [e, q] : counts.terms()) {
        long total = 0;
        for (unsigned x : e) total += x;
        if (total == deg) part.add_term(e, q);
      }
      EXPECT_EQ(part, expected) << id.to_string() << " degree " << deg;
    }
  }
}

TEST(GeoCoeffTest, TamperedCoefficientsAreDetected) {
  auto a2 = build_root_system({'A', 2});
  auto c = fit_mu(a2);
  c.mu_prime[NodeSet::full(2)] = 5;
  EXPECT_THROW(evaluate_formula(a2, c, {1, 0}), MathError);
  auto incomplete = fit_mu(a2);
  incomplete.mu_prime.erase(NodeSet::of({1}));
  EXPECT_THROW(evaluate_formula(a2, incomplete, {1, 0}), InvalidInput);
  auto foreign = fit_mu(build_root_system({'B', 2}));
  EXPECT_THROW(evaluate_formula(a2, foreign, {1, 0}), InvalidInput);
}

TEST(GeoCoeffTest, LargeRanksAreRefused) {
  auto a9 = build_root_system({'A', 9});
  EXPECT_THROW(fit_mu(a9), BudgetExceeded);
  FitOptions tight;
  tight.max_rank = 2;
  EXPECT_THROW(fit_mu(build_root_system({'A', 3}), tight), BudgetExceeded);
}

TEST(GeoCoeffTest, ProvenanceRoundTrip) {
  for (Provenance p : {Provenance::ClosedForm, Provenance::TypeAPipeline, Provenance::Fitted}) {
    EXPECT_EQ(parse_provenance(to_string(p)), p);
  }
  EXPECT_EQ(to_string(Provenance::TypeAPipeline), "type-A-pipeline");
  EXPECT_THROW(parse_provenance("guessed"), InvalidInput);
}
