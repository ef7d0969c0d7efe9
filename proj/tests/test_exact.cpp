#include <gtest/gtest.h>

#include <random>

#include "bruhat/errors.hpp"
#include "bruhat/linalg.hpp"
#include "bruhat/mpoly.hpp"
#include "bruhat/radical.hpp"
#include "bruhat/rational.hpp"

using namespace bruhat;

namespace {

Rational random_rational(std::mt19937& rng, int range = 20) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return make_rational(num(rng), den(rng));
}

// Leibniz expansion, for small matrices only.
Rational leibniz_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST(RationalTest, CanonicalFormAndStrings) {
  EXPECT_EQ(to_string(make_rational(6, -8)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(make_rational(1, 0), InvalidInput);
}

TEST(RationalTest, AdditionIsExact) {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(parse_rational(to_string(a)), a);
  }
}

TEST(LinalgTest, GramDeterminantExamples) {
  QVector a1{1, -1, 0}, a2{0, 1, -1};
  EXPECT_EQ(gram_det(std::vector<QVector>{a1}), 2);
  EXPECT_EQ(gram_det(std::vector<QVector>{a1, a2}), 3);
  EXPECT_EQ(gram_det(std::vector<QVector>{}), 1);
  try {
    gram_det(std::vector<QVector>{a1, Rational(2) * a1});
    FAIL() << "expected degenerate basis";
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "degenerate basis");
  }
}

TEST(LinalgTest, GramDeterminantIsPositiveForIndependentVectors) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<QVector> vs;
    for (int k = 0; k < 3; ++k) vs.push_back(QVector{random_rational(rng), random_rational(rng),
                                                     random_rational(rng), random_rational(rng)});
    QMatrix m = QMatrix::from_rows(vs);
    if (rank(m) == 3) {
      EXPECT_GT(gram_det(vs), 0);
    } else {
      EXPECT_THROW(gram_det(vs), MathError);
    }
  }
}

TEST(LinalgTest, SolveLinearExamples) {
  QVector b{3, -1, make_rational(1, 2)};
  EXPECT_EQ(solve_linear(QMatrix::identity(3), b), b);
  QMatrix m{{2, -1}, {-1, 2}};
  EXPECT_EQ(solve_linear(m, QVector{1, 0}), (QVector{make_rational(2, 3), make_rational(1, 3)}));
  try {
    solve_linear(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2});
    FAIL() << "expected singular system";
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "singular system");
  }
}

TEST(LinalgTest, SolveAndDeterminantAgreeWithDirectChecks) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    QMatrix m(n, n);
    QVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = random_rational(rng);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = t % 5 == 0 ? Rational(rng() % 3) : random_rational(rng);
    }
    Rational det = determinant(m);
    EXPECT_EQ(det, leibniz_det(m));
    if (det != 0) {
      EXPECT_EQ(m * solve_linear(m, b), b);
      EXPECT_EQ(m * inverse(m), QMatrix::identity(n));
      EXPECT_EQ(rank(m), n);
    } else {
      EXPECT_THROW(solve_linear(m, b), MathError);
      EXPECT_LT(rank(m), n);
    }
  }
}

TEST(MPolyTest, InterpolationExamples) {
  std::vector<Exponents> s1{{0}, {1}};
  std::vector<Sample> p1{{{0}, 1}, {{1}, 3}};
  MPoly expected = MPoly::constant(1, 1) + MPoly::variable(1, 0) * Rational(2);
  EXPECT_EQ(mpoly_interpolate(s1, p1), expected);

  std::vector<Exponents> s2{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<Sample> p2;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) p2.push_back({{x, y}, x * y});
  EXPECT_EQ(mpoly_interpolate(s2, p2), MPoly::monomial({1, 1}, 1));

  std::vector<Exponents> s3{{2}};
  std::vector<Sample> p3{{{1}, 2}, {{2}, 8}};
  EXPECT_EQ(mpoly_interpolate(s3, p3), MPoly::monomial({2}, 2));
  std::vector<Sample> bad{{{1}, 2}, {{2}, 9}};
  EXPECT_THROW(mpoly_interpolate(s3, bad), MathError);
}

TEST(MPolyTest, SingularGeometryIsReported) {
  std::vector<Exponents> support{{0, 0}, {1, 0}, {0, 1}};
  // Collinear points cannot separate 1, x, y.
  std::vector<Sample> samples{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 3}};
  try {
    mpoly_interpolate(support, samples);
    FAIL() << "expected insufficient sample geometry";
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "insufficient sample geometry");
  }
}

TEST(MPolyTest, InterpolationRecoversRandomPolynomials) {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<Exponents> support;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; a + b <= 2; ++b) support.push_back({a, b});
    MPoly p(2);
    for (const auto& e : support) p.add_term(e, random_rational(rng));
    std::vector<Sample> samples;
    for (int x = 0; x <= 3; ++x)
      for (int y = 0; y <= 3; ++y) {
        std::vector<Rational> pt{x, y};
        samples.push_back({pt, p.evaluate(std::span<const Rational>(pt))});
      }
    EXPECT_EQ(mpoly_interpolate(support, samples), p);
  }
}

TEST(MPolyTest, ArithmeticAndStructure) {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * x + Rational(4) * (x * y) + y * y;
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(std::vector<long>{1, 1}), 6);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_FALSE(p.independent_of(0));
  EXPECT_TRUE((y * y).independent_of(0));
  EXPECT_FALSE((p + MPoly::constant(2, 1)).is_homogeneous());
  EXPECT_EQ(p.to_string(), "m1^2 + 4*m1*m2 + m2^2");
}

TEST(RadScalarTest, Examples) {
  RadScalar r2 = RadScalar::sqrt_of(2);
  RadScalar sq = r2 * r2;
  EXPECT_EQ(sq.coeff(), 2);
  EXPECT_EQ(sq.radicand(), 1);

  RadScalar six_over_root3 = RadScalar(6, 1) * RadScalar(1, make_rational(1, 3));
  EXPECT_EQ(six_over_root3.coeff(), 2);
  EXPECT_EQ(six_over_root3.radicand(), 3);

  EXPECT_EQ(RadScalar(12, 3).square(), 432);
  EXPECT_EQ(RadScalar(0, 5), RadScalar());
  EXPECT_EQ(RadScalar().radicand(), 1);
}

TEST(RadScalarTest, AddSameClass) {
  RadScalar a(1, 8), b(3, 2);  // 2*sqrt(2), 3*sqrt(2)
  RadScalar s = add_same_class(a, b);
  EXPECT_EQ(s.coeff(), 5);
  EXPECT_EQ(s.radicand(), 2);
  EXPECT_EQ(add_same_class(RadScalar(), b), b);
  try {
    add_same_class(RadScalar::sqrt_of(2), RadScalar::sqrt_of(3));
    FAIL() << "expected incompatible radical classes";
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "incompatible radical classes");
  }
}

TEST(RadScalarTest, CanonicalRadicandIsSquareFree) {
  std::mt19937 rng(13);
  for (int t = 0; t < 300; ++t) {
    Rational c = random_rational(rng, 50);
    Rational r = make_rational(1 + rng() % 500, 1 + rng() % 500);
    RadScalar s(c, r);
    if (s.is_zero()) continue;
    // Value preserved: coeff^2 * radicand = c^2 * r.
    EXPECT_EQ(s.square(), c * c * r);
    Integer d = s.radicand();
    for (Integer p = 2; p * p <= d; ++p) EXPECT_FALSE(mpz_divisible_p(d.get_mpz_t(), Integer(p * p).get_mpz_t()));
    RadScalar sq = s * s;
    EXPECT_EQ(sq.radicand(), 1);
    EXPECT_EQ(sq.coeff(), s.square());
  }
}
