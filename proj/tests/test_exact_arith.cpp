#include <gtest/gtest.h>

#include <map>
#include <random>

#include "vcell/rational.hpp"
#include "vcell/series.hpp"

using namespace vcell;

namespace {

Rational binomial(long n, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational catalan(long n) { return binomial(2 * n, n) / Rational(n + 1); }

// Naive product over a map of monomials: the oracle for the sparse kernel.
std::map<std::pair<int, int>, Rational> naive_product(const BiSeries& a, const BiSeries& b, int max_degree) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      if (x.i + y.i + x.j + y.j > max_degree) continue;
      out[{x.i + y.i, x.j + y.j}] += x.c * y.c;
    }
  }
  return out;
}

BiSeries random_series(std::mt19937& rng, int max_degree, bool unit) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), keep(0, 2);
  std::vector<BiSeries::Term> terms;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      if (keep(rng) == 0) continue;
      terms.push_back({i, d - i, Rational(num(rng), den(rng))});
    }
  }
  auto s = BiSeries::from_terms(max_degree, std::move(terms));
  if (unit) s += BiSeries::one(max_degree) - BiSeries::monomial(0, 0, s.constant_term(), max_degree);
  return s;
}

}  // namespace

TEST(Rational, NormalizesSignAndLowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_TRUE(Rational(8, 4).is_integer());
}

TEST(Rational, ParseAndOrdering) {
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_ANY_THROW(Rational(1) / Rational(0)); }

TEST(UniSeries, RevertOfLinearIsLinear) {
  auto f = UniSeries::polynomial(6, {0, 2});
  auto h = revert(f);
  EXPECT_EQ(h, UniSeries::polynomial(6, {0, 1}) * Rational(1, 2));
}

TEST(UniSeries, RevertGivesCatalanNumbers) {
  // t - t^2 inverts to the Catalan generating function shifted by t.
  const int K = 12;
  auto h = revert(UniSeries::polynomial(K, {0, 1, -1}));
  for (int n = 1; n <= K; ++n) EXPECT_EQ(h[n], catalan(n - 1)) << n;
}

TEST(UniSeries, RevertComposesToIdentity) {
  auto f = UniSeries::polynomial(10, {0, 1, 3, -2, 5});
  auto h = revert(f);
  EXPECT_EQ(compose(f, h), UniSeries::variable(10));
  EXPECT_EQ(compose(h, f), UniSeries::variable(10));
}

TEST(UniSeries, LogOfGeometricIsHarmonic) {
  const int K = 10;
  auto f = reciprocal(UniSeries::polynomial(K, {1, -1}));
  for (int n = 0; n <= K; ++n) EXPECT_EQ(f[n], Rational(1));
  auto l = log(f);
  EXPECT_TRUE(l[0].is_zero());
  for (int n = 1; n <= K; ++n) EXPECT_EQ(l[n], Rational(1, n));
}

TEST(UniSeries, ExpHasFactorialCoefficients) {
  auto e = exp(UniSeries::variable(9));
  Rational fact(1);
  for (int n = 0; n <= 9; ++n) {
    if (n > 0) fact *= Rational(n);
    EXPECT_EQ(e[n], Rational(1) / fact);
  }
}

TEST(UniSeries, DomainAndRangeErrors) {
  auto f = UniSeries::polynomial(4, {2, 1});
  EXPECT_THROW(log(f), DomainError);
  EXPECT_THROW(exp(f), DomainError);
  EXPECT_THROW(reciprocal(UniSeries::variable(4)), DomainError);
  EXPECT_THROW(revert(f), DomainError);
  EXPECT_THROW(f[5], RangeError);
}

TEST(UniSeries, PowerMatchesBinomial) {
  auto p = pow(UniSeries::polynomial(8, {1, 1}), 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(p[k], binomial(6, k));
  EXPECT_TRUE(p[7].is_zero());
}

TEST(BiSeries, ProductMatchesNaiveConvolution) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const int D = 4 + trial % 5;
    auto a = random_series(rng, D, false);
    auto b = random_series(rng, D, false);
    auto expect = naive_product(a, b, D);
    auto got = a * b;
    std::size_t nonzero = 0;
    for (const auto& [ij, c] : expect) {
      EXPECT_EQ(got.coeff(ij.first, ij.second), c);
      if (!c.is_zero()) ++nonzero;
    }
    EXPECT_EQ(got.size(), nonzero);
  }
}

TEST(BiSeries, ReciprocalLogExpRoundTrips) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 7, true);
    EXPECT_EQ(f * reciprocal(f), BiSeries::one(7));
    EXPECT_EQ(exp(log(f)), f);
  }
}

TEST(BiSeries, LogOfProductIsSumOfLogs) {
  std::mt19937 rng(99);
  auto f = random_series(rng, 8, true);
  auto g = random_series(rng, 8, true);
  EXPECT_EQ(log(f * g), log(f) + log(g));
}

TEST(BiSeries, SwapAndHomogeneousParts) {
  auto f = BiSeries::from_terms(6, {{1, 2, Rational(3)}, {0, 0, Rational(1)}, {2, 2, Rational(-1, 2)}});
  EXPECT_EQ(f.swapped().coeff(2, 1), Rational(3));
  EXPECT_EQ(f.homogeneous(4).size(), 1u);
  EXPECT_THROW(f.coeff(4, 3), RangeError);
  EXPECT_TRUE(f.coeff(3, 3).is_zero());
}

TEST(BiSeries, DiagonalRestriction) {
  auto f = BiSeries::from_terms(6, {{1, 1, Rational(2)}, {2, 0, Rational(3)}, {3, 1, Rational(1, 2)}});
  auto d = diagonal(f);
  EXPECT_EQ(d[1], Rational(5));
  EXPECT_EQ(d[2], Rational(1, 2));
  auto odd = BiSeries::from_terms(6, {{1, 0, Rational(1)}});
  EXPECT_THROW(diagonal(odd), DomainError);
}

TEST(FloatBackend, AgreesWithExact) {
  std::mt19937 rng(4242);
  auto f = random_series(rng, 8, true);
  auto g = random_series(rng, 8, true);
  auto exact = log(f * g);
  auto approx = log(to_float(f) * to_float(g));
  for (const auto& t : exact.terms()) EXPECT_NEAR(approx.coeff(t.i, t.j), t.c.to_double(), 1e-9);
}
