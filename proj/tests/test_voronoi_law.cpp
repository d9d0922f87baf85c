#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "vcell/voronoi_law.hpp"

using namespace vcell;

TEST(FSeries, AreaTwoStratum) {
  auto f = F_series<Rational>(4, Variant::all);
  EXPECT_EQ(f.series.coeff(1, 1), Rational(1));
  EXPECT_EQ(f.series.coeff(3, 1), Rational(2));
  EXPECT_EQ(f.series.coeff(2, 2), Rational(3, 2));
  EXPECT_EQ(f.series.coeff(1, 3), Rational(2));
  EXPECT_EQ(f.series.homogeneous(4).size(), 3u);
}

TEST(FSeries, OnlyEvenTotalDegrees) {
  auto f = F_series<Rational>(12, Variant::all);
  for (const auto& t : f.series.terms()) {
    EXPECT_EQ((t.i + t.j) % 2, 0);
    EXPECT_GE(t.i, 1);
    EXPECT_GE(t.j, 1);
  }
}

TEST(FSeries, SymmetricUnderCellExchange) {
  for (Variant v : {Variant::all, Variant::even, Variant::odd}) {
    auto f = F_series<Rational>(12, v);
    EXPECT_EQ(f.series.swapped(), f.series) << to_string(v);
  }
}

TEST(FSeries, ParityVariantsSumToAll) {
  const int D = 16;
  auto all = F_series<Rational>(D, Variant::all);
  auto even = F_series<Rational>(D, Variant::even);
  auto odd = F_series<Rational>(D, Variant::odd);
  EXPECT_EQ(even.series + odd.series, all.series);
}

TEST(FSeries, ParityVariantsLowOrders) {
  auto even = F_series<Rational>(4, Variant::even);
  auto odd = F_series<Rational>(4, Variant::odd);
  EXPECT_EQ(even.series, BiSeries::monomial(2, 2, Rational(1), 4));
  EXPECT_EQ(odd.series.coeff(1, 1), Rational(1));
  EXPECT_EQ(odd.series.coeff(2, 2), Rational(1, 2));
  EXPECT_EQ(odd.series.coeff(3, 1), Rational(2));
}

TEST(FSeries, DiagonalMatchesClosedForm) {
  const int K = 12;
  auto f = F_series<Rational>(2 * K, Variant::all);
  EXPECT_EQ(diagonal(f.series), F_diag_closed(K));
}

TEST(FSeries, FloatBackendTracksExact) {
  auto exact = F_series<Rational>(16, Variant::all);
  auto approx = F_series<double>(16, Variant::all);
  for (const auto& t : exact.series.terms()) {
    EXPECT_NEAR(approx.series.coeff(t.i, t.j), t.c.to_double(), 1e-8 * std::abs(t.c.to_double()));
  }
}

TEST(FSeries, RejectsOddDegree) {
  EXPECT_ANY_THROW(F_series<Rational>(5, Variant::all));
}

TEST(Law, TwoEdges) {
  auto law = law_table(F_series<Rational>(4, Variant::all), 2);
  ASSERT_EQ(law.probabilities.size(), 5u);
  EXPECT_EQ(law.probabilities[0], Rational(0));
  EXPECT_EQ(law.probabilities[1], Rational(4, 11));
  EXPECT_EQ(law.probabilities[2], Rational(3, 11));
  EXPECT_EQ(law.probabilities[3], Rational(4, 11));
  EXPECT_EQ(law.probabilities[4], Rational(0));
  EXPECT_EQ(law.normalization, Rational(11, 2));
}

TEST(Law, OneEdgeIsPointMass) {
  auto law = law_table(F_series<Rational>(2, Variant::all), 1);
  ASSERT_EQ(law.probabilities.size(), 3u);
  EXPECT_EQ(law.probabilities[1], Rational(1));
}

TEST(Law, PalindromicAndNormalized) {
  const int N = 9;
  auto f = F_series<Rational>(2 * N, Variant::all);
  auto law = law_table(f, N);
  Rational total(0);
  for (int p = 0; p <= 2 * N; ++p) {
    EXPECT_EQ(law.probabilities[p], law.probabilities[2 * N - p]) << p;
    total += law.probabilities[p];
  }
  EXPECT_EQ(total, Rational(1));
}

TEST(Law, TruncationShortfallIsReported) {
  auto f = F_series<Rational>(6, Variant::all);
  EXPECT_THROW(law_table(f, 4), RangeError);
}

TEST(Law, FlatStratumOfIdentificationSeries) {
  auto id = ident_series(20);
  for (int N = 2; N <= 10; ++N) {
    const Rational c = id.coeff(2 * N - 1, 1);
    for (int p = 1; p < 2 * N; ++p) EXPECT_EQ(id.coeff(2 * N - p, p), c) << N << " " << p;
  }
}

TEST(Law, MomentGeneratingFunction) {
  EXPECT_DOUBLE_EQ(mgf_limit(0.0), 1.0);
  EXPECT_NEAR(mgf_limit(1.0), std::exp(1.0) - 1.0, 1e-15);
  auto law = law_table(F_series<Rational>(20, Variant::all), 10);
  EXPECT_NEAR(mgf(law, 0.0), 1.0, 1e-14);
  // mgf(mu) = sum exp(mu p / 2N) P(p), computed here directly.
  double direct = 0;
  auto probs = law.probabilities_double();
  for (int p = 0; p <= 20; ++p) direct += std::exp(1.0 * p / 20.0) * probs[p];
  EXPECT_NEAR(mgf(law, 1.0), direct, 1e-14);
}

TEST(Law, UniformityReportOnUniformInput) {
  const int N = 6;
  std::vector<double> probs(2 * N + 1, 1.0 / (2 * N + 1));
  auto r = uniformity_report(probs);
  EXPECT_NEAR(r.max_deviation, 0.0, 1e-14);
  EXPECT_EQ(r.N, N);
  EXPECT_GT(r.window_size, 0);
}

TEST(Asymptotics, CountRatioApproachesOne) {
  const double r10 = asym_ratio(10), r20 = asym_ratio(20);
  EXPECT_LT(std::abs(r20 - 1), std::abs(r10 - 1));
  EXPECT_LT(std::abs(r20 - 1), 0.25);
  auto f = F_series<Rational>(20, Variant::all);
  EXPECT_NEAR(asym_ratio(f, 10), r10, 1e-12);
}

TEST(Variants, ParseAndPrint) {
  EXPECT_EQ(parse_variant("odd"), Variant::odd);
  EXPECT_EQ(to_string(Variant::even), "even");
  EXPECT_THROW(parse_variant("both"), ConfigError);
}

TEST(Threads, EnvironmentOverride) {
  setenv("VCELL_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  unsetenv("VCELL_THREADS");
  EXPECT_GE(thread_count(), 1u);
}
