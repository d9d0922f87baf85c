#include <gtest/gtest.h>

#include <cmath>

#include "vcell/errors.hpp"
#include "vcell/recursions.hpp"
#include "vcell/scaling.hpp"

using namespace vcell;

TEST(ScalingR, SmallSExpansion) {
  for (double a : {0.7, 1.0, 1.3}) {
    const double S = 0.05;
    const double series = -4 / (S * S) - std::pow(a, 4) * S * S / 60 + std::pow(a, 6) * std::pow(S, 4) / 1512;
    EXPECT_NEAR(r_fn(S, a), series, 1e-9 * std::abs(series));
  }
}

TEST(ScalingR, LargeSLimitAndHomogeneity) {
  EXPECT_NEAR(r_fn(60.0, 1.0), -1.0 / 3.0, 1e-15);
  for (double S : {0.3, 1.0, 2.5}) {
    for (double a : {0.5, 1.7}) EXPECT_NEAR(r_fn(S, a), a * a * r_fn(a * S, 1.0), 1e-12 * std::abs(r_fn(S, a)));
  }
  EXPECT_THROW(r_fn(0.0, 1.0), DomainError);
  EXPECT_THROW(r_fn(-1.0, 1.0), DomainError);
}

TEST(ScalingX, ValueAtOrigin) {
  auto c = coeff_tables(1.0, 1.3);
  EXPECT_NEAR(X_sigma_tau(0, 0, c), -3 * std::sqrt((1.0 + 1.69) / 2), 1e-14);
  EXPECT_DOUBLE_EQ(X_sigma_tau_equal(0, 0, 1.2), -3.6);
}

TEST(ScalingX, SmallLabelBehaviour) {
  for (auto [a, b] : {std::pair{1.0, 1.3}, std::pair{0.7, 1.0}}) {
    const double S = 1e-3, T = 2e-3;
    const double expect = -6 * (S * S + S * T + T * T) / (S * T * (S + T));
    EXPECT_NEAR(x_fn(S, T, a, b), expect, 1e-4 * std::abs(expect));
    EXPECT_NEAR(x_fn_equal(S, T, a), expect, 1e-4 * std::abs(expect));
  }
}

TEST(ScalingX, EqualWeightLimit) {
  const double S = 0.7, T = 1.1, a = 1.0;
  const double up = x_fn(S, T, a, a * (1 + 1e-3));
  const double down = x_fn(S, T, a, a * (1 - 1e-3));
  EXPECT_NEAR(0.5 * (up + down), x_fn_equal(S, T, a), 1e-6);
  EXPECT_NEAR(up, x_fn_equal(S, T, a), 1e-3);
  EXPECT_THROW(x_fn(S, T, 1.0, 1.00001), DomainError);
}

TEST(ScalingX, EqualFormSymmetric) {
  EXPECT_DOUBLE_EQ(x_fn_equal(0.4, 1.9, 1.1), x_fn_equal(1.9, 0.4, 1.1));
}

TEST(ScalingX, MixedDerivativeOnDiagonal) {
  // Central differences of the closed form against the stated derivative.
  const double a = 1.0, h = 1e-4;
  for (double S : {0.3, 0.8, 1.5}) {
    const double fd = (x_fn_equal(S + h, S + h, a) - x_fn_equal(S + h, S - h, a) - x_fn_equal(S - h, S + h, a) +
                       x_fn_equal(S - h, S - h, a)) /
                      (4 * h * h) / 3;
    EXPECT_NEAR(fd, mixed_derivative_equal_diag(S, a), 1e-5 * std::abs(fd));
  }
}

TEST(ScalingX, JetDerivativesMatchFiniteDifferences) {
  auto c = coeff_tables(0.7, 1.3);
  const double s = 0.4, t = 0.6, h = 1e-5;
  auto d = X_derivatives(s, t, c);
  const double ds = (X_sigma_tau(s + h, t, c) - X_sigma_tau(s - h, t, c)) / (2 * h);
  const double dt = (X_sigma_tau(s, t + h, c) - X_sigma_tau(s, t - h, c)) / (2 * h);
  EXPECT_NEAR(d.d_sigma, ds, 1e-6 * std::abs(ds));
  EXPECT_NEAR(d.d_tau, dt, 1e-6 * std::abs(dt));
}

TEST(ScalingPde, ResidualOnGrid) {
  auto g = pde_grid();
  EXPECT_LT(g.max_residual, 1e-8);
  EXPECT_LT(g.max_equal_residual, 1e-8);
  EXPECT_EQ(g.points, 9 * 49);
}

TEST(ScalingPde, MutatedCoefficientIsDetected) {
  for (auto [i, j] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{0, 2}}) {
    auto c = coeff_tables(1.0, 1.3);
    c.n0[i][j] *= 1.01;
    double worst = 0;
    for (double S : {0.2, 1.0, 2.0}) {
      for (double T : {0.2, 1.0, 2.0}) worst = std::max(worst, pde_residual(S, T, c));
    }
    EXPECT_GT(worst, 1e-3) << i << "," << j;
  }
}

TEST(ScalingPde, CoefficientStructure) {
  auto c = coeff_tables(0.7, 1.3);
  EXPECT_EQ(c.d(0, 0), 1.0L);
  for (auto [i, j] : {std::pair{0, 0}, std::pair{0, 3}, std::pair{3, 0}, std::pair{3, 3}}) EXPECT_EQ(c.n(i, j), 0.0L);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    EXPECT_EQ(c.h(i, j), 0.0L);
  }
  EXPECT_THROW(coeff_tables(1.0, 1.0), DomainError);
}

TEST(ScalingK, VanishesAtZero) { EXPECT_EQ(K_fn(0.0, 1.0, 1.3), 0.0); }

TEST(ScalingK, IsPrimitiveOfIntegrand) {
  for (auto [a, b] : {std::pair{1.0, 1.3}, std::pair{1.3, 0.7}}) {
    auto c = coeff_tables(a, b);
    for (int k = 1; k <= 9; ++k) {
      const double s = 0.1 * k, h = 1e-5;
      const double fd = (K_fn(s + h, c) - K_fn(s - h, c)) / (2 * h);
      EXPECT_NEAR(fd, K_integrand(s, c), 1e-5 * std::abs(fd)) << s;
    }
  }
  EXPECT_THROW(K_fn(1.0, 1.0, 1.3), DomainError);
}

TEST(ScalingK, ExpansionConstant) {
  for (auto [a, b] : {std::pair{1.0, 1.3}, std::pair{0.7, 1.0}}) {
    EXPECT_NEAR(K_expansion_constant_numeric(a, b), K_expansion_constant(a, b), 1e-7);
    EXPECT_NEAR(K_expansion_constant(a, b), singularity_coefficient(a, b), 1e-12);
  }
}

TEST(ScalingSingularity, SymmetricAndContinuous) {
  EXPECT_DOUBLE_EQ(singularity_coefficient(0.8, 1.4), singularity_coefficient(1.4, 0.8));
  EXPECT_NEAR(singularity_coefficient(1.2, 1.2), -1.44 / 12, 1e-15);
  EXPECT_NEAR(singularity_coefficient(1.2, 1.2 + 2e-4), singularity_coefficient(1.2, 1.2), 1e-4);
}

TEST(Contour, TotalMatchesClosedForm) {
  for (double mu : {0.1, 1.0, 4.0}) {
    auto c = contour_value(mu);
    EXPECT_NEAR(c.total, c.closed_form, 1e-8 * c.closed_form) << mu;
    EXPECT_NEAR(c.inner + c.outer + c.straight, c.total, 1e-12 * c.total);
  }
  const double pi = std::acos(-1.0);
  EXPECT_NEAR(contour_value(1e-9).total, 1 / (4 * std::sqrt(pi)), 1e-9);
  EXPECT_NEAR(contour_value(1.0).total * 4 * std::sqrt(pi), std::exp(1.0) - 1, 1e-12);
  EXPECT_THROW(contour_value(0.0), DomainError);
}

TEST(FirstIntegral, QuadratureMatchesPrimitive) {
  auto r = first_integral_check(1e-3, 1.0, 1.3);
  EXPECT_LT(r.relative_difference, 1e-6);
  EXPECT_NEAR(r.primitive * 1e-6, 0.25, 1e-6);
  auto eq = first_integral_check(1e-3, 1.0, 1.0);
  EXPECT_LT(eq.relative_difference, 1e-6);
  // (1/4) - a^2 eps^2 / 12 + O(eps^4) after multiplying by eps^2.
  const double eps = 1e-2;
  auto eq2 = first_integral_check(eps, 1.0, 1.0);
  EXPECT_NEAR(eq2.primitive * eps * eps, 0.25 - eps * eps / 12, 1e-8);
}

TEST(Bridge, ClosedFormMatchesExactSeriesAwayFromSingularity) {
  // At g = 0.05 the truncated series converges; compare with the closed form.
  const int K = 120;
  auto table = solve_R<double>(K + 1, K);
  const double g = 0.05;
  for (int s : {1, 2, 5}) {
    double sum = 0, gp = 1;
    for (int n = 0; n <= K; ++n, gp *= g) sum += table.at(s)[n] * gp;
    EXPECT_NEAR(sum, static_cast<double>(R_closed_numeric(s, 1 - 12 * g)), 1e-12) << s;
  }
}

TEST(Bridge, ParametrizationInverse) {
  // 1 - 12 g(x) = (1 - x)^4 / (1 + 4x + x^2)^2, written without cancellation.
  for (long double x : {0.1L, 0.5L, 0.9L, 0.999L, 0.999999L}) {
    const long double y = 1 - x, w = 1 + 4 * x + x * x;
    EXPECT_NEAR(static_cast<double>(x_from_one_minus_12g(y * y * y * y / (w * w))), static_cast<double>(x), 1e-15);
  }
  EXPECT_EQ(x_from_one_minus_12g(0), 1.0L);
}

TEST(Bridge, LocalTermsApproachScalingFunction) {
  for (double S : {1.0, 2.0}) {
    auto coarse = bridge_point(S, 0.02, 1.0);
    auto fine = bridge_point(S, 0.01, 1.0);
    EXPECT_LT(fine.error, coarse.error);
    // The gap shrinks linearly in eps.
    EXPECT_NEAR(coarse.error / fine.error, 2.0, 0.1);
  }
  EXPECT_EQ(bridge_point(1.0, 0.02, 1.0).s, 50);
  EXPECT_TRUE(bridge_point(2.0, 0.01, 1.0).pass);
}
