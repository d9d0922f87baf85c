#pragma once

// Scaling-limit functions near g = h = 1/12 with
//   g = (1 - a^4 eps^4 / 36) / 12,  h = (1 - b^4 eps^4 / 36) / 12,
// labels s = S/eps, t = T/eps, and sigma = exp(-a S), tau = exp(-b T).

#include <array>
#include <vector>

namespace vcell {

struct ScalingParams {
  double a = 1.0;
  double b = 1.0;
  double S = 1.0;
  double T = 1.0;

  double sigma() const;
  double tau() const;
};

/// Below this |a - b| the two-weight formulas switch to the b = a closed form.
inline constexpr double kEqualWeightThreshold = 1e-4;

/// Coefficients of N (4x4), D (3x3) and H (3x3) evaluated at (a, b). Each
/// entry is part0 + q * part1 with q = sqrt((a^2 + b^2) / 2).
struct CoeffTables {
  long double a = 0.0L;
  long double b = 0.0L;
  std::array<std::array<long double, 4>, 4> n0{}, n1{};
  std::array<std::array<long double, 3>, 3> d0{}, d1{};
  std::array<std::array<long double, 3>, 3> h0{}, h1{};

  long double q() const;
  long double n(int i, int j) const { return n0[i][j] + q() * n1[i][j]; }
  long double d(int i, int j) const { return d0[i][j] + q() * d1[i][j]; }
  long double h(int i, int j) const { return h0[i][j] + q() * h1[i][j]; }
};

/// Throws DomainError when a, b <= 0 or |a - b| < kEqualWeightThreshold.
CoeffTables coeff_tables(double a, double b);

/// r(S, a) = -a^2 (1 + 10 e^{-aS} + e^{-2aS}) / (3 (1 - e^{-aS})^2).
double r_fn(double S, double a);

/// Two-weight scaling function of X_{s,t}(g,h) - 3 at order eps.
double x_fn(double S, double T, double a, double b);
double x_fn(double S, double T, const CoeffTables& tables);
/// The b = a closed form.
double x_fn_equal(double S, double T, double a);

/// Same functions in the sigma, tau variables.
double X_sigma_tau(double sigma, double tau, const CoeffTables& tables);
double X_sigma_tau_equal(double sigma, double tau, double a);

/// Values and first/mixed sigma, tau derivatives of the scaling function.
struct XDerivatives {
  double value = 0.0;
  double d_sigma = 0.0;
  double d_tau = 0.0;
  double d_sigma_tau = 0.0;
};
XDerivatives X_derivatives(double sigma, double tau, const CoeffTables& tables);
XDerivatives X_derivatives_equal(double sigma, double tau, double a);

/// |2x^2 + 6(x_S + x_T) + 27(r(S,a) + r(T,b))| / (27 |r(S,a) + r(T,b)|).
/// Uses the b = a closed form when |a - b| < kEqualWeightThreshold.
double pde_residual(double S, double T, double a, double b);
double pde_residual(double S, double T, const CoeffTables& tables);

/// K(sigma) = a b sigma tau H / D^2 at tau = sigma^{b/a}; 0 <= sigma < 1.
double K_fn(double sigma, double a, double b);
double K_fn(double sigma, const CoeffTables& tables);

/// The integrand of which K is a primitive: (1/3) b sigma^{b/a} X_{sigma tau}.
double K_integrand(double sigma, const CoeffTables& tables);

/// Constant term of K(e^{-a eps}) - 1/(4 eps^2):
/// -(a^2 - ab + b^2)(a^2 + ab + b^2) / (18 (a^2 + b^2)).
double K_expansion_constant(double a, double b);
/// Same constant estimated from K_fn by Richardson extrapolation in eps.
double K_expansion_constant_numeric(double a, double b, double eps = 1e-2);

/// Coefficient of eps^2 in the singular part of F(g,h):
/// -(1/18)(a^6 - b^6)/(a^4 - b^4), continuous at b = a with value -a^2/12.
double singularity_coefficient(double a, double b);

struct ContourPieces {
  double inner = 0.0;      // (2/3pi)(e^mu/mu) int_0^{sqrt mu} t^4 e^{-t^2}
  double straight = 0.0;   // -(2/3pi)(1/mu) int_0^inf t^4 e^{-t^2}
  double outer = 0.0;      // (2/3pi)(e^mu/mu) int_{sqrt mu}^inf t^4 e^{-t^2}
  double total = 0.0;
  double closed_form = 0.0;  // (e^mu - 1) / (4 sqrt(pi) mu)
};

/// Throws DomainError for mu <= 0. Very small mu takes the limit 1/(4 sqrt pi).
ContourPieces contour_value(double mu);

struct FirstIntegral {
  double quadrature = 0.0;  // int_eps^inf (1/3) d_S d_T x |_{T=S} dS
  double primitive = 0.0;   // K(e^{-a eps}), or its b = a closed form
  double relative_difference = 0.0;
};

/// Compares the quadrature against the primitive; the common eps^2 factor
/// is dropped.
FirstIntegral first_integral_check(double eps, double a, double b);

/// 2 a^3 s (1 + s) / (1 - s)^3 with s = e^{-2aS}: (1/3) d_S d_T x at T = S, b = a.
double mixed_derivative_equal_diag(double S, double a);

/// x from g on the branch 0 < x <= 1, given 1 - 12 g >= 0, computed from
/// (1 - x)^2 / (1 + 4x + x^2) = sqrt(1 - 12 g).
long double x_from_one_minus_12g(long double delta);

/// R_s(g) from its closed form at a numeric g <= 1/12, given as 1 - 12g.
long double R_closed_numeric(int s, long double one_minus_12g);

struct BridgePoint {
  double S = 0.0;
  double eps = 0.0;
  double a = 0.0;
  int s = 0;
  double local = 0.0;    // (R_s(g) - 2) / eps^2
  double scaling = 0.0;  // r(S, a)
  double error = 0.0;    // |local - scaling|
  double tolerance = 0.0;
  bool pass = false;
};

/// s = floor(S/eps), g from the scaling ansatz; tolerance = factor * eps.
BridgePoint bridge_point(double S, double eps, double a, double factor = 5.0);

struct GridSpec {
  std::vector<double> ab{0.7, 1.0, 1.3};
  std::vector<double> ST{0.2, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
};

struct ResidualSummary {
  double max_residual = 0.0;
  double max_equal_residual = 0.0;
  int points = 0;
};

/// PDE residuals on the grid: a != b pairs through the tables, a = b pairs
/// through the closed form.
ResidualSummary pde_grid(const GridSpec& grid = {});

}  // namespace vcell
