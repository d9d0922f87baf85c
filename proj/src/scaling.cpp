#include "vcell/scaling.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

using Real = long double;

// Truncated hyper-dual number: value, d/dsigma, d/dtau, d2/dsigma dtau.
struct Jet {
  Real v = 0, s = 0, t = 0, st = 0;
};

Jet operator+(Jet x, const Jet& y) { return {x.v + y.v, x.s + y.s, x.t + y.t, x.st + y.st}; }
Jet operator-(Jet x, const Jet& y) { return {x.v - y.v, x.s - y.s, x.t - y.t, x.st - y.st}; }
Jet operator*(Real c, const Jet& x) { return {c * x.v, c * x.s, c * x.t, c * x.st}; }
Jet operator*(const Jet& x, const Jet& y) {
  return {x.v * y.v, x.s * y.v + x.v * y.s, x.t * y.v + x.v * y.t,
          x.st * y.v + x.s * y.t + x.t * y.s + x.v * y.st};
}
Jet reciprocal(const Jet& y) {
  const Real r = 1 / y.v;
  return {r, -y.s * r * r, -y.t * r * r, (-y.st + 2 * y.s * y.t * r) * r * r};
}
Jet operator/(const Jet& x, const Jet& y) { return x * reciprocal(y); }
Jet constant(Real c) { return {c, 0, 0, 0}; }

template <std::size_t M>
Jet bipoly(const std::array<std::array<Real, M>, M>& c, const Jet& sg, const Jet& ta) {
  // Horner in sigma of Horner-in-tau rows.
  Jet out;
  for (int i = static_cast<int>(M) - 1; i >= 0; --i) {
    Jet row;
    for (int j = static_cast<int>(M) - 1; j >= 0; --j) row = row * ta + constant(c[i][j]);
    out = out * sg + row;
  }
  return out;
}

// sum_k c_k a^{n-k} b^k with n = size - 1.
Real hom(Real a, Real b, std::initializer_list<Real> c) {
  const int n = static_cast<int>(c.size()) - 1;
  Real out = 0;
  int k = 0;
  for (Real ck : c) {
    out += ck * std::pow(a, n - k) * std::pow(b, k);
    ++k;
  }
  return out;
}

template <std::size_t M>
std::array<std::array<Real, M>, M> combine(const std::array<std::array<Real, M>, M>& p0,
                                           const std::array<std::array<Real, M>, M>& p1, Real q) {
  std::array<std::array<Real, M>, M> out{};
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) out[i][j] = p0[i][j] + q * p1[i][j];
  }
  return out;
}

Jet X_jet(Real sigma, Real tau, const CoeffTables& c) {
  const Real q = c.q();
  const Jet sg{sigma, 1, 0, 0};
  const Jet ta{tau, 0, 1, 0};
  const Jet N = bipoly(combine(c.n0, c.n1, q), sg, ta);
  const Jet D = bipoly(combine(c.d0, c.d1, q), sg, ta);
  const Jet den = (constant(1) - sg) * (constant(1) - ta) * D;
  return constant(-3 * q) - N / den;
}

Jet X_jet_equal(Real sigma, Real tau, Real a) {
  const Jet sg{sigma, 1, 0, 0};
  const Jet ta{tau, 0, 1, 0};
  const Jet st = sg * ta;
  const Jet num = sg + ta - 3 * st + st * st;
  const Jet den = (constant(1) - sg) * (constant(1) - ta) * (constant(1) - st);
  return constant(-3 * a) - (6 * a) * (num / den);
}

XDerivatives to_public(const Jet& j) {
  return {static_cast<double>(j.v), static_cast<double>(j.s), static_cast<double>(j.t),
          static_cast<double>(j.st)};
}

Real R_sigma(Real sigma, Real a) {
  const Real one_minus = 1 - sigma;
  return -a * a * (1 + 10 * sigma + sigma * sigma) / (3 * one_minus * one_minus);
}

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

bool near_equal(double a, double b) { return std::fabs(a - b) < kEqualWeightThreshold; }

Real residual_from_jet(const Jet& X, Real sigma, Real tau, Real a, Real b) {
  const Real rr = R_sigma(sigma, a) + R_sigma(tau, b);
  const Real lhs = 2 * X.v * X.v - 6 * (a * sigma * X.s + b * tau * X.t) + 27 * rr;
  return std::fabs(lhs) / (27 * std::fabs(rr));
}

template <typename F>
double integrate(F f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 12, 1e-13);
}

}  // namespace

double ScalingParams::sigma() const { return std::exp(-a * S); }
double ScalingParams::tau() const { return std::exp(-b * T); }

long double CoeffTables::q() const { return std::sqrt((a * a + b * b) / 2); }

CoeffTables coeff_tables(double a_in, double b_in) {
  require_positive(a_in, "a");
  require_positive(b_in, "b");
  if (near_equal(a_in, b_in)) {
    throw DomainError("coeff_tables: |a - b| below threshold, use the b = a closed form");
  }
  CoeffTables c;
  c.a = a_in;
  c.b = b_in;
  const Real a = a_in, b = b_in;
  const Real m = a - b, p = a + b;
  const Real P = 2 * a * a + b * b, Q = a * a + 2 * b * b;
  const Real a2 = a * a, b2 = b * b;
  const Real s3 = a2 + a * b + b2;  // a^2 + ab + b^2
  const Real mpPQ = m * p * P * Q, m2PQ = m * m * P * Q;

  auto& n0 = c.n0;
  n0[0][1] = -18 * b * b2 / P;
  n0[0][2] = 18 * b * b2 * (5 * a2 + 7 * b2) / (m * p * P);
  n0[1][0] = -18 * a * a2 / Q;
  n0[2][0] = -18 * a * a2 * (7 * a2 + 5 * b2) / (m * p * Q);
  n0[1][1] = 54 * hom(a, b, {2, 0, 17, 17, 17, 17, 0, 2}) / m2PQ;
  n0[1][2] = -54 * hom(a, b, {2, 8, 27, 47, 47, 51, 20, 14}) / mpPQ;
  n0[1][3] = 18 * a2 * hom(a, b, {2, 12, 17, 36, 17, 24}) / mpPQ;
  n0[2][1] = 54 * hom(a, b, {14, 20, 51, 47, 47, 27, 8, 2}) / mpPQ;
  n0[2][2] = -54 * hom(a, b, {14, 12, 41, 41, 41, 41, 12, 14}) / m2PQ;
  n0[2][3] = 18 * a2 * hom(a, b, {14, 32, 51, 58, 37, 24}) / m2PQ;
  n0[3][1] = -18 * b2 * hom(a, b, {24, 17, 36, 17, 12, 2}) / mpPQ;
  n0[3][2] = 18 * b2 * hom(a, b, {24, 37, 58, 51, 32, 14}) / m2PQ;

  auto& n1 = c.n1;
  n1[0][1] = 36 * b2 / P;
  n1[0][2] = -36 * b2 * (a2 + 5 * b2) / (m * p * P);
  n1[1][0] = 36 * a2 / Q;
  n1[2][0] = 36 * a2 * (5 * a2 + b2) / (m * p * Q);
  n1[1][1] = -216 * hom(a, b, {1, -1, 8, 2, 8, -1, 1}) / m2PQ;
  n1[1][2] = 216 * s3 * hom(a, b, {1, 1, 9, 2, 5}) / mpPQ;
  n1[1][3] = -36 * a2 * hom(a, b, {2, 6, 17, 12, 17}) / mpPQ;
  n1[2][1] = -216 * s3 * hom(a, b, {5, 2, 9, 1, 1}) / mpPQ;
  n1[2][2] = 216 * hom(a, b, {5, 4, 13, 10, 13, 4, 5}) / m2PQ;
  n1[2][3] = -36 * a2 * hom(a, b, {10, 22, 33, 26, 17}) / m2PQ;
  n1[3][1] = 36 * b2 * hom(a, b, {17, 12, 17, 6, 2}) / mpPQ;
  n1[3][2] = -36 * b2 * hom(a, b, {17, 26, 33, 22, 10}) / m2PQ;

  const Real quartic = hom(a, b, {1, 0, 7, 0, 1});  // a^4 + 7a^2b^2 + b^4
  const Real c4 = 4 * a2 + a * b + 4 * b2;
  auto& d0 = c.d0;
  d0[0][0] = 1;
  d0[0][1] = -4 * Q / P;
  d0[0][2] = hom(a, b, {2, 0, 17, 0, 17}) / (m * p * P);
  d0[1][0] = -4 * P / Q;
  d0[1][1] = 8 * c4 * quartic / m2PQ;
  d0[1][2] = -4 * hom(a, b, {4, 14, 22, 32, 19, 17}) / (m * P * Q);
  d0[2][0] = -hom(a, b, {17, 0, 17, 0, 2}) / (m * p * Q);
  d0[2][1] = 4 * hom(a, b, {17, 19, 32, 22, 14, 4}) / (m * P * Q);
  d0[2][2] = -hom(a, b, {34, 76, 137, 154, 137, 76, 34}) / m2PQ;

  auto& d1 = c.d1;
  d1[0][1] = 12 * b / P;
  d1[0][2] = -12 * b * Q / (m * p * P);
  d1[1][0] = 12 * a / Q;
  d1[1][1] = -48 * s3 * quartic / (m2PQ * p);
  d1[1][2] = 12 * hom(a, b, {2, 6, 11, 9, 8}) / (m * P * Q);
  d1[2][0] = 12 * a * P / (m * p * Q);
  d1[2][1] = -12 * hom(a, b, {8, 9, 11, 6, 2}) / (m * P * Q);
  d1[2][2] = 12 * p * s3 * c4 / m2PQ;

  const Real ab2 = a2 * b2;
  const Real m3p2 = m * m * m * p * p;
  const Real m4P2Q2 = m * m * m * m * P * P * Q * Q;
  auto& h0 = c.h0;
  h0[0][0] = -72 * ab2 * c4 / m2PQ;
  h0[0][2] = 72 * ab2 * hom(a, b, {8, 46, 114, 237, 261, 333, 157, 140}) / (m3p2 * P * P * Q);
  h0[2][0] = -72 * ab2 * hom(a, b, {140, 157, 333, 261, 237, 114, 46, 8}) / (m3p2 * P * Q * Q);
  h0[2][2] = 72 * ab2 * c4 * hom(a, b, {70, 148, 281, 298, 281, 148, 70}) / m4P2Q2;

  auto& h1 = c.h1;
  h1[0][0] = 432 * ab2 * s3 / (m2PQ * p);
  h1[0][2] = -432 * ab2 * hom(a, b, {2, 10, 29, 43, 62, 37, 33}) / (m3p2 * P * P * Q);
  h1[2][0] = 432 * ab2 * hom(a, b, {33, 37, 62, 43, 29, 10, 2}) / (m3p2 * P * Q * Q);
  h1[2][2] = -1296 * ab2 * s3 * hom(a, b, {22, 52, 89, 106, 89, 52, 22}) / (m4P2Q2 * p);
  return c;
}

double r_fn(double S, double a) {
  require_positive(S, "S");
  require_positive(a, "a");
  const Real e = std::exp(-static_cast<Real>(a) * S);
  const Real om = -std::expm1(-static_cast<Real>(a) * S);
  return static_cast<double>(-static_cast<Real>(a) * a * (1 + 10 * e + e * e) / (3 * om * om));
}

double X_sigma_tau(double sigma, double tau, const CoeffTables& tables) {
  return static_cast<double>(X_jet(sigma, tau, tables).v);
}

double X_sigma_tau_equal(double sigma, double tau, double a) {
  return static_cast<double>(X_jet_equal(sigma, tau, a).v);
}

XDerivatives X_derivatives(double sigma, double tau, const CoeffTables& tables) {
  return to_public(X_jet(sigma, tau, tables));
}

XDerivatives X_derivatives_equal(double sigma, double tau, double a) {
  return to_public(X_jet_equal(sigma, tau, a));
}

double x_fn(double S, double T, const CoeffTables& tables) {
  require_positive(S, "S");
  require_positive(T, "T");
  return static_cast<double>(X_jet(std::exp(-tables.a * S), std::exp(-tables.b * T), tables).v);
}

double x_fn(double S, double T, double a, double b) {
  if (near_equal(a, b)) {
    throw DomainError("x_fn: |a - b| < 1e-4, use x_fn_equal");
  }
  return x_fn(S, T, coeff_tables(a, b));
}

double x_fn_equal(double S, double T, double a) {
  require_positive(S, "S");
  require_positive(T, "T");
  require_positive(a, "a");
  const Real la = a;
  return static_cast<double>(X_jet_equal(std::exp(-la * S), std::exp(-la * T), la).v);
}

double pde_residual(double S, double T, const CoeffTables& tables) {
  require_positive(S, "S");
  require_positive(T, "T");
  const Real sigma = std::exp(-tables.a * S);
  const Real tau = std::exp(-tables.b * T);
  return static_cast<double>(residual_from_jet(X_jet(sigma, tau, tables), sigma, tau, tables.a, tables.b));
}

double pde_residual(double S, double T, double a, double b) {
  if (!near_equal(a, b)) return pde_residual(S, T, coeff_tables(a, b));
  require_positive(S, "S");
  require_positive(T, "T");
  require_positive(a, "a");
  const Real la = a;
  const Real sigma = std::exp(-la * S);
  const Real tau = std::exp(-la * T);
  return static_cast<double>(residual_from_jet(X_jet_equal(sigma, tau, la), sigma, tau, la, la));
}

double K_fn(double sigma, const CoeffTables& c) {
  if (!(sigma >= 0 && sigma < 1)) throw DomainError("K_fn: sigma must lie in [0, 1)");
  if (sigma == 0) return 0.0;
  const Real s = sigma;
  const Real t = std::pow(s, c.b / c.a);
  const Real q = c.q();
  Real H = 0, D = 0;
  for (int i = 2; i >= 0; --i) {
    Real hr = 0, dr = 0;
    for (int j = 2; j >= 0; --j) {
      hr = hr * t + c.h0[i][j] + q * c.h1[i][j];
      dr = dr * t + c.d0[i][j] + q * c.d1[i][j];
    }
    H = H * s + hr;
    D = D * s + dr;
  }
  return static_cast<double>(c.a * c.b * s * t * H / (D * D));
}

double K_fn(double sigma, double a, double b) { return K_fn(sigma, coeff_tables(a, b)); }

double K_integrand(double sigma, const CoeffTables& c) {
  const Real t = std::pow(static_cast<Real>(sigma), c.b / c.a);
  return static_cast<double>(c.b * t * X_jet(sigma, t, c).st / 3);
}

double K_expansion_constant(double a, double b) {
  const Real la = a, lb = b;
  return static_cast<double>(-(la * la - la * lb + lb * lb) * (la * la + la * lb + lb * lb) /
                             (18 * (la * la + lb * lb)));
}

double K_expansion_constant_numeric(double a, double b, double eps) {
  const CoeffTables c = coeff_tables(a, b);
  auto constant_at = [&](Real e) {
    return static_cast<Real>(K_fn(static_cast<double>(std::exp(-c.a * e)), c)) - 1 / (4 * e * e);
  };
  const Real e = eps;
  return static_cast<double>((4 * constant_at(e / 2) - constant_at(e)) / 3);
}

double singularity_coefficient(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  const Real la = a, lb = b;
  if (near_equal(a, b)) {
    // (a^6 - b^6)/(a^4 - b^4) = (a^4 + a^2 b^2 + b^4)/(a^2 + b^2).
    const Real a2 = la * la, b2 = lb * lb;
    return static_cast<double>(-(a2 * a2 + a2 * b2 + b2 * b2) / (18 * (a2 + b2)));
  }
  return static_cast<double>(-(std::pow(la, 6) - std::pow(lb, 6)) / (18 * (std::pow(la, 4) - std::pow(lb, 4))));
}

ContourPieces contour_value(double mu) {
  if (!(mu > 0) || !std::isfinite(mu)) throw DomainError("contour_value: mu must be positive");
  const double pi = boost::math::constants::pi<double>();
  auto integrand = [](double t) { return t * t * t * t * std::exp(-t * t); };
  const double root = std::sqrt(mu);
  const double pref = 2.0 / (3.0 * pi);
  ContourPieces out;
  out.inner = pref * std::exp(mu) / mu * integrate(integrand, 0.0, root);
  out.straight = -pref / mu * integrate(integrand, 0.0, std::numeric_limits<double>::infinity());
  out.outer = pref * std::exp(mu) / mu * integrate(integrand, root, std::numeric_limits<double>::infinity());
  out.closed_form = std::expm1(mu) / (4.0 * std::sqrt(pi) * mu);
  // The pieces cancel at order 1/mu; below this the sum loses all digits.
  out.total = mu < 1e-6 ? out.closed_form : out.inner + out.straight + out.outer;
  return out;
}

double mixed_derivative_equal_diag(double S, double a) {
  const Real s = std::exp(-2 * static_cast<Real>(a) * S);
  const Real om = -std::expm1(-2 * static_cast<Real>(a) * S);
  return static_cast<double>(2 * std::pow(static_cast<Real>(a), 3) * s * (1 + s) / (om * om * om));
}

FirstIntegral first_integral_check(double eps, double a, double b) {
  require_positive(eps, "eps");
  require_positive(a, "a");
  require_positive(b, "b");
  const bool equal = near_equal(a, b);
  CoeffTables tables;
  if (!equal) tables = coeff_tables(a, b);
  const Real la = a, lb = equal ? a : b;
  // (1/3) d_S d_T x = (1/3) a b sigma tau X_{sigma tau}; substitute S = eps e^u.
  auto integrand = [&](double u) {
    const Real S = eps * std::exp(static_cast<Real>(u));
    const Real sigma = std::exp(-la * S), tau = std::exp(-lb * S);
    const Jet X = equal ? X_jet_equal(sigma, tau, la) : X_jet(sigma, tau, tables);
    return static_cast<double>(la * lb * sigma * tau * X.st / 3 * S);
  };
  FirstIntegral out;
  // The integrand decays like exp(-(a+b)S); beyond S = 100/min(a,b) it is below 1e-80.
  const double u_max = std::log(100.0 / (std::min(a, equal ? a : b) * eps));
  out.quadrature = integrate(integrand, 0.0, std::max(u_max, 1.0));
  if (equal) {
    const Real s = std::exp(-2 * la * eps);
    const Real om = -std::expm1(-2 * la * eps);
    out.primitive = static_cast<double>(la * la * s / (om * om));
  } else {
    out.primitive = K_fn(static_cast<double>(std::exp(-la * eps)), tables);
  }
  out.relative_difference = std::fabs(out.quadrature - out.primitive) / std::fabs(out.primitive);
  return out;
}

long double x_from_one_minus_12g(long double delta) {
  if (!(delta >= 0) || delta > 1) throw DomainError("x_from_one_minus_12g: need 0 <= 1 - 12g <= 1");
  // y = 1 - x solves (1 - q) y^2 + 6 q y - 6 q = 0 with q = sqrt(delta).
  const long double q = std::sqrt(delta);
  if (q == 0) return 1;
  const long double y = 12 * q / (6 * q + std::sqrt(36 * q * q + 24 * q * (1 - q)));
  return 1 - y;
}

long double R_closed_numeric(int s, long double one_minus_12g) {
  if (s < 0) throw DomainError("R_closed_numeric: s must be non-negative");
  const long double x = x_from_one_minus_12g(one_minus_12g);
  const long double y = 1 - x;
  const long double base = (1 + 4 * x + x * x) / (1 + x + x * x);
  if (y == 0) {
    const long double ls = s;
    return base * ls * (ls + 3) / ((ls + 1) * (ls + 2));
  }
  const long double lx = std::log1p(-y);
  auto u = [&](int k) { return -std::expm1(k * lx); };
  return base * u(s) * u(s + 3) / (u(s + 1) * u(s + 2));
}

BridgePoint bridge_point(double S, double eps, double a, double factor) {
  require_positive(S, "S");
  require_positive(eps, "eps");
  require_positive(a, "a");
  BridgePoint p;
  p.S = S;
  p.eps = eps;
  p.a = a;
  // The guard keeps exact quotients such as 1/0.02 from rounding down.
  p.s = static_cast<int>(std::floor(S / eps + 1e-9));
  const long double e = eps;
  const long double delta = std::pow(static_cast<long double>(a) * e, 4) / 36;
  p.local = static_cast<double>((R_closed_numeric(p.s, delta) - 2) / (e * e));
  p.scaling = r_fn(S, a);
  p.error = std::fabs(p.local - p.scaling);
  p.tolerance = factor * eps;
  p.pass = p.error < p.tolerance;
  return p;
}

ResidualSummary pde_grid(const GridSpec& grid) {
  ResidualSummary out;
  for (double a : grid.ab) {
    for (double b : grid.ab) {
      const bool equal = near_equal(a, b);
      CoeffTables tables;
      if (!equal) tables = coeff_tables(a, b);
      for (double S : grid.ST) {
        for (double T : grid.ST) {
          const double r = equal ? pde_residual(S, T, a, a) : pde_residual(S, T, tables);
          double& slot = equal ? out.max_equal_residual : out.max_residual;
          slot = std::max(slot, r);
          ++out.points;
        }
      }
    }
  }
  return out;
}

}  // namespace vcell
