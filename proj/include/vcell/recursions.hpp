#pragma once

// Generating functions of labelled trees (R_s) and labelled chains (X_{s,t}),
// solved from their recursions and, on the diagonal g = h, from closed forms.

#include <array>
#include <vector>

#include "vcell/series.hpp"

namespace vcell {

/// R_s(g) for s = 0..s_max, valid modulo g^{order+1}.
template <Coefficient C>
struct BasicRTable {
  int order = 0;
  int s_max = 0;
  std::vector<BasicUniSeries<C>> entries;  // entries[0] = 0
  BasicUniSeries<C> stabilized;            // solution of R = 1 + 3 g R^2

  /// R_s for any s >= 0. Beyond s_max the stabilized series is returned,
  /// which is exact because s_max > order.
  const BasicUniSeries<C>& at(int s) const;
};

/// X_{s,t}(g,h) on the three diagonals t - s in {-1, 0, 1}, for s,t <= s_max,
/// truncated at total degree 2*order in (u, v).
template <Coefficient C>
struct BasicXTable {
  int order = 0;  // K; the series carry total degree 2K
  int s_max = 0;
  /// diagonals[offset + 1][s] holds X_{s, s + offset}.
  std::array<std::vector<BasicBiSeries<C>>, 3> diagonals;
  BasicBiSeries<C> stabilized;  // common limit of X_{s,s+offset} for large s
  BasicBiSeries<C> unit;        // the series 1, returned for zero indices

  int max_degree() const { return 2 * order; }
  /// X_{s,t}; any zero index gives exactly 1. Throws RangeError for |t - s| > 1
  /// or indices beyond what the table determines.
  const BasicBiSeries<C>& at(int s, int t) const;
};

using RTable = BasicRTable<Rational>;
using XTable = BasicXTable<Rational>;
using FloatRTable = BasicRTable<double>;
using FloatXTable = BasicXTable<double>;

/// Default number of label levels for truncation order K.
inline int default_s_max(int order) { return order + 1; }

/// Stabilized tree series: R = 1 + 3 g R^2 modulo g^{order+1}.
template <Coefficient C>
BasicUniSeries<C> stabilized_R(int order);

/// Solves R_s = 1 + g R_s (R_{s-1} + R_s + R_{s+1}) order by order, with
/// R_0 = 0 and the stabilized series closing the system above s_max.
/// Throws ConfigError unless s_max > order.
template <Coefficient C = Rational>
BasicRTable<C> solve_R(int s_max, int order);

/// Solves the labelled-chain recursion
///   X_{s,t} = 1 + uv R_s(g) R_t(h) X_{s,t} (1 + uv R_{s+1}(g) R_{t+1}(h) X_{s+1,t+1})
/// downward from s_max, to total degree 2*order. Throws ConfigError unless s_max > order.
template <Coefficient C = Rational>
BasicXTable<C> solve_X(int s_max, int order);
/// Same, reusing an R table (whose order and s_max are taken).
template <Coefficient C>
BasicXTable<C> solve_X(const BasicRTable<C>& r);

/// x(g), the compositional inverse of g(x) = x (1 + x + x^2) / (1 + 4x + x^2)^2.
UniSeries x_of_g(int order);

/// Closed form of R_s(g) through the parametrization g(x), expanded to order.
UniSeries closed_R(int s, int order);
/// s -> infinity limit of the closed form, (1 + 4x + x^2) / (1 + x + x^2).
UniSeries closed_R_limit(int order);
/// Closed form of X_{s,t}(g,g) as a series in g, s,t >= 0.
UniSeries closed_X_diag(int s, int t, int order);

/// Generating function of chains with no 0--0 spine edge:
/// N = X / (1 + uv R_s(g) R_t(h) X).
template <Coefficient C>
BasicBiSeries<C> N_from_X(const BasicBiSeries<C>& x, const BasicUniSeries<C>& r_s,
                          const BasicUniSeries<C>& r_t);

/// Z = 1 - 1/X, the chains whose internal spine labels are all positive.
template <Coefficient C>
BasicBiSeries<C> Z_from_X(const BasicBiSeries<C>& x);

}  // namespace vcell
