#pragma once

// Generating function F(g,h) of iso-labelled two-face maps, its parity split,
// and the exact finite-N law of the Voronoi cell areas it encodes.

#include <string>
#include <vector>

#include "vcell/recursions.hpp"
#include "vcell/series.hpp"

namespace vcell {

/// all: any distance between the marked points; even/odd: the parity of the
/// distance in the associated general map.
enum class Variant { all, even, odd };

std::string to_string(Variant v);
/// Parses "all", "even" or "odd"; throws ConfigError otherwise.
Variant parse_variant(const std::string& text);

template <Coefficient C>
struct BasicFSeries {
  Variant variant = Variant::all;
  BasicBiSeries<C> series;
  int s_terms_used = 0;  // number of nonzero terms in the sum over s
};

using FSeries = BasicFSeries<Rational>;
using FloatFSeries = BasicFSeries<double>;

/// F to total degree max_degree (an even number >= 2, i.e. maps with up to
/// max_degree/2 edges). The sum over s stops at its first vanishing term;
/// a term that survives past s = K+2 raises InvariantViolation.
template <Coefficient C = Rational>
BasicFSeries<C> F_series(int max_degree, Variant variant);
/// Same from precomputed tables (s_max of both must be at least K + 1).
template <Coefficient C>
BasicFSeries<C> F_series(const BasicXTable<C>& x, const BasicRTable<C>& r, Variant variant);

/// Diagonal F(g,g) from its closed form log((1-x^2)^2 / ((1-x)(1-x^3))), x = x(g).
UniSeries F_diag_closed(int order);

template <Coefficient C>
struct BasicLawTable {
  int N = 0;
  Variant variant = Variant::all;
  std::vector<C> weights;  // weights[p] = [u^{2N-p} v^p] F, second cell of area p/2
  C normalization{};       // [g^N] F(g,g)
  std::vector<C> probabilities;

  std::vector<double> probabilities_double() const;
};

using LawTable = BasicLawTable<Rational>;
using FloatLawTable = BasicLawTable<double>;

/// Law of the second cell's area among maps with N edges.
/// Throws RangeError when the series does not reach total degree 2N.
template <Coefficient C>
BasicLawTable<C> law_table(const BasicFSeries<C>& f, int N);

/// E_N[exp(mu n / N)] = sum_p exp(mu p / (2N)) P(p).
template <Coefficient C>
double mgf(const BasicLawTable<C>& law, double mu);
/// Large-N limit (e^mu - 1)/mu of the moment generating function.
double mgf_limit(double mu);

/// (1/4) 12^N / (sqrt(pi) N^{3/2}).
double asym_count(int N);
/// [g^N] F(g,g) from the given series divided by asym_count(N).
template <Coefficient C>
double asym_ratio(const BasicFSeries<C>& f, int N);
/// Same using the closed diagonal form.
double asym_ratio(int N);

struct UniformityReport {
  int N = 0;
  double window_lo = 0.2;
  double window_hi = 0.8;
  double max_deviation = 0;   // max |(2N+1) P(p) - 1| over the window
  double mean_deviation = 0;  // mean of the same
  int window_size = 0;
  /// (2N+1) P(p) - 1 at p = 0, 1, 2N-1, 2N, where convergence is slowest.
  std::vector<std::pair<int, double>> endpoints;
  std::vector<double> deviation;  // (2N+1) P(p) - 1 for every p
};

/// Interior window is p in [lo * 2N, hi * 2N].
UniformityReport uniformity_report(const std::vector<double>& probabilities, double lo = 0.2,
                                   double hi = 0.8);
template <Coefficient C>
UniformityReport uniformity_report(const BasicLawTable<C>& law, double lo = 0.2, double hi = 0.8) {
  return uniformity_report(law.probabilities_double(), lo, hi);
}

/// (1/6) (phi(v) - phi(u)) / (v - u) with phi(z) = z (1 - 12 z^2)^{3/2}: the
/// singular shape whose N-th stratum is flat in p. Used only as a cross-check.
BiSeries ident_series(int max_degree);

/// Worker count for parallel loops: VCELL_THREADS if set, else the hardware count.
unsigned thread_count();

}  // namespace vcell
