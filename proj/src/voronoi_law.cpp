#include "vcell/voronoi_law.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <thread>

namespace vcell {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::all: return "all";
    case Variant::even: return "even";
    case Variant::odd: return "odd";
  }
  return "all";
}

Variant parse_variant(const std::string& text) {
  if (text == "all") return Variant::all;
  if (text == "even") return Variant::even;
  if (text == "odd") return Variant::odd;
  throw ConfigError("unknown variant '" + text + "' (expected all, even or odd)");
}

unsigned thread_count() {
  if (const char* env = std::getenv("VCELL_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

template <class Fn>
void parallel_for(int n, Fn fn) {
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max(n, 0)));
  if (workers <= 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (int k = next++; k < n; k = next++) fn(k);
    }));
  }
  for (auto& j : jobs) j.get();
}

template <Coefficient C>
bool negligible(const BasicBiSeries<C>& f) {
  if constexpr (CoeffTraits<C>::exact) {
    return f.is_zero();
  } else {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& t) { return std::abs(t.c) < 1e-12; });
  }
}

}  // namespace

template <Coefficient C>
BasicFSeries<C> F_series(const BasicXTable<C>& x, const BasicRTable<C>& r, Variant variant) {
  const int d = x.max_degree();
  const int k = x.order;
  if (d < 2) throw ConfigError("F_series: total degree must be at least 2");
  if (x.s_max <= k || r.s_max <= k || r.order < k) {
    throw ConfigError("F_series: tables do not cover the label levels needed");
  }
  const auto one = BasicBiSeries<C>::one(d);

  // The series whose double finite difference gives the summand.
  auto base = [&](int s, int t) -> BasicBiSeries<C> {
    const auto& xst = x.at(s, t);
    switch (variant) {
      case Variant::all: return xst;
      case Variant::even: return N_from_X(xst, r.at(s), r.at(t));
      case Variant::odd: return one + BasicBiSeries<C>::outer(1, r.at(s), r.at(t), d) * xst;
    }
    return xst;
  };

  const int last = k + 2;
  std::vector<BasicBiSeries<C>> summand(static_cast<std::size_t>(last) + 1, BasicBiSeries<C>(d));
  parallel_for(last, [&](int idx) {
    const int s = idx + 1;
    summand[s] = log(base(s, s) * base(s - 1, s - 1)) - log(base(s - 1, s) * base(s, s - 1));
  });

  BasicFSeries<C> out;
  out.variant = variant;
  out.series = BasicBiSeries<C>(d);
  int first_zero = 0;
  for (int s = 1; s <= last; ++s) {
    if (negligible(summand[s])) {
      first_zero = s;
      break;
    }
  }
  if (first_zero == 0) {
    throw InvariantViolation("F_series: the term s = " + std::to_string(last) +
                             " does not vanish at this truncation");
  }
  out.s_terms_used = first_zero - 1;
  // Floating terms past the first negligible one are rounding noise; keep
  // them so the float and exact sums run over the same range.
  const int stop = CoeffTraits<C>::exact ? first_zero - 1 : last;
  for (int s = 1; s <= stop; ++s) out.series += summand[s];
  return out;
}

template <Coefficient C>
BasicFSeries<C> F_series(int max_degree, Variant variant) {
  if (max_degree < 2 || max_degree % 2 != 0) {
    throw ConfigError("F_series: total degree must be even and at least 2");
  }
  const int k = max_degree / 2;
  const auto r = solve_R<C>(default_s_max(k), k);
  const auto x = solve_X(r);
  return F_series(x, r, variant);
}

UniSeries F_diag_closed(int order) {
  // (1 - x^2)^2 / ((1 - x)(1 - x^3)) as a series in x.
  const auto top = UniSeries::polynomial(order, {1, 0, -2, 0, 1});
  const auto bottom = UniSeries::polynomial(order, {1, -1, 0, -1, 1});
  return compose(log(top * reciprocal(bottom)), x_of_g(order));
}

template <Coefficient C>
std::vector<double> BasicLawTable<C>::probabilities_double() const {
  std::vector<double> out;
  out.reserve(probabilities.size());
  for (const auto& p : probabilities) out.push_back(CoeffTraits<C>::to_double(p));
  return out;
}

template <Coefficient C>
BasicLawTable<C> law_table(const BasicFSeries<C>& f, int N) {
  using T = CoeffTraits<C>;
  if (N < 1) throw DomainError("law_table: N must be >= 1");
  if (2 * N > f.series.max_degree()) {
    throw RangeError("law_table: series truncated at area " +
                     std::to_string(f.series.max_degree() / 2) + ", below N = " +
                     std::to_string(N));
  }
  BasicLawTable<C> law;
  law.N = N;
  law.variant = f.variant;
  law.normalization = T::zero();
  for (int p = 0; p <= 2 * N; ++p) {
    law.weights.push_back(f.series.coeff(2 * N - p, p));
    law.normalization += law.weights.back();
  }
  if (T::is_zero(law.normalization)) {
    throw DomainError("law_table: no maps with N = " + std::to_string(N) + " in this variant");
  }
  for (const auto& w : law.weights) law.probabilities.push_back(w / law.normalization);
  return law;
}

template <Coefficient C>
double mgf(const BasicLawTable<C>& law, double mu) {
  const auto p = law.probabilities_double();
  double sum = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    sum += std::exp(mu * static_cast<double>(k) / (2.0 * law.N)) * p[k];
  }
  return sum;
}

double mgf_limit(double mu) { return mu == 0.0 ? 1.0 : std::expm1(mu) / mu; }

double asym_count(int N) {
  const double n = N;
  return 0.25 * std::pow(12.0, n) / (std::sqrt(std::numbers::pi) * std::pow(n, 1.5));
}

template <Coefficient C>
double asym_ratio(const BasicFSeries<C>& f, int N) {
  return CoeffTraits<C>::to_double(law_table(f, N).normalization) / asym_count(N);
}

double asym_ratio(int N) {
  if (N < 1) throw DomainError("asym_ratio: N must be >= 1");
  return F_diag_closed(N)[N].to_double() / asym_count(N);
}

UniformityReport uniformity_report(const std::vector<double>& probabilities, double lo, double hi) {
  if (probabilities.size() < 3 || probabilities.size() % 2 == 0) {
    throw DomainError("uniformity_report: expected 2N+1 probabilities with N >= 1");
  }
  UniformityReport rep;
  const int two_n = static_cast<int>(probabilities.size()) - 1;
  rep.N = two_n / 2;
  rep.window_lo = lo;
  rep.window_hi = hi;
  for (int p = 0; p <= two_n; ++p) rep.deviation.push_back((two_n + 1) * probabilities[p] - 1.0);
  double sum = 0;
  for (int p = 0; p <= two_n; ++p) {
    if (p < lo * two_n - 1e-9 || p > hi * two_n + 1e-9) continue;
    const double dev = std::abs(rep.deviation[p]);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    sum += dev;
    ++rep.window_size;
  }
  rep.mean_deviation = rep.window_size > 0 ? sum / rep.window_size : 0.0;
  for (int p : {0, 1, two_n - 1, two_n}) rep.endpoints.emplace_back(p, rep.deviation[p]);
  return rep;
}

BiSeries ident_series(int max_degree) {
  const int k = max_degree / 2;
  std::vector<BiSeries::Term> terms;
  // c_n = binom(3/2, n) (-12)^n, the coefficient of z^{2n+1} in phi(z).
  Rational c(1);
  for (int n = 0; n <= k; ++n) {
    if (n > 0) c = c * (Rational(3, 2) - Rational(n - 1)) / Rational(n) * Rational(-12);
    const Rational w = c / Rational(6);
    for (int i = 0; i <= 2 * n; ++i) terms.push_back({i, 2 * n - i, w});
  }
  return BiSeries::from_terms(max_degree, std::move(terms));
}

#define VCELL_INSTANTIATE(C)                                                              \
  template struct BasicLawTable<C>;                                                       \
  template BasicFSeries<C> F_series<C>(int, Variant);                                     \
  template BasicFSeries<C> F_series<C>(const BasicXTable<C>&, const BasicRTable<C>&, Variant); \
  template BasicLawTable<C> law_table<C>(const BasicFSeries<C>&, int);                    \
  template double mgf<C>(const BasicLawTable<C>&, double);                                \
  template double asym_ratio<C>(const BasicFSeries<C>&, int);

VCELL_INSTANTIATE(Rational)
VCELL_INSTANTIATE(double)
#undef VCELL_INSTANTIATE

}  // namespace vcell
