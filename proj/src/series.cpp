#include "vcell/series.hpp"

#include <cstdio>
#include <sstream>

namespace vcell {

std::string CoeffTraits<double>::to_string(double c) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

namespace {

inline std::size_t tri_index(int i, int j) {
  const std::size_t d = static_cast<std::size_t>(i + j);
  return d * (d + 1) / 2 + static_cast<std::size_t>(i);
}
inline std::size_t tri_size(int max_degree) {
  const std::size_t d = static_cast<std::size_t>(max_degree);
  return (d + 1) * (d + 2) / 2;
}

mpz_class lcm_of_denominators(std::span<const BiSeries::Term> terms, int max_degree) {
  mpz_class l = 1;
  for (const auto& t : terms) {
    if (t.i + t.j > max_degree) break;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.raw().get_den_mpz_t());
  }
  return l;
}

// Integer numerators of `terms` after scaling by the common denominator l.
std::vector<mpz_class> scaled_numerators(std::span<const BiSeries::Term> terms, const mpz_class& l,
                                         int max_degree) {
  std::vector<mpz_class> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.i + t.j > max_degree) break;
    mpz_class s;
    mpz_divexact(s.get_mpz_t(), l.get_mpz_t(), t.c.raw().get_den_mpz_t());
    s *= t.c.raw().get_num();
    out.push_back(std::move(s));
  }
  return out;
}

template <Coefficient C>
std::vector<typename BasicBiSeries<C>::Term> dense_to_terms(const std::vector<C>& dense,
                                                            int max_degree) {
  std::vector<typename BasicBiSeries<C>::Term> terms;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      const C& c = dense[tri_index(i, d - i)];
      if (!CoeffTraits<C>::is_zero(c)) terms.push_back({i, d - i, c});
    }
  }
  return terms;
}

BiSeries multiply_exact(const BiSeries& a, const BiSeries& b, int max_degree) {
  BiSeries out(max_degree);
  if (a.is_zero() || b.is_zero()) return out;
  const mpz_class la = lcm_of_denominators(a.terms(), max_degree);
  const mpz_class lb = lcm_of_denominators(b.terms(), max_degree);
  const auto na = scaled_numerators(a.terms(), la, max_degree);
  const auto nb = scaled_numerators(b.terms(), lb, max_degree);

  std::vector<mpz_class> acc(tri_size(max_degree));
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (std::size_t x = 0; x < na.size(); ++x) {
    const int da = ta[x].i + ta[x].j;
    for (std::size_t y = 0; y < nb.size(); ++y) {
      if (tb[y].i + tb[y].j > max_degree - da) break;
      mpz_addmul(acc[tri_index(ta[x].i + tb[y].i, ta[x].j + tb[y].j)].get_mpz_t(),
                 na[x].get_mpz_t(), nb[y].get_mpz_t());
    }
  }
  const mpz_class l = la * lb;
  std::vector<BiSeries::Term> terms;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      const mpz_class& v = acc[tri_index(i, d - i)];
      if (v != 0) terms.push_back({i, d - i, Rational(mpq_class(v, l))});
    }
  }
  return BiSeries::from_terms(max_degree, std::move(terms));
}

// 1/f with integer arithmetic: with F = L f and F0 its constant term,
// [degree d part of 1/F] = H_d / F0^{d+1} where
// H_0 = 1 and H_d = -sum_{k=1..d} F0^{k-1} F_k H_{d-k}.
BiSeries reciprocal_exact(const BiSeries& f) {
  const int max_degree = f.max_degree();
  const Rational f0 = f.constant_term();
  if (f0.is_zero()) throw DomainError("series_reciprocal: zero constant term");
  const mpz_class l = lcm_of_denominators(f.terms(), max_degree);
  const auto nf = scaled_numerators(f.terms(), l, max_degree);
  const mpz_class big_f0 = nf.front();  // terms sorted by degree, constant term first

  std::vector<mpz_class> f0_pow(static_cast<std::size_t>(max_degree) + 2);
  f0_pow[0] = 1;
  for (std::size_t k = 1; k < f0_pow.size(); ++k) f0_pow[k] = f0_pow[k - 1] * big_f0;

  struct Scaled {
    int i, j, degree;
    mpz_class c;
  };
  std::vector<Scaled> fs;
  const auto tf = f.terms();
  for (std::size_t x = 1; x < nf.size(); ++x) {
    const int k = tf[x].i + tf[x].j;
    fs.push_back({tf[x].i, tf[x].j, k, nf[x] * f0_pow[static_cast<std::size_t>(k - 1)]});
  }

  std::vector<mpz_class> h(tri_size(max_degree));
  h[0] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& s : fs) {
      if (s.degree > d) break;
      const int rest = d - s.degree;
      for (int i2 = 0; i2 <= rest; ++i2) {
        const mpz_class& hv = h[tri_index(i2, rest - i2)];
        if (hv == 0) continue;
        mpz_submul(h[tri_index(s.i + i2, s.j + rest - i2)].get_mpz_t(), s.c.get_mpz_t(),
                   hv.get_mpz_t());
      }
    }
  }
  std::vector<BiSeries::Term> terms;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      const mpz_class& hv = h[tri_index(i, d - i)];
      if (hv != 0) {
        terms.push_back({i, d - i, Rational(mpq_class(hv * l, f0_pow[static_cast<std::size_t>(d + 1)]))});
      }
    }
  }
  return BiSeries::from_terms(max_degree, std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// BasicUniSeries
// ---------------------------------------------------------------------------

template <Coefficient C>
BasicUniSeries<C>::BasicUniSeries(int order) {
  if (order < 0) throw RangeError("UniSeries: negative truncation order");
  c_.assign(static_cast<std::size_t>(order) + 1, CoeffTraits<C>::zero());
}

template <Coefficient C>
BasicUniSeries<C>::BasicUniSeries(int order, std::vector<C> coefficients) : BasicUniSeries(order) {
  if (coefficients.size() > c_.size()) {
    throw RangeError("UniSeries: more coefficients than the truncation order allows");
  }
  std::move(coefficients.begin(), coefficients.end(), c_.begin());
}

template <Coefficient C>
BasicUniSeries<C> BasicUniSeries<C>::constant(int order, C value) {
  BasicUniSeries s(order);
  s.c_[0] = std::move(value);
  return s;
}

template <Coefficient C>
BasicUniSeries<C> BasicUniSeries<C>::variable(int order) {
  BasicUniSeries s(order);
  if (order >= 1) s.c_[1] = CoeffTraits<C>::one();
  return s;
}

template <Coefficient C>
BasicUniSeries<C> BasicUniSeries<C>::polynomial(int order, const std::vector<long>& coefficients) {
  BasicUniSeries s(order);
  for (std::size_t k = 0; k < coefficients.size() && k < s.c_.size(); ++k) {
    s.c_[k] = CoeffTraits<C>::from_int(coefficients[k]);
  }
  return s;
}

template <Coefficient C>
const C& BasicUniSeries<C>::operator[](int k) const {
  if (k < 0 || k > order()) {
    throw RangeError("UniSeries: coefficient " + std::to_string(k) + " beyond truncation order " +
                     std::to_string(order()));
  }
  return c_[static_cast<std::size_t>(k)];
}

template <Coefficient C>
void BasicUniSeries<C>::set(int k, C value) {
  if (k < 0 || k > order()) throw RangeError("UniSeries: set beyond truncation order");
  c_[static_cast<std::size_t>(k)] = std::move(value);
}

template <Coefficient C>
BasicUniSeries<C> BasicUniSeries<C>::truncated(int order) const {
  if (order > this->order()) throw RangeError("UniSeries: cannot raise truncation order");
  return BasicUniSeries(order, std::vector<C>(c_.begin(), c_.begin() + order + 1));
}

template <Coefficient C>
bool BasicUniSeries<C>::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const C& c) { return CoeffTraits<C>::is_zero(c); });
}

template <Coefficient C>
BasicUniSeries<C>& BasicUniSeries<C>::operator+=(const BasicUniSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

template <Coefficient C>
BasicUniSeries<C>& BasicUniSeries<C>::operator-=(const BasicUniSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

template <Coefficient C>
BasicUniSeries<C>& BasicUniSeries<C>::operator*=(const C& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

template <Coefficient C>
BasicUniSeries<C> BasicUniSeries<C>::multiply(const BasicUniSeries& a, const BasicUniSeries& b) {
  const int n = std::min(a.order(), b.order());
  BasicUniSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (CoeffTraits<C>::is_zero(a.c_[i])) continue;
    for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// BasicBiSeries
// ---------------------------------------------------------------------------

template <Coefficient C>
BasicBiSeries<C>::BasicBiSeries(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) throw RangeError("BiSeries: negative truncation degree");
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::monomial(int i, int j, C c, int max_degree) {
  std::vector<Term> t;
  t.push_back({i, j, std::move(c)});
  return from_terms(max_degree, std::move(t));
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::from_terms(int max_degree, std::vector<Term> terms) {
  BasicBiSeries s(max_degree);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (t.i < 0 || t.j < 0) throw RangeError("BiSeries: negative exponent");
    if (t.i + t.j > max_degree) continue;
    if (!s.terms_.empty() && s.terms_.back().i == t.i && s.terms_.back().j == t.j) {
      s.terms_.back().c += t.c;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(s.terms_, [](const Term& t) { return Traits::is_zero(t.c); });
  return s;
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::lift_g(const BasicUniSeries<C>& f, int max_degree) {
  return outer(0, f, BasicUniSeries<C>::one(max_degree / 2), max_degree);
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::lift_h(const BasicUniSeries<C>& f, int max_degree) {
  return outer(0, BasicUniSeries<C>::one(max_degree / 2), f, max_degree);
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::outer(int uv_power, const BasicUniSeries<C>& f_g,
                                         const BasicUniSeries<C>& e_h, int max_degree) {
  // Every needed coefficient must be available: 2*uv_power + 2a + 2b <= max_degree.
  const int budget = (max_degree - 2 * uv_power) / 2;
  if (budget < 0) return BasicBiSeries(max_degree);
  if (f_g.order() < budget || e_h.order() < budget) {
    throw RangeError("BiSeries::outer: factor truncated below the requested degree");
  }
  std::vector<Term> terms;
  for (int a = 0; a <= budget; ++a) {
    if (Traits::is_zero(f_g[a])) continue;
    for (int b = 0; a + b <= budget; ++b) {
      if (Traits::is_zero(e_h[b])) continue;
      terms.push_back({2 * a + uv_power, 2 * b + uv_power, f_g[a] * e_h[b]});
    }
  }
  return from_terms(max_degree, std::move(terms));
}

template <Coefficient C>
C BasicBiSeries<C>::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > max_degree_) {
    throw RangeError("BiSeries: coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                     ") beyond truncation degree " + std::to_string(max_degree_));
  }
  const Term key{i, j, Traits::zero()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->i == i && it->j == j) return it->c;
  return Traits::zero();
}

template <Coefficient C>
C BasicBiSeries<C>::constant_term() const {
  return coeff(0, 0);
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::truncated(int max_degree) const {
  if (max_degree > max_degree_) throw RangeError("BiSeries: cannot raise truncation degree");
  BasicBiSeries s(max_degree);
  for (const auto& t : terms_) {
    if (t.i + t.j > max_degree) break;
    s.terms_.push_back(t);
  }
  return s;
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::swapped() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.j, x.i, x.c});
  return from_terms(max_degree_, std::move(t));
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::homogeneous(int d) const {
  BasicBiSeries s(max_degree_);
  for (const auto& t : terms_) {
    if (t.i + t.j == d) s.terms_.push_back(t);
  }
  return s;
}

template <Coefficient C>
BasicBiSeries<C>& BasicBiSeries<C>::operator+=(const BasicBiSeries& o) {
  const int d = std::min(max_degree_, o.max_degree_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  for (const auto& t : terms_) merged.push_back(t);
  for (const auto& t : o.terms_) merged.push_back(t);
  *this = from_terms(d, std::move(merged));
  return *this;
}

template <Coefficient C>
BasicBiSeries<C>& BasicBiSeries<C>::operator-=(const BasicBiSeries& o) {
  return *this += -o;
}

template <Coefficient C>
BasicBiSeries<C>& BasicBiSeries<C>::operator*=(const C& s) {
  if (Traits::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

template <Coefficient C>
BasicBiSeries<C> BasicBiSeries<C>::multiply(const BasicBiSeries& a, const BasicBiSeries& b) {
  const int d = std::min(a.max_degree_, b.max_degree_);
  if constexpr (std::is_same_v<C, Rational>) {
    return multiply_exact(a, b, d);
  } else {
    std::vector<C> acc(tri_size(d), Traits::zero());
    for (const auto& x : a.terms_) {
      const int dx = x.i + x.j;
      if (dx > d) break;
      for (const auto& y : b.terms_) {
        if (y.i + y.j > d - dx) break;
        acc[tri_index(x.i + y.i, x.j + y.j)] += x.c * y.c;
      }
    }
    return from_terms(d, dense_to_terms(acc, d));
  }
}

template <Coefficient C>
std::string BasicBiSeries<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << Traits::to_string(t.c);
    if (t.i > 0) os << "*u^" << t.i;
    if (t.j > 0) os << "*v^" << t.j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

template <Coefficient C>
BasicUniSeries<C> reciprocal(const BasicUniSeries<C>& f) {
  using T = CoeffTraits<C>;
  if (T::is_zero(f[0])) throw DomainError("series_reciprocal: zero constant term");
  const int n = f.order();
  std::vector<C> g(static_cast<std::size_t>(n) + 1, T::zero());
  const C inv0 = C(T::one()) / f[0];
  g[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    C s = T::zero();
    for (int m = 1; m <= k; ++m) s += f[m] * g[k - m];
    g[k] = -(s * inv0);
  }
  return BasicUniSeries<C>(n, std::move(g));
}

template <Coefficient C>
BasicBiSeries<C> reciprocal(const BasicBiSeries<C>& f) {
  using T = CoeffTraits<C>;
  if constexpr (std::is_same_v<C, Rational>) {
    return reciprocal_exact(f);
  } else {
    const int n = f.max_degree();
    const C f0 = f.constant_term();
    if (T::is_zero(f0)) throw DomainError("series_reciprocal: zero constant term");
    const C inv0 = 1.0 / f0;
    std::vector<C> g(tri_size(n), 0.0);
    g[0] = inv0;
    for (int d = 1; d <= n; ++d) {
      for (const auto& t : f.terms()) {
        const int k = t.i + t.j;
        if (k == 0) continue;
        if (k > d) break;
        const int rest = d - k;
        for (int i2 = 0; i2 <= rest; ++i2) {
          g[tri_index(t.i + i2, t.j + rest - i2)] -= inv0 * t.c * g[tri_index(i2, rest - i2)];
        }
      }
    }
    return BasicBiSeries<C>::from_terms(n, dense_to_terms(g, n));
  }
}

template <Coefficient C>
BasicUniSeries<C> log(const BasicUniSeries<C>& f) {
  using T = CoeffTraits<C>;
  if (!T::is_one(f[0])) throw DomainError("series_log: constant term must be 1");
  const int n = f.order();
  BasicUniSeries<C> out(n);
  if (n == 0) return out;
  BasicUniSeries<C> df(n - 1);
  for (int k = 1; k <= n; ++k) df.set(k - 1, f[k] * T::from_int(k));
  const auto q = df * reciprocal(f.truncated(n - 1));
  for (int k = 1; k <= n; ++k) out.set(k, q[k - 1] / T::from_int(k));
  return out;
}

template <Coefficient C>
BasicBiSeries<C> log(const BasicBiSeries<C>& f) {
  using T = CoeffTraits<C>;
  if (!T::is_one(f.constant_term())) throw DomainError("series_log: constant term must be 1");
  // With the degree operator E = u d/du + v d/dv, E log f = (E f) / f.
  std::vector<typename BasicBiSeries<C>::Term> ef;
  for (const auto& t : f.terms()) {
    if (t.i + t.j > 0) ef.push_back({t.i, t.j, t.c * T::from_int(t.i + t.j)});
  }
  const auto q = BasicBiSeries<C>::from_terms(f.max_degree(), std::move(ef)) * reciprocal(f);
  std::vector<typename BasicBiSeries<C>::Term> out;
  for (const auto& t : q.terms()) {
    const int d = t.i + t.j;
    if (d > 0) out.push_back({t.i, t.j, t.c / T::from_int(d)});
  }
  return BasicBiSeries<C>::from_terms(f.max_degree(), std::move(out));
}

template <Coefficient C>
BasicUniSeries<C> exp(const BasicUniSeries<C>& f) {
  using T = CoeffTraits<C>;
  if (!T::is_zero(f[0])) throw DomainError("series_exp: constant term must be 0");
  const int n = f.order();
  std::vector<C> e(static_cast<std::size_t>(n) + 1, T::zero());
  e[0] = T::one();
  for (int k = 1; k <= n; ++k) {
    C s = T::zero();
    for (int m = 1; m <= k; ++m) s += f[m] * T::from_int(m) * e[k - m];
    e[k] = s / T::from_int(k);
  }
  return BasicUniSeries<C>(n, std::move(e));
}

template <Coefficient C>
BasicBiSeries<C> exp(const BasicBiSeries<C>& f) {
  using T = CoeffTraits<C>;
  if (!T::is_zero(f.constant_term())) throw DomainError("series_exp: constant term must be 0");
  // E e = e * E f, solved one total degree at a time.
  const int n = f.max_degree();
  std::vector<C> e(tri_size(n), T::zero());
  e[0] = T::one();
  for (int d = 1; d <= n; ++d) {
    for (const auto& t : f.terms()) {
      const int k = t.i + t.j;
      if (k > d) break;
      const C w = t.c * T::from_int(k);
      const int rest = d - k;
      for (int i2 = 0; i2 <= rest; ++i2) {
        const C& ev = e[tri_index(i2, rest - i2)];
        if (T::is_zero(ev)) continue;
        e[tri_index(t.i + i2, t.j + rest - i2)] += w * ev;
      }
    }
    for (int i = 0; i <= d; ++i) {
      auto& c = e[tri_index(i, d - i)];
      if (!T::is_zero(c)) c = c / T::from_int(d);
    }
  }
  return BasicBiSeries<C>::from_terms(n, dense_to_terms(e, n));
}

template <Coefficient C>
BasicUniSeries<C> pow(const BasicUniSeries<C>& f, unsigned n) {
  auto result = BasicUniSeries<C>::one(f.order());
  auto base = f;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

template <Coefficient C>
BasicUniSeries<C> compose(const BasicUniSeries<C>& f, const BasicUniSeries<C>& g) {
  using T = CoeffTraits<C>;
  if (!T::is_zero(g[0])) throw DomainError("series_compose: inner series must vanish at 0");
  const int n = std::min(f.order(), g.order());
  const auto inner = g.truncated(n);
  auto result = BasicUniSeries<C>::constant(n, f[n]);
  for (int k = n - 1; k >= 0; --k) {
    result = result * inner;
    result += BasicUniSeries<C>::constant(n, f[k]);
  }
  return result;
}

template <Coefficient C>
BasicUniSeries<C> revert(const BasicUniSeries<C>& f) {
  using T = CoeffTraits<C>;
  const int n = f.order();
  if (n < 1) throw DomainError("series_revert: need truncation order >= 1");
  if (!T::is_zero(f[0])) throw DomainError("series_revert: f(0) must be 0");
  if (T::is_zero(f[1])) throw DomainError("series_revert: f'(0) must be nonzero");
  // Lagrange inversion: [t^k] h = (1/k) [z^{k-1}] (z / f(z))^k.
  BasicUniSeries<C> shifted(n - 1);
  for (int k = 1; k <= n; ++k) shifted.set(k - 1, f[k]);
  const auto phi = reciprocal(shifted);
  BasicUniSeries<C> h(n);
  auto power = phi;
  for (int k = 1; k <= n; ++k) {
    h.set(k, power[k - 1] / T::from_int(k));
    if (k < n) power = power * phi;
  }
  return h;
}

template <Coefficient C>
BasicUniSeries<C> diagonal(const BasicBiSeries<C>& f) {
  const int n = f.max_degree() / 2;
  BasicUniSeries<C> out(n);
  std::vector<C> acc(static_cast<std::size_t>(n) + 1, CoeffTraits<C>::zero());
  for (const auto& t : f.terms()) {
    const int d = t.i + t.j;
    if (d % 2 != 0) throw DomainError("diagonal: monomial with odd total degree");
    if (d / 2 > n) break;
    acc[static_cast<std::size_t>(d / 2)] += t.c;
  }
  return BasicUniSeries<C>(n, std::move(acc));
}

FloatBiSeries to_float(const BiSeries& f) {
  std::vector<FloatBiSeries::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.i, t.j, t.c.to_double()});
  return FloatBiSeries::from_terms(f.max_degree(), std::move(terms));
}

FloatUniSeries to_float(const UniSeries& f) {
  std::vector<double> c;
  for (const auto& x : f.coefficients()) c.push_back(x.to_double());
  return FloatUniSeries(f.order(), std::move(c));
}

template class BasicUniSeries<Rational>;
template class BasicUniSeries<double>;
template class BasicBiSeries<Rational>;
template class BasicBiSeries<double>;

#define VCELL_INSTANTIATE(C)                                                  \
  template BasicUniSeries<C> reciprocal(const BasicUniSeries<C>&);            \
  template BasicBiSeries<C> reciprocal(const BasicBiSeries<C>&);              \
  template BasicUniSeries<C> log(const BasicUniSeries<C>&);                   \
  template BasicBiSeries<C> log(const BasicBiSeries<C>&);                     \
  template BasicUniSeries<C> exp(const BasicUniSeries<C>&);                   \
  template BasicBiSeries<C> exp(const BasicBiSeries<C>&);                     \
  template BasicUniSeries<C> pow(const BasicUniSeries<C>&, unsigned);         \
  template BasicUniSeries<C> compose(const BasicUniSeries<C>&, const BasicUniSeries<C>&); \
  template BasicUniSeries<C> revert(const BasicUniSeries<C>&);                \
  template BasicUniSeries<C> diagonal(const BasicBiSeries<C>&);

VCELL_INSTANTIATE(Rational)
VCELL_INSTANTIATE(double)
#undef VCELL_INSTANTIATE

}  // namespace vcell
