#pragma once

// Truncated power series over an exact (Rational) or floating (double)
// coefficient domain.
//
// UniSeries: dense, one variable, coefficients of degree 0..order.
// BiSeries:  sparse, two variables u and v truncated by total degree, with
//            the convention u^2 = g, v^2 = h so that u^i v^j = g^{i/2} h^{j/2}.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "vcell/errors.hpp"
#include "vcell/rational.hpp"

namespace vcell {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static bool is_one(const Rational& c) { return c == Rational(1); }
  static double to_double(const Rational& c) { return c.to_double(); }
  static std::string to_string(const Rational& c) { return c.str(); }
};

template <>
struct CoeffTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long n) { return static_cast<double>(n); }
  static bool is_zero(double c) { return c == 0.0; }
  static bool is_one(double c) { return std::abs(c - 1.0) <= 1e-12; }
  static double to_double(double c) { return c; }
  static std::string to_string(double c);
};

template <class C>
concept Coefficient = requires { CoeffTraits<C>::exact; };

// ---------------------------------------------------------------------------
// UniSeries
// ---------------------------------------------------------------------------

template <Coefficient C>
class BasicUniSeries {
 public:
  using Traits = CoeffTraits<C>;

  explicit BasicUniSeries(int order = 0);
  BasicUniSeries(int order, std::vector<C> coefficients);

  static BasicUniSeries constant(int order, C value);
  static BasicUniSeries one(int order) { return constant(order, Traits::one()); }
  /// The series t.
  static BasicUniSeries variable(int order);
  /// Exact polynomial given by its coefficient list, truncated at `order`.
  static BasicUniSeries polynomial(int order, const std::vector<long>& coefficients);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^k. Asking beyond the truncation order is an error.
  const C& operator[](int k) const;
  void set(int k, C value);
  std::span<const C> coefficients() const { return c_; }

  BasicUniSeries truncated(int order) const;
  bool is_zero() const;

  BasicUniSeries& operator+=(const BasicUniSeries& o);
  BasicUniSeries& operator-=(const BasicUniSeries& o);
  BasicUniSeries& operator*=(const C& s);

  friend BasicUniSeries operator+(BasicUniSeries a, const BasicUniSeries& b) { return a += b; }
  friend BasicUniSeries operator-(BasicUniSeries a, const BasicUniSeries& b) { return a -= b; }
  friend BasicUniSeries operator-(BasicUniSeries a) { return a *= C(Traits::from_int(-1)); }
  friend BasicUniSeries operator*(BasicUniSeries a, const C& s) { return a *= s; }
  friend BasicUniSeries operator*(const BasicUniSeries& a, const BasicUniSeries& b) {
    return multiply(a, b);
  }
  friend bool operator==(const BasicUniSeries& a, const BasicUniSeries& b) { return a.c_ == b.c_; }

  static BasicUniSeries multiply(const BasicUniSeries& a, const BasicUniSeries& b);

 private:
  std::vector<C> c_;
};

// ---------------------------------------------------------------------------
// BiSeries
// ---------------------------------------------------------------------------

template <Coefficient C>
class BasicBiSeries {
 public:
  using Traits = CoeffTraits<C>;

  struct Term {
    int i = 0;  // power of u
    int j = 0;  // power of v
    C c{};
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit BasicBiSeries(int max_degree = 0);

  static BasicBiSeries one(int max_degree) { return monomial(0, 0, Traits::one(), max_degree); }
  static BasicBiSeries monomial(int i, int j, C c, int max_degree);
  /// Sums duplicate monomials, drops zeros and anything beyond `max_degree`.
  static BasicBiSeries from_terms(int max_degree, std::vector<Term> terms);
  /// f(g) as a series in u (g = u^2).
  static BasicBiSeries lift_g(const BasicUniSeries<C>& f, int max_degree);
  /// f(h) as a series in v (h = v^2).
  static BasicBiSeries lift_h(const BasicUniSeries<C>& f, int max_degree);
  /// u^k v^k * f(g) * e(h), built directly as an outer product.
  static BasicBiSeries outer(int uv_power, const BasicUniSeries<C>& f_g,
                             const BasicUniSeries<C>& e_h, int max_degree);

  int max_degree() const { return max_degree_; }
  /// Coefficient of u^i v^j; zero when absent. Beyond the truncation is an error.
  C coeff(int i, int j) const;
  C constant_term() const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BasicBiSeries truncated(int max_degree) const;
  /// Exchanges u and v.
  BasicBiSeries swapped() const;
  /// Terms of exact total degree d.
  BasicBiSeries homogeneous(int d) const;

  BasicBiSeries& operator+=(const BasicBiSeries& o);
  BasicBiSeries& operator-=(const BasicBiSeries& o);
  BasicBiSeries& operator*=(const C& s);

  friend BasicBiSeries operator+(BasicBiSeries a, const BasicBiSeries& b) { return a += b; }
  friend BasicBiSeries operator-(BasicBiSeries a, const BasicBiSeries& b) { return a -= b; }
  friend BasicBiSeries operator-(BasicBiSeries a) { return a *= C(Traits::from_int(-1)); }
  friend BasicBiSeries operator*(BasicBiSeries a, const C& s) { return a *= s; }
  friend BasicBiSeries operator*(const BasicBiSeries& a, const BasicBiSeries& b) {
    return multiply(a, b);
  }
  friend bool operator==(const BasicBiSeries& a, const BasicBiSeries& b) {
    return a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

  static BasicBiSeries multiply(const BasicBiSeries& a, const BasicBiSeries& b);

  std::string to_string() const;

 private:
  static bool term_less(const Term& a, const Term& b) {
    const int da = a.i + a.j, db = b.i + b.j;
    return da != db ? da < db : a.i < b.i;
  }
  int max_degree_ = 0;
  std::vector<Term> terms_;  // sorted by (i+j, i), no zero coefficients
};

using UniSeries = BasicUniSeries<Rational>;
using BiSeries = BasicBiSeries<Rational>;
using FloatUniSeries = BasicUniSeries<double>;
using FloatBiSeries = BasicBiSeries<double>;

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

/// 1/f; requires a nonzero constant term.
template <Coefficient C>
BasicUniSeries<C> reciprocal(const BasicUniSeries<C>& f);
template <Coefficient C>
BasicBiSeries<C> reciprocal(const BasicBiSeries<C>& f);

/// log f; requires constant term exactly 1.
template <Coefficient C>
BasicUniSeries<C> log(const BasicUniSeries<C>& f);
template <Coefficient C>
BasicBiSeries<C> log(const BasicBiSeries<C>& f);

/// exp f; requires zero constant term.
template <Coefficient C>
BasicUniSeries<C> exp(const BasicUniSeries<C>& f);
template <Coefficient C>
BasicBiSeries<C> exp(const BasicBiSeries<C>& f);

template <Coefficient C>
BasicUniSeries<C> pow(const BasicUniSeries<C>& f, unsigned n);

/// f(g(t)); requires g(0) = 0. Truncation is min of the two orders.
template <Coefficient C>
BasicUniSeries<C> compose(const BasicUniSeries<C>& f, const BasicUniSeries<C>& g);

/// Compositional inverse h with f(h(t)) = t; requires f(0) = 0 and f'(0) != 0.
template <Coefficient C>
BasicUniSeries<C> revert(const BasicUniSeries<C>& f);

/// Restriction to u = v, as a series in g. Requires every monomial to have
/// even total degree.
template <Coefficient C>
BasicUniSeries<C> diagonal(const BasicBiSeries<C>& f);

/// Exact coefficient of u^i v^j (g^{i/2} h^{j/2}).
template <Coefficient C>
C coeff(const BasicBiSeries<C>& f, int i, int j) {
  return f.coeff(i, j);
}

/// Floating copy of an exact series.
FloatBiSeries to_float(const BiSeries& f);
FloatUniSeries to_float(const UniSeries& f);

extern template class BasicUniSeries<Rational>;
extern template class BasicUniSeries<double>;
extern template class BasicBiSeries<Rational>;
extern template class BasicBiSeries<double>;

}  // namespace vcell
