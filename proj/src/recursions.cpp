#include "vcell/recursions.hpp"

#include <string>

namespace vcell {

template <Coefficient C>
const BasicUniSeries<C>& BasicRTable<C>::at(int s) const {
  if (s < 0) throw RangeError("RTable: negative label level");
  if (s > s_max) return stabilized;
  return entries[static_cast<std::size_t>(s)];
}

template <Coefficient C>
const BasicBiSeries<C>& BasicXTable<C>::at(int s, int t) const {
  if (s < 0 || t < 0) throw RangeError("XTable: negative label level");
  if (s == 0 || t == 0) return unit;
  const int offset = t - s;
  if (offset < -1 || offset > 1) {
    throw RangeError("XTable: offset t - s = " + std::to_string(offset) + " is not stored");
  }
  if (s > s_max || t > s_max) {
    if (std::min(s, t) > order) return stabilized;
    throw RangeError("XTable: X_{" + std::to_string(s) + "," + std::to_string(t) +
                     "} beyond the table");
  }
  return diagonals[static_cast<std::size_t>(offset + 1)][static_cast<std::size_t>(s)];
}

template <Coefficient C>
BasicUniSeries<C> stabilized_R(int order) {
  using T = CoeffTraits<C>;
  std::vector<C> r(static_cast<std::size_t>(order) + 1, T::zero());
  r[0] = T::one();
  for (int n = 1; n <= order; ++n) {
    C acc = T::zero();
    for (int k = 0; k <= n - 1; ++k) acc += r[k] * r[n - 1 - k];
    r[n] = acc * T::from_int(3);
  }
  return BasicUniSeries<C>(order, std::move(r));
}

namespace {

template <Coefficient C>
bool close(const C& a, const C& b) {
  if constexpr (CoeffTraits<C>::exact) {
    return a == b;
  } else {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
  }
}

template <Coefficient C>
bool agrees(const BasicUniSeries<C>& a, const BasicUniSeries<C>& b) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k) {
    if (!close(a[k], b[k])) return false;
  }
  return true;
}

template <Coefficient C>
bool agrees(const BasicBiSeries<C>& a, const BasicBiSeries<C>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a.terms()[k];
    const auto& y = b.terms()[k];
    if (x.i != y.i || x.j != y.j || !close(x.c, y.c)) return false;
  }
  return true;
}

}  // namespace

template <Coefficient C>
BasicRTable<C> solve_R(int s_max, int order) {
  using T = CoeffTraits<C>;
  if (order < 0) throw ConfigError("solve_R: negative order");
  if (s_max <= order) {
    throw ConfigError("solve_R: s_max = " + std::to_string(s_max) +
                      " must exceed the order " + std::to_string(order) +
                      " for the stabilized boundary to be exact");
  }
  BasicRTable<C> table;
  table.order = order;
  table.s_max = s_max;
  table.stabilized = stabilized_R<C>(order);

  // coef[s][n] for s = 0..s_max+1; row s_max+1 is the stabilized boundary.
  const auto ns = static_cast<std::size_t>(s_max) + 2;
  const auto nn = static_cast<std::size_t>(order) + 1;
  std::vector<std::vector<C>> coef(ns, std::vector<C>(nn, T::zero()));
  for (std::size_t s = 1; s + 1 < ns; ++s) coef[s][0] = T::one();
  for (int n = 0; n <= order; ++n) coef[ns - 1][n] = table.stabilized[n];

  for (int n = 1; n <= order; ++n) {
    for (std::size_t s = 1; s + 1 < ns; ++s) {
      C acc = T::zero();
      for (int k = 0; k <= n - 1; ++k) {
        const int m = n - 1 - k;
        acc += coef[s][k] * (coef[s - 1][m] + coef[s][m] + coef[s + 1][m]);
      }
      coef[s][n] = acc;
    }
  }

  table.entries.reserve(ns - 1);
  for (std::size_t s = 0; s + 1 < ns; ++s) table.entries.emplace_back(order, std::move(coef[s]));
  for (int s = order + 1; s <= s_max; ++s) {
    if (!agrees(table.entries[s], table.stabilized)) {
      throw InvariantViolation("solve_R: R_" + std::to_string(s) +
                               " differs from the stabilized series");
    }
  }
  return table;
}

namespace {

// Fixed point X = 1 / (1 - A (1 + A X)), which the labelled-chain recursion
// reduces to once R_s, R_{s+1} and X_{s+1,t+1} no longer depend on s.
template <Coefficient C>
BasicBiSeries<C> stabilized_X(const BasicBiSeries<C>& a_inf) {
  const int d = a_inf.max_degree();
  const auto one = BasicBiSeries<C>::one(d);
  auto x = one;
  // Each pass fixes at least two more total degrees.
  for (int pass = 0; pass <= d / 2 + 1; ++pass) {
    auto next = reciprocal(one - a_inf * (one + a_inf * x));
    if (next == x) return x;
    x = std::move(next);
  }
  if constexpr (CoeffTraits<C>::exact) {
    throw InvariantViolation("solve_X: stabilized chain series did not converge");
  } else {
    return x;
  }
}

}  // namespace

template <Coefficient C>
BasicXTable<C> solve_X(const BasicRTable<C>& r) {
  const int order = r.order;
  const int s_max = r.s_max;
  if (s_max <= order) throw ConfigError("solve_X: s_max must exceed the order");
  const int d = 2 * order;

  BasicXTable<C> table;
  table.order = order;
  table.s_max = s_max;
  table.unit = BasicBiSeries<C>::one(d);
  const auto a_inf = BasicBiSeries<C>::outer(1, r.stabilized, r.stabilized, d);
  table.stabilized = stabilized_X(a_inf);
  for (auto& diag : table.diagonals) diag.assign(static_cast<std::size_t>(s_max) + 1, table.unit);

  const auto& one = table.unit;
  for (int s = s_max; s >= 1; --s) {
    for (int offset = -1; offset <= 1; ++offset) {
      const int t = s + offset;
      if (t < 1 || t > s_max) continue;
      // X_{s+1,t+1} sits on the same diagonal, one level up (or is stabilized).
      const BasicBiSeries<C>& next =
          (s + 1 > s_max || t + 1 > s_max) ? table.stabilized
                                           : table.diagonals[offset + 1][static_cast<std::size_t>(s + 1)];
      const auto a = BasicBiSeries<C>::outer(1, r.at(s), r.at(t), d);
      const auto b = BasicBiSeries<C>::outer(1, r.at(s + 1), r.at(t + 1), d);
      table.diagonals[offset + 1][static_cast<std::size_t>(s)] =
          reciprocal(one - a * (one + b * next));
    }
  }
  for (int s = order + 1; s <= s_max; ++s) {
    for (int offset = -1; offset <= 1; ++offset) {
      const int t = s + offset;
      if (t <= order || t > s_max) continue;
      if (!agrees(table.diagonals[offset + 1][static_cast<std::size_t>(s)], table.stabilized)) {
        throw InvariantViolation("solve_X: X_{" + std::to_string(s) + "," + std::to_string(t) +
                                 "} differs from the stabilized series");
      }
    }
  }
  return table;
}

template <Coefficient C>
BasicXTable<C> solve_X(int s_max, int order) {
  if (s_max <= order) {
    throw ConfigError("solve_X: s_max = " + std::to_string(s_max) + " must exceed the order " +
                      std::to_string(order));
  }
  return solve_X(solve_R<C>(s_max, order));
}

UniSeries x_of_g(int order) {
  const int n = std::max(order, 1);
  const auto num = UniSeries::polynomial(n, {0, 1, 1, 1});
  const auto den = UniSeries::polynomial(n, {1, 4, 1});
  return revert(num * reciprocal(den * den)).truncated(order);
}

namespace {

// 1 - x^m as a series in x.
UniSeries one_minus_power(int m, int order) {
  UniSeries p = UniSeries::one(order);
  if (m <= order) p.set(m, Rational(-1));
  return p;
}

// prod(1 - x^num_k) / prod(1 - x^den_k), as a series in x.
UniSeries power_ratio(std::initializer_list<int> num, std::initializer_list<int> den, int order) {
  auto top = UniSeries::one(order);
  for (int m : num) top = top * one_minus_power(m, order);
  auto bottom = UniSeries::one(order);
  for (int m : den) bottom = bottom * one_minus_power(m, order);
  return top * reciprocal(bottom);
}

UniSeries limit_factor_in_x(int order) {
  return UniSeries::polynomial(order, {1, 4, 1}) *
         reciprocal(UniSeries::polynomial(order, {1, 1, 1}));
}

}  // namespace

UniSeries closed_R(int s, int order) {
  if (s < 1) throw DomainError("closed_R: s must be >= 1");
  const auto in_x = limit_factor_in_x(order) * power_ratio({s, s + 3}, {s + 1, s + 2}, order);
  return compose(in_x, x_of_g(order));
}

UniSeries closed_R_limit(int order) { return compose(limit_factor_in_x(order), x_of_g(order)); }

UniSeries closed_X_diag(int s, int t, int order) {
  if (s < 0 || t < 0) throw DomainError("closed_X_diag: s, t must be >= 0");
  // The factors (1 - x) and (1 - x^{s+t+1}) in the denominator are cancelled
  // in the numerator when s or t is zero; the general quotient handles it.
  const auto in_x =
      power_ratio({3, s + 1, t + 1, s + t + 3}, {1, s + 3, t + 3, s + t + 1}, order);
  return compose(in_x, x_of_g(order));
}

template <Coefficient C>
BasicBiSeries<C> N_from_X(const BasicBiSeries<C>& x, const BasicUniSeries<C>& r_s,
                          const BasicUniSeries<C>& r_t) {
  const int d = x.max_degree();
  const auto a = BasicBiSeries<C>::outer(1, r_s, r_t, d);
  return x * reciprocal(BasicBiSeries<C>::one(d) + a * x);
}

template <Coefficient C>
BasicBiSeries<C> Z_from_X(const BasicBiSeries<C>& x) {
  if (!CoeffTraits<C>::is_one(x.constant_term())) {
    throw DomainError("Z_from_X: constant term must be 1");
  }
  return BasicBiSeries<C>::one(x.max_degree()) - reciprocal(x);
}

#define VCELL_INSTANTIATE(C)                                                              \
  template struct BasicRTable<C>;                                                         \
  template struct BasicXTable<C>;                                                         \
  template BasicUniSeries<C> stabilized_R<C>(int);                                        \
  template BasicRTable<C> solve_R<C>(int, int);                                           \
  template BasicXTable<C> solve_X<C>(int, int);                                           \
  template BasicXTable<C> solve_X<C>(const BasicRTable<C>&);                              \
  template BasicBiSeries<C> N_from_X<C>(const BasicBiSeries<C>&, const BasicUniSeries<C>&, \
                                        const BasicUniSeries<C>&);                        \
  template BasicBiSeries<C> Z_from_X<C>(const BasicBiSeries<C>&);

VCELL_INSTANTIATE(Rational)
VCELL_INSTANTIATE(double)
#undef VCELL_INSTANTIATE

}  // namespace vcell
