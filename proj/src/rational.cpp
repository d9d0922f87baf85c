#include "vcell/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace vcell {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

}  // namespace vcell
