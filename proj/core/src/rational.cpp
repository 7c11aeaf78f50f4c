#include "bsato/rational.hpp"

#include <ostream>

#include "bsato/errors.hpp"

namespace bsato {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(mpq_class(n) / 1) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(n);
  v_ /= mpq_class(d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rational(mpq_class(n));
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal: " + s);
  }
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  return Rational(1) / *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational gcd_many(const std::vector<Rational>& xs) {
  // gcd(a/b, c/d) = gcd(a·d, c·b) / (b·d), canonicalized. Folding pairwise.
  mpz_class num = 0, den = 1;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(num * x.den()).get_mpz_t(),
            mpz_class(x.num() * den).get_mpz_t());
    num = g;
    den *= x.den();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num /= g;
    den /= g;
  }
  if (num == 0) return Rational(0);
  return Rational(num, den).abs();
}

}  // namespace bsato
