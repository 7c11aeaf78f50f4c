#ifndef BSATO_PARAM_POLY_HPP
#define BSATO_PARAM_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bsato/rational.hpp"

namespace bsato {

// Exponent vector in N^m. All keys of one polynomial have the same length.
using YExp = std::vector<uint32_t>;

uint32_t total_degree(const YExp& e);

// degrevlex "less" on exponent vectors of equal length.
bool grevlex_less(const YExp& a, const YExp& b);

// Sparse multivariate polynomial in the parameters y over exact rationals.
// This is the coefficient ring C of the pipeline. Terms are kept in a sorted
// map (lex on the exponent vector) with no zero coefficients, so iteration
// order and printing are canonical.
class ParamPoly {
 public:
  ParamPoly() : nvars_(0) {}
  explicit ParamPoly(uint32_t nvars) : nvars_(nvars) {}

  static ParamPoly constant(uint32_t nvars, const Rational& c);
  static ParamPoly variable(uint32_t nvars, uint32_t i, uint32_t power = 1);

  uint32_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (zero if absent).
  Rational constant_term() const;
  // Requires is_constant().
  Rational as_constant() const;

  const std::map<YExp, Rational>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  uint32_t degree() const;  // total degree, 0 for the zero polynomial

  void set_coeff(const YExp& e, const Rational& c);
  Rational coeff(const YExp& e) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  ParamPoly scaled(const Rational& c) const;
  ParamPoly pow(uint32_t k) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
  // Structural order (for use as map key); lex on the term list.
  friend bool operator<(const ParamPoly& a, const ParamPoly& b);

  Rational eval(const std::vector<Rational>& point) const;

  // Leading data w.r.t. degrevlex (used by the commutative reduction engine).
  const YExp& lead_exp_grevlex() const;
  const Rational& lead_coeff_grevlex() const;

  // gcd of all coefficients (positive), 0 for the zero polynomial.
  Rational content() const;
  // Divides by content and makes the grevlex-leading coefficient positive.
  ParamPoly normalized() const;

  std::string str(const std::vector<std::string>& names) const;
  // Uses y1..ym (or the single name y if m = 1).
  std::string str() const;

 private:
  uint32_t nvars_;
  std::map<YExp, Rational> terms_;
};

}  // namespace bsato

#endif
