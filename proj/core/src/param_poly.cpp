#include "bsato/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "bsato/errors.hpp"

namespace bsato {

uint32_t total_degree(const YExp& e) {
  uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grevlex_less(const YExp& a, const YExp& b) {
  uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Equal degree: a < b iff the last nonzero entry of a-b is positive.
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

ParamPoly ParamPoly::constant(uint32_t nvars, const Rational& c) {
  ParamPoly p(nvars);
  if (!c.is_zero()) p.terms_[YExp(nvars, 0)] = c;
  return p;
}

ParamPoly ParamPoly::variable(uint32_t nvars, uint32_t i, uint32_t power) {
  if (i >= nvars) throw Error("ParamPoly::variable: index out of range");
  ParamPoly p(nvars);
  YExp e(nvars, 0);
  e[i] = power;
  p.terms_[e] = Rational(1);
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(YExp(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::as_constant() const {
  if (!is_constant()) throw Error("ParamPoly::as_constant: not a constant");
  return constant_term();
}

uint32_t ParamPoly::degree() const {
  uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void ParamPoly::set_coeff(const YExp& e, const Rational& c) {
  if (e.size() != nvars_) throw Error("ParamPoly::set_coeff: exponent width mismatch");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

Rational ParamPoly::coeff(const YExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (nvars_ != o.nvars_) {
    if (is_zero()) { nvars_ = o.nvars_; }
    else if (!o.is_zero()) throw Error("ParamPoly: mixed variable counts");
  }
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero())
    throw Error("ParamPoly: mixed variable counts");
  ParamPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      YExp e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

ParamPoly ParamPoly::pow(uint32_t k) const {
  ParamPoly r = ParamPoly::constant(nvars_, Rational(1));
  for (uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator<(const ParamPoly& a, const ParamPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Rational ParamPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error("ParamPoly::eval: point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

const YExp& ParamPoly::lead_exp_grevlex() const {
  if (terms_.empty()) throw Error("ParamPoly: lead of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grevlex_less(best->first, it->first)) best = it;
  }
  return best->first;
}

const Rational& ParamPoly::lead_coeff_grevlex() const {
  return terms_.at(lead_exp_grevlex());
}

Rational ParamPoly::content() const {
  std::vector<Rational> cs;
  cs.reserve(terms_.size());
  for (const auto& [e, c] : terms_) cs.push_back(c);
  return gcd_many(cs);
}

ParamPoly ParamPoly::normalized() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (lead_coeff_grevlex().sign() < 0) c = -c;
  return scaled(c.inverse());
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest grevlex term first for readability.
  std::vector<const std::pair<const YExp, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return grevlex_less(b->first, a->first);
  });
  for (auto* t : ts) {
    const auto& [e, c] = *t;
    Rational cc = c;
    if (first) {
      if (cc.sign() < 0) { os << "-"; cc = -cc; }
    } else {
      os << (cc.sign() < 0 ? " - " : " + ");
      cc = cc.abs();
    }
    first = false;
    bool printed = false;
    if (!cc.is_one() || total_degree(e) == 0) {
      os << cc.str();
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::string ParamPoly::str() const {
  std::vector<std::string> names;
  if (nvars_ == 1) {
    names = {"y"};
  } else {
    for (uint32_t i = 0; i < nvars_; ++i) names.push_back("y" + std::to_string(i + 1));
  }
  return str(names);
}

}  // namespace bsato
