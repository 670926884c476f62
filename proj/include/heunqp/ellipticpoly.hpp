#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "heunqp/poly.hpp"

namespace heunqp {

/// Monomial sn^js cn^jc dn^jd.  The canonical rewriting keeps jc, jd in
/// {0,1} and js >= 0, except that a single exponent may sit at -1: those are
/// the pole monomials sn^-1 / cn^-1 / dn^-1 contributed by the coefficient
/// functions of the Z-equations.  When a pole exponent is present the two
/// companion exponents are reduced into {0,1} as well (eliminating sn^2
/// against cn^2 or dn^2), so the representation is a genuine normal form.
struct EMono {
  int js = 0, jc = 0, jd = 0;
  friend bool operator<(const EMono& a, const EMono& b) {
    if (a.jd != b.jd) return a.jd < b.jd;
    if (a.jc != b.jc) return a.jc < b.jc;
    return a.js < b.js;
  }
  friend bool operator==(const EMono& a, const EMono& b) {
    return a.js == b.js && a.jc == b.jc && a.jd == b.jd;
  }
  bool canonical() const {
    int negs = (js < 0) + (jc < 0) + (jd < 0);
    if (negs > 1) return false;
    if (js < -1 || jc < -1 || jd < -1) return false;
    if (jc > 1 || jd > 1) return false;
    if ((jc < 0 || jd < 0) && js > 1) return false;
    return true;
  }
};

namespace detail {

/// Rewrites arbitrary integer-exponent terms into the canonical basis using
/// cn^2 = 1 - sn^2 and dn^2 = 1 - m sn^2 (and their inversions when a pole
/// exponent is present).  Coef must support +, unary -, scaling used below.
template <class Coef, class Ring>
void reduce_into(std::map<EMono, Coef>& out, EMono mo, Coef c, const Ring& ring) {
  for (;;) {
    if (c.is_zero()) return;
    if (mo.jc >= 2) {  // cn^2 -> 1 - sn^2
      EMono m2 = mo;
      m2.jc -= 2;
      reduce_into(out, m2, c, ring);
      m2.js += 2;
      mo = m2;
      c = -c;
      continue;
    }
    if (mo.jd >= 2) {  // dn^2 -> 1 - m sn^2
      EMono m2 = mo;
      m2.jd -= 2;
      reduce_into(out, m2, c, ring);
      m2.js += 2;
      mo = m2;
      c = ring.neg_m(c);
      continue;
    }
    if (mo.jc <= -1 && mo.js >= 2) {  // sn^2 -> 1 - cn^2
      EMono m2 = mo;
      m2.js -= 2;
      reduce_into(out, m2, c, ring);
      m2.jc += 2;
      mo = m2;
      c = -c;
      continue;
    }
    if (mo.jd <= -1 && mo.js >= 2) {  // sn^2 -> (1 - dn^2)/m
      EMono m2 = mo;
      m2.js -= 2;
      Coef cm = ring.div_m(c);
      reduce_into(out, m2, cm, ring);
      m2.jd += 2;
      mo = m2;
      c = -cm;
      continue;
    }
    if (mo.jd <= -1 && mo.jc >= 2) {  // cn^2 -> 1 - sn^2 first
      EMono m2 = mo;
      m2.jc -= 2;
      reduce_into(out, m2, c, ring);
      m2.js += 2;
      mo = m2;
      c = -c;
      continue;
    }
    break;
  }
  if (!mo.canonical())
    throw std::logic_error("elliptic polynomial rewriting left a non-canonical term");
  auto it = out.find(mo);
  if (it == out.end()) {
    out.emplace(mo, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) out.erase(it);
  }
}

struct ExactRing {
  CPoly neg_m(const CPoly& c) const { return -(c * CPoly::var_m()); }
  CPoly div_m(const CPoly& c) const { return c * CPoly::var_s(-2); }
};

struct NumCoef {
  std::complex<double> v;
  bool is_zero() const { return v == std::complex<double>(0.0, 0.0); }
  NumCoef operator-() const { return {-v}; }
  friend NumCoef operator+(const NumCoef& a, const NumCoef& b) { return {a.v + b.v}; }
};

struct NumRing {
  double m;
  NumCoef neg_m(const NumCoef& c) const { return {-m * c.v}; }
  NumCoef div_m(const NumCoef& c) const { return {c.v / m}; }
};

}  // namespace detail

/// Exact polynomial in (sn, cn, dn) over CPoly coefficients, in the canonical
/// basis described at EMono.  This is the object the ansatz substitution in
/// the Z-equations is carried out on.
class EPoly {
 public:
  EPoly() = default;
  static EPoly mono(int js, int jc, int jd, CPoly c = CPoly::constant(Rational(1))) {
    EPoly p;
    detail::reduce_into(p.terms_, EMono{js, jc, jd}, std::move(c), detail::ExactRing{});
    return p;
  }
  static EPoly constant(CPoly c) { return mono(0, 0, 0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<EMono, CPoly>& terms() const { return terms_; }

  friend EPoly operator+(const EPoly& a, const EPoly& b) {
    EPoly r = a;
    for (const auto& [k, c] : b.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) r.terms_[k] = c;
      else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    return r;
  }
  friend EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        detail::reduce_into(r.terms_,
                            EMono{ka.js + kb.js, ka.jc + kb.jc, ka.jd + kb.jd},
                            ca * cb, detail::ExactRing{});
    return r;
  }
  EPoly scaled(const CPoly& c) const {
    EPoly r;
    for (const auto& [k, v] : terms_)
      detail::reduce_into(r.terms_, k, v * c, detail::ExactRing{});
    return r;
  }

  /// d/dy using sn' = cn dn, cn' = -sn dn, dn' = -m sn cn.
  EPoly derive() const {
    EPoly r;
    for (const auto& [k, c] : terms_) {
      if (k.js != 0)
        detail::reduce_into(r.terms_, EMono{k.js - 1, k.jc + 1, k.jd + 1},
                            c * CPoly::constant(Rational(k.js)), detail::ExactRing{});
      if (k.jc != 0)
        detail::reduce_into(r.terms_, EMono{k.js + 1, k.jc - 1, k.jd + 1},
                            c * CPoly::constant(Rational(-k.jc)), detail::ExactRing{});
      if (k.jd != 0)
        detail::reduce_into(r.terms_, EMono{k.js + 1, k.jc + 1, k.jd - 1},
                            c * CPoly::constant(Rational(-k.jd)) * CPoly::var_m(),
                            detail::ExactRing{});
    }
    return r;
  }

 private:
  std::map<EMono, CPoly> terms_;
};

/// Numeric companion of EPoly: complex coefficients, modulus fixed.  Used for
/// evaluating the polynomial parts of closed-form solutions and their exact
/// analytic derivatives (no finite differencing anywhere).
class NumEPoly {
 public:
  NumEPoly() = default;
  explicit NumEPoly(double m) : m_(m) {}

  double modulus() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<EMono, std::complex<double>>& terms() const { return terms_; }

  void add(EMono mo, std::complex<double> c) {
    detail::reduce_into(terms_, mo, detail::NumCoef{c}, detail::NumRing{m_});
  }

  NumEPoly operator*(const NumEPoly& b) const {
    NumEPoly r(m_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add(EMono{ka.js + kb.js, ka.jc + kb.jc, ka.jd + kb.jd}, ca.v * cb.v);
    return r;
  }
  NumEPoly operator+(const NumEPoly& b) const {
    NumEPoly r = *this;
    for (const auto& [k, c] : b.terms_) r.add(k, c.v);
    return r;
  }
  NumEPoly scaled(std::complex<double> c) const {
    NumEPoly r(m_);
    for (const auto& [k, v] : terms_) r.add(k, v.v * c);
    return r;
  }

  NumEPoly derive() const {
    NumEPoly r(m_);
    for (const auto& [k, c] : terms_) {
      if (k.js != 0) r.add(EMono{k.js - 1, k.jc + 1, k.jd + 1}, c.v * double(k.js));
      if (k.jc != 0) r.add(EMono{k.js + 1, k.jc - 1, k.jd + 1}, -c.v * double(k.jc));
      if (k.jd != 0) r.add(EMono{k.js + 1, k.jc + 1, k.jd - 1}, -c.v * double(k.jd) * m_);
    }
    return r;
  }

  std::complex<double> eval(double sn, double cn, double dn) const {
    std::complex<double> v{0.0, 0.0};
    auto ip = [](double x, int e) {
      double r = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
      return e < 0 ? 1.0 / r : r;
    };
    for (const auto& [k, c] : terms_) v += c.v * ip(sn, k.js) * ip(cn, k.jc) * ip(dn, k.jd);
    return v;
  }

  /// Coefficient-wise conjugation (the i -> -i move of the degeneracy
  /// arguments; function values at real y conjugate accordingly).
  NumEPoly conjugated() const {
    NumEPoly r(m_);
    for (const auto& [k, c] : terms_) r.terms_[k] = {std::conj(c.v)};
    return r;
  }

  /// Applies sn -> ss*sn, cn -> sc*cn, dn -> sd*dn with signs in {-1,+1}
  /// (the half-period-pair substitutions).
  NumEPoly sign_flipped(int ss, int sc, int sd) const {
    NumEPoly r(m_);
    for (const auto& [k, c] : terms_) {
      double f = ((k.js % 2 && ss < 0) ? -1.0 : 1.0) *
                 ((k.jc % 2 && sc < 0) ? -1.0 : 1.0) *
                 ((k.jd % 2 && sd < 0) ? -1.0 : 1.0);
      r.terms_[k] = {c.v * f};
    }
    return r;
  }

 private:
  double m_ = 0.5;
  std::map<EMono, detail::NumCoef> terms_;
};

}  // namespace heunqp
