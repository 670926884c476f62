#pragma once

#include <array>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "heunqp/rational.hpp"

namespace heunqp {

/// Gaussian rational: exact complex number with rational parts.
struct GRat {
  Rational re, im;
  GRat() = default;
  GRat(Rational r) : re(r), im(0) {}
  GRat(Rational r, Rational i) : re(r), im(i) {}
  static GRat unit_i() { return GRat(Rational(0), Rational(1)); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Exact Laurent polynomial in (s, t, E) over Gaussian rationals, where
/// s = sqrt(m).  E appears at most linearly in every pencil coefficient;
/// s may carry negative exponents (picked up when eliminating sn^2 against
/// dn^2 in the term rewriting).
class CPoly {
 public:
  using Key = std::array<int, 3>;  // exponents of (s, t, E)

  CPoly() = default;
  static CPoly constant(GRat c) {
    CPoly p;
    if (!c.is_zero()) p.terms_[{0, 0, 0}] = c;
    return p;
  }
  static CPoly constant(Rational r) { return constant(GRat(r)); }
  static CPoly mono(int es, int et, int eE, GRat c) {
    CPoly p;
    if (!c.is_zero()) p.terms_[{es, et, eE}] = c;
    return p;
  }
  static CPoly var_s(int k = 1) { return mono(k, 0, 0, GRat(Rational(1))); }
  static CPoly var_t() { return mono(0, 1, 0, GRat(Rational(1))); }
  static CPoly var_E() { return mono(0, 0, 1, GRat(Rational(1))); }
  /// m = s^2.
  static CPoly var_m() { return var_s(2); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GRat>& terms() const { return terms_; }

  friend CPoly operator+(const CPoly& a, const CPoly& b) {
    CPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend CPoly operator-(const CPoly& a, const CPoly& b) {
    CPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
  }
  CPoly operator-() const {
    CPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  CPoly& operator+=(const CPoly& b) { return *this = *this + b; }

  int degree_E() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k[2]);
    return d;
  }

  /// Evaluates with E split off: returns (value at E=0, coefficient of E).
  /// Throws if the E-degree exceeds 1.
  std::pair<std::complex<double>, std::complex<double>> eval_affine_E(
      double s, double t) const {
    std::complex<double> a0{0.0, 0.0}, a1{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      if (k[2] > 1) throw std::logic_error("CPoly: E-degree exceeds 1");
      std::complex<double> v = c.to_complex() * std::pow(s, k[0]) * std::pow(t, k[1]);
      (k[2] == 0 ? a0 : a1) += v;
    }
    return {a0, a1};
  }

 private:
  void add_term(const Key& k, const GRat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[k] = c;
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  std::map<Key, GRat> terms_;
};

/// Exact polynomial in (N, p, t, m) over rationals: the coefficient domain of
/// the symbolic Heun family tables.  Canonical form is the expanded, sorted
/// monomial map, so equality of expressions is map equality.
class SymPoly {
 public:
  using Key = std::array<int, 4>;  // exponents of (N, p, t, m)

  SymPoly() = default;
  SymPoly(Rational c) { if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c; }
  SymPoly(std::int64_t c) : SymPoly(Rational(c)) {}
  static SymPoly mono(int eN, int ep, int et, int em, Rational c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_[{eN, ep, et, em}] = c;
    return p;
  }
  static SymPoly N() { return mono(1, 0, 0, 0, 1); }
  static SymPoly p() { return mono(0, 1, 0, 0, 1); }
  static SymPoly t() { return mono(0, 0, 1, 0, 1); }
  static SymPoly m() { return mono(0, 0, 0, 1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]},
                   ca * cb);
    return r;
  }
  SymPoly operator-() const {
    SymPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }
  friend bool operator<(const SymPoly& a, const SymPoly& b) {
    auto ta = a.terms_.begin(), tb = b.terms_.begin();
    for (; ta != a.terms_.end() && tb != b.terms_.end(); ++ta, ++tb) {
      if (ta->first != tb->first) return ta->first < tb->first;
      if (ta->second != tb->second) return ta->second < tb->second;
    }
    return tb != b.terms_.end();
  }

  /// Substitutes t -> -t.
  SymPoly reflect_t() const {
    SymPoly r;
    for (const auto& [k, c] : terms_)
      r.terms_[k] = (k[2] % 2 == 0) ? c : -c;
    return r;
  }

  double eval(double N, double p, double t, double m) const {
    double v = 0;
    for (const auto& [k, c] : terms_)
      v += c.to_double() * std::pow(N, k[0]) * std::pow(p, k[1]) *
           std::pow(t, k[2]) * std::pow(m, k[3]);
    return v;
  }

  /// Canonical rendering, e.g. "N^2 - t^2 + m*N*t".  Monomials appear in the
  /// fixed map order, so equal polynomials render identically.
  std::string str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"N", "p", "t", "m"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Rational apos = c < Rational(0) ? -c : c;
      os << (first ? (c < Rational(0) ? "-" : "") : (c < Rational(0) ? " - " : " + "));
      first = false;
      bool unit = (apos == Rational(1));
      bool any_var = k[0] || k[1] || k[2] || k[3];
      if (!unit || !any_var) os << apos.str();
      bool need_star = !unit || !any_var;
      for (int i = 0; i < 4; ++i) {
        if (k[i] == 0) continue;
        if (need_star) os << "*";
        os << names[i];
        if (k[i] > 1) os << "^" << k[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void add_term(const Key& k, const Rational& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[k] = c;
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  std::map<Key, Rational> terms_;
};

}  // namespace heunqp
