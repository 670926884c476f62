#pragma once

#include <complex>
#include <vector>

#include "heunqp/ellipticpoly.hpp"
#include "heunqp/heun.hpp"

namespace heunqp {

/// One multiplicative factor (c0 + cs sn + cc cn + cd dn)^tau.  The branch of
/// the non-integer power is the principal one unless `am_sync` is set, in
/// which case the argument is taken in (am-pi, am+pi] — that pins the
/// continuous determination of bases like cn + i kappa sn whose winding
/// follows the amplitude.
struct PowerFactor {
  Complex c0{0, 0}, cs{0, 0}, cc{0, 0}, cd{0, 0};
  double tau = 0;
  bool am_sync = false;
};

/// Analytic closed form
///   phi(y) = scale * prod_j factor_j(y)^tau_j * sn^es cn^ec dn^ed * Z(sn,cn,dn)
/// with exact derivatives from the chain/product rules (the power part never
/// vanishes on the working chart; zeros of phi live in the polynomial part Z,
/// which is evaluated directly rather than log-differentiated).
///
/// Non-integer exponents restrict evaluation to the chart where sn, cn, dn
/// and all factor bases stay inside the principal branch; the unshifted
/// constructions carry integer monomial exponents only and evaluate on the
/// whole real line.
class ClosedForm {
 public:
  explicit ClosedForm(double m) : m_(m), z_(m), dz_(m), d2z_(m) {}

  double modulus() const { return m_; }
  void add_factor(PowerFactor f) { factors_.push_back(f); }
  void set_monomial(double es, double ec, double ed) { es_ = es; ec_ = ec; ed_ = ed; }
  void mul_monomial(double des, double dec, double ded) {
    es_ += des; ec_ += dec; ed_ += ded;
  }
  void set_zpart(NumEPoly z);
  void set_scale(Complex s) { scale_ = s; }

  const std::vector<PowerFactor>& factors() const { return factors_; }
  double es() const { return es_; }
  double ec() const { return ec_; }
  double ed() const { return ed_; }
  const NumEPoly& zpart() const { return z_; }
  Complex scale() const { return scale_; }

  /// Value and first two derivatives at y.
  Jet2 eval(double y) const;
  Jet2 eval(const EllipticPoint& e) const;

  /// Applies the half-period-pair sign substitution (sn,cn,dn) ->
  /// (ss sn, sc cn, sd dn) to the polynomial part only, returning it; used by
  /// the quasi-periodicity analysis.  Factors are handled by the caller.
  NumEPoly zpart_sign_flipped(int ss, int sc, int sd) const {
    return z_.sign_flipped(ss, sc, sd);
  }

 private:
  double m_;
  std::vector<PowerFactor> factors_;
  double es_ = 0, ec_ = 0, ed_ = 0;
  NumEPoly z_, dz_, d2z_;
  Complex scale_{1, 0};
};

enum class QuarterShift { K, IK, KIK };

/// Rewrites the closed form as a function of y+K, y+iK', or y+K+iK' through
/// the exact argument-shift identities of sn, cn, dn, returning a closed form
/// in the original variable.  Overall constant factors (roots of unity,
/// powers of sqrt(m), ...) are dropped: transformed solutions are delivered
/// up to normalization.
ClosedForm shifted_quarter(const ClosedForm& cf, QuarterShift which);

}  // namespace heunqp
