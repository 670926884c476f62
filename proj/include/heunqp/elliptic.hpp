#pragma once

#include <complex>

namespace heunqp {

/// Elliptic parameter m (the squared modulus convention of Abramowitz &
/// Stegun / DLMF ch. 22: sn(y|m), K(m)).  Strictly inside (0,1); the
/// degenerate trigonometric (m=0) and hyperbolic (m=1) limits are rejected.
class EllipticModulus {
 public:
  explicit EllipticModulus(double m);
  double value() const { return m_; }
  double complement() const { return 1.0 - m_; }

 private:
  double m_;
};

/// Jacobi elliptic function values at a real argument, plus the amplitude
/// am(y|m) carried along with its continuous (unwrapped) determination,
/// am(0)=0.  Satisfies sn = sin(am), cn = cos(am), am' = dn.
struct EllipticPoint {
  double y = 0;
  double m = 0;
  double sn = 0;
  double cn = 1;
  double dn = 1;
  double am = 0;
};

struct QuarterPeriods {
  double K = 0;       // K(m)
  double Kprime = 0;  // K(1-m)
};

/// Evaluates sn, cn, dn (and the continuous amplitude) by the descending
/// Landen / arithmetic-geometric-mean recursion (A&S 16.4, DLMF 22.20).
/// The backward phase recursion yields am(y) already unwrapped, which the
/// non-integer prefactor powers rely on.
EllipticPoint eval_jacobi(double y, EllipticModulus m);

/// K and K' by the arithmetic-geometric mean.
QuarterPeriods quarter_periods(EllipticModulus m);

/// [cn + i sn]^t = exp(i t am(y)), continuous in y with value 1 at y=0.
/// Unimodular on the real line.
std::complex<double> phase_power_case1(double y, EllipticModulus m, double t);

/// [dn + i sqrt(m) sn]^t = exp(i t asin(sqrt(m) sn)).  The base stays in the
/// right half plane (dn >= sqrt(1-m) > 0), so no unwrapping is needed.
std::complex<double> phase_power_case2(double y, EllipticModulus m, double t);

/// [dn + sqrt(m) cn]^t as a real positive power; the base is bounded below
/// by a positive constant since dn^2 - m cn^2 = 1 - m.
double phase_power_case3(double y, EllipticModulus m, double t);

}  // namespace heunqp
