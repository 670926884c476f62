#pragma once

#include <complex>
#include <vector>

#include "heunqp/elliptic.hpp"

namespace heunqp {

using Complex = std::complex<double>;

/// Parameters of Heun's equation in canonical form,
///   G'' + (gamma/x + delta/(x-1) + epsilon/(x-c)) G'
///      + (alpha beta x - q) / (x (x-1) (x-c)) G = 0,
/// subject to gamma + delta + epsilon = alpha + beta + 1.  The accessory
/// parameter q is complex-capable: the two-branch families instantiate to a
/// conjugate pair where their radicand goes negative.
struct HeunParams {
  double alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0;
  Complex q{0, 0};
  double c = 2.0;

  HeunParams() = default;
  HeunParams(double alpha, double beta, double gamma, double delta,
             double epsilon, Complex q, double c);

  double constraint_defect() const {
    return gamma + delta + epsilon - alpha - beta - 1.0;
  }
};

/// One residual evaluation: raw value of the ODE's left side and the largest
/// of the three summand magnitudes.  The relative residual |value|/scale is
/// the scale-free pass/fail quantity used throughout.
struct ResidualSample {
  Complex value{0, 0};
  double scale = 0;
  double relative() const;
};

/// Candidate solution data at a point: value and first two derivatives.
struct Jet2 {
  Complex f{0, 0}, df{0, 0}, d2f{0, 0};
};

/// Residual of the canonical form at x.  Demands x be at least
/// `exclusion` away from the singular points {0, 1, c}.
ResidualSample residual_canonical(const HeunParams& p, const Jet2& sol, double x,
                                  double exclusion = 1e-3);

/// Residual of the elliptic form (after x = sn^2(y,m), c = 1/m):
///   F'' + [(1-2 eps) m sn cn / dn + (1-2 delta) sn dn / cn
///          + (2 gamma - 1) cn dn / sn] F' - [4mq - 4 alpha beta m sn^2] F.
/// y must stay `exclusion` (in y units) away from zeros of sn and cn.
ResidualSample residual_elliptic(const HeunParams& p, const Jet2& sol, double y,
                                 EllipticModulus m, double exclusion = 1e-3);

/// x = sn^2(y,m); the invertible chart maps (0,K) onto (0,1).
double to_canonical(double y, EllipticModulus m);

/// Inverse chart on (0,1) -> (0,K), by Newton on sn with bisection safety.
double from_canonical(double x, EllipticModulus m);

/// Converts a jet in y to the corresponding jet in x = sn^2(y,m) via the
/// chain rule (dx/dy = 2 sn cn dn).  y must be interior to (0,K).
Jet2 pullback_jet(const Jet2& in_y, double y, EllipticModulus m);

/// Coefficients c_0..c_n of the Frobenius solution at the regular singular
/// point x=0 with exponent rho (rho = 0 gives the analytic branch, c_0 = 1).
/// Throws std::domain_error when the branch degenerates (for rho = 0 that is
/// gamma in {0,-1,-2,...}).
std::vector<Complex> frobenius_series(const HeunParams& p, int n_terms,
                                      double rho = 0.0);

/// Partial sum of sum c_k x^(k+rho).
Complex frobenius_eval(const std::vector<Complex>& coef, double x, double rho = 0.0);

}  // namespace heunqp
