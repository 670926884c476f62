#include "heunqp/heun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heunqp {

HeunParams::HeunParams(double alpha_, double beta_, double gamma_, double delta_,
                       double epsilon_, Complex q_, double c_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_), epsilon(epsilon_),
      q(q_), c(c_) {
  if (std::abs(constraint_defect()) > 1e-12)
    throw std::domain_error("HeunParams: gamma+delta+epsilon != alpha+beta+1");
  if (c == 0.0 || c == 1.0)
    throw std::domain_error("HeunParams: singular point c must avoid {0,1}");
}

double ResidualSample::relative() const {
  return std::abs(value) / std::max(scale, 1e-300);
}

ResidualSample residual_canonical(const HeunParams& p, const Jet2& sol, double x,
                                  double exclusion) {
  if (std::abs(x) < exclusion || std::abs(x - 1.0) < exclusion ||
      std::abs(x - p.c) < exclusion)
    throw std::domain_error("residual_canonical: x inside an exclusion disk");
  Complex t1 = sol.d2f;
  Complex t2 = (p.gamma / x + p.delta / (x - 1.0) + p.epsilon / (x - p.c)) * sol.df;
  Complex t3 = (p.alpha * p.beta * x - p.q) / (x * (x - 1.0) * (x - p.c)) * sol.f;
  return {t1 + t2 + t3, std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
}

ResidualSample residual_elliptic(const HeunParams& p, const Jet2& sol, double y,
                                 EllipticModulus m, double exclusion) {
  QuarterPeriods qp = quarter_periods(m);
  // zeros of sn at 2kK, zeros of cn at (2k+1)K
  double r = std::remainder(y, 2.0 * qp.K);
  if (std::abs(r) < exclusion || std::abs(std::abs(r) - qp.K) < exclusion)
    throw std::domain_error("residual_elliptic: y too close to a coefficient pole");
  EllipticPoint e = eval_jacobi(y, m);
  double mm = m.value();
  Complex t1 = sol.d2f;
  Complex t2 = ((1.0 - 2.0 * p.epsilon) * mm * e.sn * e.cn / e.dn +
                (1.0 - 2.0 * p.delta) * e.sn * e.dn / e.cn +
                (2.0 * p.gamma - 1.0) * e.cn * e.dn / e.sn) *
               sol.df;
  Complex t3 = -(4.0 * mm * p.q - 4.0 * p.alpha * p.beta * mm * e.sn * e.sn) * sol.f;
  return {t1 + t2 + t3, std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
}

double to_canonical(double y, EllipticModulus m) {
  EllipticPoint e = eval_jacobi(y, m);
  return e.sn * e.sn;
}

double from_canonical(double x, EllipticModulus m) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("from_canonical: x outside the invertible chart (0,1)");
  QuarterPeriods qp = quarter_periods(m);
  double s = std::sqrt(x);
  double lo = 0.0, hi = qp.K;
  double y = std::asin(s) * qp.K / (2.0 * std::atan(1.0));  // crude seed
  for (int it = 0; it < 80; ++it) {
    EllipticPoint e = eval_jacobi(y, m);
    double fy = e.sn - s;
    if (fy > 0) hi = y; else lo = y;
    double dy = fy / std::max(e.cn * e.dn, 1e-14);
    double yn = y - dy;
    if (!(yn > lo && yn < hi)) yn = 0.5 * (lo + hi);
    if (std::abs(yn - y) < 1e-16 * qp.K) { y = yn; break; }
    y = yn;
  }
  return y;
}

Jet2 pullback_jet(const Jet2& in_y, double y, EllipticModulus m) {
  EllipticPoint e = eval_jacobi(y, m);
  double mm = m.value();
  double xp = 2.0 * e.sn * e.cn * e.dn;  // dx/dy
  double xpp = 2.0 * (e.cn * e.cn * e.dn * e.dn - e.sn * e.sn * e.dn * e.dn -
                      mm * e.sn * e.sn * e.cn * e.cn);
  if (std::abs(xp) < 1e-12)
    throw std::domain_error("pullback_jet: chart derivative vanishes here");
  Jet2 out;
  out.f = in_y.f;
  out.df = in_y.df / xp;
  out.d2f = (in_y.d2f - out.df * xpp) / (xp * xp);
  return out;
}

std::vector<Complex> frobenius_series(const HeunParams& p, int n_terms, double rho) {
  if (n_terms < 2) throw std::domain_error("frobenius_series: need n_terms >= 2");
  // Denominator of the recurrence is c (n+1+rho)(n+rho+gamma); the branch is
  // unavailable as soon as it vanishes for some n >= 0.
  for (int n = 0; n < n_terms; ++n) {
    if (std::abs((n + 1 + rho)) < 1e-12 || std::abs(n + rho + p.gamma) < 1e-12)
      throw std::domain_error(
          "frobenius_series: branch unavailable (indicial degeneracy at x=0)");
  }
  std::vector<Complex> c(n_terms + 1);
  c[0] = 1.0;
  const double C = p.c;
  auto kk = [&](int n) { return n + rho; };
  for (int n = 0; n + 1 <= n_terms; ++n) {
    Complex B = (kk(n) * ((kk(n) - 1.0) * (1.0 + C) + p.gamma * (1.0 + C) +
                          p.delta * C + p.epsilon) +
                 p.q) *
                c[n];
    Complex A = 0.0;
    if (n >= 1)
      A = (kk(n) - 1.0 + p.alpha) * (kk(n) - 1.0 + p.beta) * c[n - 1];
    c[n + 1] = (B - A) / (C * (kk(n) + 1.0) * (kk(n) + p.gamma));
  }
  return c;
}

Complex frobenius_eval(const std::vector<Complex>& coef, double x, double rho) {
  Complex s{0, 0};
  double xp = 1.0;
  for (const auto& ck : coef) {
    s += ck * xp;
    xp *= x;
  }
  if (rho != 0.0) s *= std::pow(x, rho);
  return s;
}

}  // namespace heunqp
