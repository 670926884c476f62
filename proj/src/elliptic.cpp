#include "heunqp/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace heunqp {

EllipticModulus::EllipticModulus(double m) : m_(m) {
  if (!std::isfinite(m) || m <= 0.0 || m >= 1.0)
    throw std::domain_error("EllipticModulus: m must lie strictly in (0,1)");
}

namespace {

constexpr int kMaxAgm = 32;

struct AgmTable {
  double a[kMaxAgm];
  double c[kMaxAgm];
  int n = 0;
};

// Runs the AGM a_{k+1}=(a_k+b_k)/2, b_{k+1}=sqrt(a_k b_k) down to c_n ~ 0.
AgmTable agm_descend(double m) {
  AgmTable tab;
  double a = 1.0, b = std::sqrt(1.0 - m);
  int k = 0;
  for (; k < kMaxAgm; ++k) {
    tab.a[k] = a;
    tab.c[k] = (a - b) / 2.0;
    double an = (a + b) / 2.0;
    if (std::abs(tab.c[k]) <= 1e-17 * an && k > 0) break;
    b = std::sqrt(a * b);
    a = an;
  }
  tab.n = (k == kMaxAgm) ? kMaxAgm - 1 : k;
  return tab;
}

}  // namespace

QuarterPeriods quarter_periods(EllipticModulus m) {
  auto agm_limit = [](double mm) {
    double a = 1.0, b = std::sqrt(1.0 - mm);
    for (int k = 0; k < kMaxAgm && std::abs(a - b) > 1e-17 * a; ++k) {
      double an = (a + b) / 2.0;
      b = std::sqrt(a * b);
      a = an;
    }
    return a;
  };
  QuarterPeriods qp;
  qp.K = 2.0 * std::atan(1.0) / agm_limit(m.value());
  qp.Kprime = 2.0 * std::atan(1.0) / agm_limit(m.complement());
  return qp;
}

EllipticPoint eval_jacobi(double y, EllipticModulus m) {
  if (!std::isfinite(y)) throw std::domain_error("eval_jacobi: non-finite argument");
  EllipticPoint pt;
  pt.y = y;
  pt.m = m.value();
  AgmTable tab = agm_descend(m.value());
  // Forward phase at the deepest level, then the classical backward
  // recursion phi_{k-1} = (phi_k + asin((c_k/a_k) sin phi_k)) / 2.
  // The result phi_0 is the amplitude with its continuous determination.
  double phi = std::ldexp(tab.a[tab.n] * y, tab.n);
  for (int k = tab.n; k >= 1; --k) {
    double r = (tab.c[k] / tab.a[k]) * std::sin(phi);
    r = std::fmin(1.0, std::fmax(-1.0, r));
    phi = (phi + std::asin(r)) / 2.0;
  }
  pt.am = phi;
  pt.sn = std::sin(phi);
  pt.cn = std::cos(phi);
  double d2 = 1.0 - m.value() * pt.sn * pt.sn;
  pt.dn = std::sqrt(d2 > 0 ? d2 : 0);
  return pt;
}

std::complex<double> phase_power_case1(double y, EllipticModulus m, double t) {
  EllipticPoint pt = eval_jacobi(y, m);
  return std::polar(1.0, t * pt.am);
}

std::complex<double> phase_power_case2(double y, EllipticModulus m, double t) {
  EllipticPoint pt = eval_jacobi(y, m);
  double theta = std::asin(std::sqrt(m.value()) * pt.sn);
  return std::polar(1.0, t * theta);
}

double phase_power_case3(double y, EllipticModulus m, double t) {
  EllipticPoint pt = eval_jacobi(y, m);
  return std::pow(pt.dn + std::sqrt(m.value()) * pt.cn, t);
}

}  // namespace heunqp
