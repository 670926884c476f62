#include "heunqp/gal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heunqp {

SpectralPair SpectralPair::from_energy(const GalParams& p, Complex E) {
  SpectralPair sp;
  sp.E = E;
  sp.R = -E + p.m * (p.g + p.b) * (p.g + p.b) + (p.f + p.g) * (p.f + p.g);
  sp.Q = (p.b + p.f + p.g) * (p.b + p.f + p.g - 1.0) - p.a * (p.a + 1.0);
  return sp;
}

namespace {

void check_poles(const GalParams& p, double y, double exclusion, bool need_sn,
                 bool need_cn) {
  QuarterPeriods qp = quarter_periods(p.modulus());
  double r = std::remainder(y, 2.0 * qp.K);
  if (need_sn && std::abs(r) < exclusion)
    throw std::domain_error("gal: y too close to a zero of sn");
  if (need_cn && std::abs(std::abs(r) - qp.K) < exclusion)
    throw std::domain_error("gal: y too close to a zero of cn");
}

}  // namespace

double potential(const GalParams& p, double y, double exclusion) {
  check_poles(p, y, exclusion, p.g * (p.g + 1.0) != 0.0, p.f * (p.f + 1.0) != 0.0);
  EllipticPoint e = eval_jacobi(y, p.modulus());
  double v = p.a * (p.a + 1.0) * p.m * e.sn * e.sn +
             p.b * (p.b + 1.0) * p.m * e.cn * e.cn / (e.dn * e.dn);
  if (p.f * (p.f + 1.0) != 0.0) v += p.f * (p.f + 1.0) * e.dn * e.dn / (e.cn * e.cn);
  if (p.g * (p.g + 1.0) != 0.0) v += p.g * (p.g + 1.0) / (e.sn * e.sn);
  return v;
}

ResidualSample schrodinger_residual(const GalParams& p, Complex E, const Jet2& psi,
                                    double y, double exclusion) {
  double V = potential(p, y, exclusion);
  Complex t1 = -psi.d2f;
  Complex t2 = (V - E) * psi.f;
  return {t1 + t2, std::max(std::abs(t1), std::abs(t2))};
}

ResidualSample phi_residual(const GalParams& p, const SpectralPair& sp,
                            const Jet2& phi, double y, double exclusion) {
  check_poles(p, y, exclusion, p.g != 0.0, p.f != 0.0);
  EllipticPoint e = eval_jacobi(y, p.modulus());
  Complex t1 = phi.d2f;
  Complex t2 = 2.0 *
               (p.m * p.b * e.sn * e.cn / e.dn + p.f * e.sn * e.dn / e.cn -
                p.g * e.cn * e.dn / e.sn) *
               phi.df;
  Complex t3 = -(sp.R - sp.Q * p.m * e.sn * e.sn) * phi.f;
  return {t1 + t2 + t3, std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
}

HeunParams heun_dictionary(const GalParams& p, const SpectralPair& sp) {
  double gamma = 0.5 - p.g;
  double delta = 0.5 - p.f;
  double epsilon = 0.5 - p.b;
  double s = gamma + delta + epsilon;
  double alpha = (p.a + s - 0.5) / 2.0;
  double beta = (s - p.a - 1.5) / 2.0;
  Complex q = sp.R / (4.0 * p.m);
  return HeunParams(alpha, beta, gamma, delta, epsilon, q, 1.0 / p.m);
}

GalParams apply_symmetry(SymmetryGen g, const GalParams& p) {
  GalParams r = p;
  switch (g) {
    case SymmetryGen::ShiftK:   std::swap(r.a, r.b); std::swap(r.f, r.g); break;
    case SymmetryGen::ShiftIK:  std::swap(r.a, r.g); std::swap(r.b, r.f); break;
    case SymmetryGen::ShiftKIK: std::swap(r.a, r.f); std::swap(r.b, r.g); break;
    case SymmetryGen::NegateA:
    case SymmetryGen::TReflect: r.a = -r.a - 1.0; break;
    case SymmetryGen::NegateB:  r.b = -r.b - 1.0; break;
    case SymmetryGen::NegateF:  r.f = -r.f - 1.0; break;
    case SymmetryGen::NegateG:  r.g = -r.g - 1.0; break;
  }
  return r;
}

GalParams apply_symmetry(const SymmetryOp& op, const GalParams& p) {
  GalParams r = p;
  for (SymmetryGen g : op) r = apply_symmetry(g, r);
  return r;
}

Complex transport_R(const GalParams& p1, const GalParams& p2, Complex R1) {
  return R1 - p1.m * (p1.b + p1.g) * (p1.b + p1.g) - (p1.f + p1.g) * (p1.f + p1.g) +
         p2.m * (p2.b + p2.g) * (p2.b + p2.g) + (p2.f + p2.g) * (p2.f + p2.g);
}

std::string to_string(SymmetryGen g) {
  switch (g) {
    case SymmetryGen::ShiftK:   return "shift_K";
    case SymmetryGen::ShiftIK:  return "shift_iK'";
    case SymmetryGen::ShiftKIK: return "shift_K_iK'";
    case SymmetryGen::NegateA:  return "negate_a";
    case SymmetryGen::NegateB:  return "negate_b";
    case SymmetryGen::NegateF:  return "negate_f";
    case SymmetryGen::NegateG:  return "negate_g";
    case SymmetryGen::TReflect: return "t_reflection";
  }
  return "?";
}

}  // namespace heunqp
