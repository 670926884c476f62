#pragma once

#include <string>
#include <vector>

#include "heunqp/elliptic.hpp"
#include "heunqp/heun.hpp"

namespace heunqp {

/// Strengths of the generalized associated Lame potential
///   V = a(a+1) m sn^2 + b(b+1) m cn^2/dn^2 + f(f+1) dn^2/cn^2 + g(g+1)/sn^2.
/// The four single-argument terms are the computational definition; the
/// shifted-argument form is realized only through parameter relabelings.
struct GalParams {
  double a = 0, b = 0, f = 0, g = 0;
  double m = 0.5;

  GalParams() = default;
  GalParams(double a, double b, double f, double g, EllipticModulus mod)
      : a(a), b(b), f(f), g(g), m(mod.value()) {}
  EllipticModulus modulus() const { return EllipticModulus(m); }
};

/// The spectral data tying the Schrodinger problem to the accessory
/// parameter:  R = 4mq = -E + m(g+b)^2 + (f+g)^2,
///             Q = 4 alpha beta = (b+f+g)(b+f+g-1) - a(a+1).
struct SpectralPair {
  Complex E{0, 0};
  Complex R{0, 0};
  double Q = 0;

  static SpectralPair from_energy(const GalParams& p, Complex E);
};

double potential(const GalParams& p, double y, double exclusion = 1e-3);

/// -psi'' + (V - E) psi at y, as a residual sample.
ResidualSample schrodinger_residual(const GalParams& p, Complex E, const Jet2& psi,
                                    double y, double exclusion = 1e-3);

/// Left side of the phi-equation obtained from the substitution
/// psi = dn^-b cn^-f sn^-g phi:
///   phi'' + 2[ m b sn cn/dn + f sn dn/cn - g cn dn/sn ] phi'
///        - [ R - Q m sn^2 ] phi.
ResidualSample phi_residual(const GalParams& p, const SpectralPair& sp,
                            const Jet2& phi, double y, double exclusion = 1e-3);

/// GAL -> Heun parameter dictionary: gamma = 1/2-g, delta = 1/2-f,
/// epsilon = 1/2-b, with (alpha, beta) split as
///   alpha = (a + gamma+delta+epsilon - 1/2)/2,
///   beta  = (gamma+delta+epsilon - a - 3/2)/2,
/// and q = R/(4m), c = 1/m.  The output satisfies the Heun constraint
/// identically and 4 alpha beta = Q.
HeunParams heun_dictionary(const GalParams& p, const SpectralPair& sp);

enum class SymmetryGen {
  ShiftK,       // a<->b, f<->g   (y -> y+K)
  ShiftIK,      // a<->g, b<->f   (y -> y+iK')
  ShiftKIK,     // a<->f, b<->g   (y -> y+K+iK')
  NegateA,      // a -> -a-1
  NegateB,
  NegateF,
  NegateG,
  TReflect,     // t -> -t; on strengths this is a -> -a-1 since a = t-1/2
};

/// A word in the symmetry generators, applied left to right.
using SymmetryOp = std::vector<SymmetryGen>;

GalParams apply_symmetry(SymmetryGen g, const GalParams& p);
GalParams apply_symmetry(const SymmetryOp& op, const GalParams& p);

/// Transports R = 4mq between two parameter sets connected by a symmetry,
/// holding the energy fixed (the corrected corollary of the R/Q relations):
///   R2 = R1 - m (b1+g1)^2 - (f1+g1)^2 + m (b2+g2)^2 + (f2+g2)^2.
Complex transport_R(const GalParams& p1, const GalParams& p2, Complex R1);

std::string to_string(SymmetryGen g);

}  // namespace heunqp
