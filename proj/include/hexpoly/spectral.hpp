#pragma once

#include <array>
#include <complex>

#include "hexpoly/oracle.hpp"

namespace hexpoly {

// Symmetric Laurent polynomial
//   c00 + cw (w + 1/w) + cz (z + 1/z) + czw (z/w + w/z),
// real valued on the unit torus.
struct LaurentPoly2 {
  double c00 = 0.0;
  double cw = 0.0;
  double cz = 0.0;
  double czw = 0.0;

  std::complex<double> eval(std::complex<double> z, std::complex<double> w) const;
  double eval_angles(double t1, double t2) const;  // z = e^{i t1}, w = e^{i t2}
};

// Dimer characteristic polynomial in triangle weights A, B, C.
LaurentPoly2 char_poly_closed(double A, double B, double C);
// Same polynomial written in the polygon weights.
LaurentPoly2 char_poly_from_polygon(const PolygonParams& prm);

// P(1,1) = U^2, P(1,-1) = V^2, P(-1,1) = T^2, P(-1,-1) = S^2.
struct CriticalityIndicators {
  double U, V, S, T;
  double min_abs() const;
};
CriticalityIndicators uvst(const PolygonParams& prm);

struct PhaseBoundaries {
  double gamma1 = 0.0;
  double gamma2 = 0.0;  // +inf when alpha == beta
};
PhaseBoundaries phase_boundaries(double alpha, double beta);

enum class Phase {
  Supercritical,
  SubcriticalR1,  // gamma < gamma1, alpha beta < 1
  SubcriticalR2,  // gamma < gamma1, alpha beta > 1
  SubcriticalR3,  // gamma > gamma2, alpha < beta
  SubcriticalR4,  // gamma > gamma2, alpha > beta
  Critical
};

enum class ZeroFactor { None, U, V, S, T };

struct PhaseVerdict {
  Phase phase = Phase::Supercritical;
  ZeroFactor zero_factor = ZeroFactor::None;
  CriticalityIndicators indicators{};
  PhaseBoundaries boundaries{};
};

// Tolerance is relative to 1 + alpha beta + beta gamma + gamma alpha.
PhaseVerdict classify(const PolygonParams& prm, double tol = 1e-9);

const char* phase_name(Phase p);

// Order parameter invariance orbit: the identity and the three
// two-reciprocal maps.
std::array<PolygonParams, 4> symmetry_orbit(const PolygonParams& prm);

enum class OneTwoCase {
  ImaginaryInside,   // couplings strictly inside the triangle, |eps_max| < 1
  ImaginaryUnit,     // quadratic boundary, |eps_max| = 1
  ImaginaryOutside,  // inside the triangle, |eps_max| > 1
  Boundary,          // degenerate a = b + c, weights 0 / infinity
  Real               // outside the triangle inequality, real weights
};

struct OneTwoMap {
  double A = 0.0, B = 0.0, C = 0.0;
  // Signed squared half-edge weights in input order; infinite on the
  // Boundary case.
  double alpha2 = 0.0, beta2 = 0.0, gamma2 = 0.0;
  OneTwoCase kind = OneTwoCase::Real;
  std::array<int, 3> sorted{0, 1, 2};  // input indices, weakly decreasing
};

OneTwoMap from_one_two(const OneTwoParams& prm);

struct IsingCouplings {
  double Ja, Jb, Jc;
  double indicator;  // alpha beta + beta gamma + gamma alpha - 1
};
IsingCouplings ising_couplings(const PolygonParams& prm);

struct TorusMin {
  double value = 0.0;
  double theta1 = 0.0, theta2 = 0.0;
  std::complex<double> z{1, 0}, w{1, 0};
};
// Minimum over an even grid x grid of torus angles; the grid contains
// (+-1, +-1) exactly.
TorusMin torus_min(const LaurentPoly2& poly, int grid);

}  // namespace hexpoly
