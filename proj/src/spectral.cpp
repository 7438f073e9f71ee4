#include "hexpoly/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hexpoly {

namespace {

void check_positive(const PolygonParams& prm) {
  if (!(prm.alpha > 0) || !(prm.beta > 0) || !(prm.gamma > 0))
    throw std::invalid_argument("polygon weights must be positive");
}

}  // namespace

std::complex<double> LaurentPoly2::eval(std::complex<double> z,
                                        std::complex<double> w) const {
  return c00 + cw * (w + 1.0 / w) + cz * (z + 1.0 / z) + czw * (z / w + w / z);
}

double LaurentPoly2::eval_angles(double t1, double t2) const {
  return c00 + 2 * cw * std::cos(t2) + 2 * cz * std::cos(t1) +
         2 * czw * std::cos(t1 - t2);
}

LaurentPoly2 char_poly_closed(double A, double B, double C) {
  double A2 = A * A, B2 = B * B, C2 = C * C;
  LaurentPoly2 p;
  p.c00 = 1 + A2 * A2 + B2 * B2 + C2 * C2;
  p.cw = A2 * C2 - B2;
  p.cz = A2 * B2 - C2;
  p.czw = B2 * C2 - A2;
  return p;
}

LaurentPoly2 char_poly_from_polygon(const PolygonParams& prm) {
  check_positive(prm);
  double a = prm.alpha, b = prm.beta, g = prm.gamma;
  LaurentPoly2 p;
  p.c00 = 1 + a * a * b * b + a * a * g * g + b * b * g * g;
  p.cw = a * g * (b * b - 1);
  p.cz = a * b * (g * g - 1);
  p.czw = b * g * (a * a - 1);
  return p;
}

double CriticalityIndicators::min_abs() const {
  return std::min(std::min(std::fabs(U), std::fabs(V)),
                  std::min(std::fabs(S), std::fabs(T)));
}

CriticalityIndicators uvst(const PolygonParams& prm) {
  check_positive(prm);
  double ab = prm.alpha * prm.beta;
  double bg = prm.beta * prm.gamma;
  double ga = prm.gamma * prm.alpha;
  return {ab + bg + ga - 1, -ab + bg + ga + 1, ab - bg + ga + 1,
          ab + bg - ga + 1};
}

PhaseBoundaries phase_boundaries(double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0))
    throw std::invalid_argument("weights must be positive");
  PhaseBoundaries b;
  b.gamma1 = std::fabs(1 - alpha * beta) / (alpha + beta);
  b.gamma2 = alpha == beta
                 ? std::numeric_limits<double>::infinity()
                 : std::fabs(1 + alpha * beta) / std::fabs(alpha - beta);
  return b;
}

PhaseVerdict classify(const PolygonParams& prm, double tol) {
  check_positive(prm);
  PhaseVerdict v;
  v.indicators = uvst(prm);
  v.boundaries = phase_boundaries(prm.alpha, prm.beta);
  double scale = 1 + prm.alpha * prm.beta + prm.beta * prm.gamma +
                 prm.gamma * prm.alpha;
  double mn = v.indicators.min_abs();
  if (mn <= tol * scale) {
    v.phase = Phase::Critical;
    double au = std::fabs(v.indicators.U), av = std::fabs(v.indicators.V);
    double as = std::fabs(v.indicators.S), at = std::fabs(v.indicators.T);
    if (mn == au) v.zero_factor = ZeroFactor::U;
    else if (mn == av) v.zero_factor = ZeroFactor::V;
    else if (mn == as) v.zero_factor = ZeroFactor::S;
    else v.zero_factor = ZeroFactor::T;
    return v;
  }
  if (prm.gamma > v.boundaries.gamma1 && prm.gamma < v.boundaries.gamma2) {
    v.phase = Phase::Supercritical;
  } else if (prm.gamma < v.boundaries.gamma1) {
    v.phase = prm.alpha * prm.beta < 1 ? Phase::SubcriticalR1
                                       : Phase::SubcriticalR2;
  } else {
    v.phase = prm.alpha < prm.beta ? Phase::SubcriticalR3
                                   : Phase::SubcriticalR4;
  }
  return v;
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Supercritical: return "supercritical";
    case Phase::SubcriticalR1: return "subcritical_R1";
    case Phase::SubcriticalR2: return "subcritical_R2";
    case Phase::SubcriticalR3: return "subcritical_R3";
    case Phase::SubcriticalR4: return "subcritical_R4";
    case Phase::Critical: return "critical";
  }
  return "?";
}

std::array<PolygonParams, 4> symmetry_orbit(const PolygonParams& prm) {
  check_positive(prm);
  double a = prm.alpha, b = prm.beta, g = prm.gamma;
  return {PolygonParams{a, b, g}, PolygonParams{a, 1 / b, 1 / g},
          PolygonParams{1 / a, b, 1 / g}, PolygonParams{1 / a, 1 / b, g}};
}

OneTwoMap from_one_two(const OneTwoParams& prm) {
  if (!(prm.a >= 0) || !(prm.b >= 0) || !(prm.c >= 0))
    throw std::invalid_argument("couplings must be nonnegative");
  double s = prm.a + prm.b + prm.c;
  if (!(s > 0)) throw std::invalid_argument("couplings must not all vanish");

  OneTwoMap m;
  m.A = (prm.a - prm.b - prm.c) / s;
  m.B = (prm.b - prm.a - prm.c) / s;
  m.C = (prm.c - prm.a - prm.b) / s;
  m.alpha2 = m.B * m.C / m.A;
  m.beta2 = m.A * m.C / m.B;
  m.gamma2 = m.A * m.B / m.C;

  const double vals[3] = {prm.a, prm.b, prm.c};
  m.sorted = {0, 1, 2};
  std::stable_sort(m.sorted.begin(), m.sorted.end(),
                   [&](int i, int j) { return vals[i] > vals[j]; });
  double hi = vals[m.sorted[0]], mid = vals[m.sorted[1]], lo = vals[m.sorted[2]];

  if (hi == mid + lo) {
    m.kind = OneTwoCase::Boundary;
  } else if (hi > mid + lo) {
    m.kind = OneTwoCase::Real;
  } else {
    double d = hi * hi - mid * mid - lo * lo;
    m.kind = d < 0   ? OneTwoCase::ImaginaryInside
             : d > 0 ? OneTwoCase::ImaginaryOutside
                     : OneTwoCase::ImaginaryUnit;
  }
  return m;
}

IsingCouplings ising_couplings(const PolygonParams& prm) {
  if (!(prm.alpha > 0) || !(prm.beta > 0) || !(prm.gamma > 0) ||
      prm.alpha >= 1 || prm.beta >= 1 || prm.gamma >= 1)
    throw std::invalid_argument("weights must lie in (0, 1)");
  IsingCouplings c;
  c.Ja = std::atanh(std::sqrt(prm.alpha));
  c.Jb = std::atanh(std::sqrt(prm.beta));
  c.Jc = std::atanh(std::sqrt(prm.gamma));
  c.indicator = prm.alpha * prm.beta + prm.beta * prm.gamma +
                prm.gamma * prm.alpha - 1;
  return c;
}

TorusMin torus_min(const LaurentPoly2& poly, int grid) {
  if (grid < 4 || grid % 2 != 0)
    throw std::invalid_argument("grid must be even and >= 4");
  TorusMin best;
  best.value = std::numeric_limits<double>::infinity();
  const double step = 2 * std::numbers::pi / grid;
  for (int j = 0; j < grid; ++j) {
    double t1 = j * step;
    for (int k = 0; k < grid; ++k) {
      double t2 = k * step;
      double v = poly.eval_angles(t1, t2);
      if (v < best.value) {
        best.value = v;
        best.theta1 = t1;
        best.theta2 = t2;
      }
    }
  }
  best.z = {std::cos(best.theta1), std::sin(best.theta1)};
  best.w = {std::cos(best.theta2), std::sin(best.theta2)};
  // Snap the reported argmin onto exact +-1 at the half-turn nodes.
  if (best.theta1 == 0) best.z = {1, 0};
  if (best.theta2 == 0) best.w = {1, 0};
  if (std::fabs(best.theta1 - std::numbers::pi) < 1e-15) best.z = {-1, 0};
  if (std::fabs(best.theta2 - std::numbers::pi) < 1e-15) best.w = {-1, 0};
  return best;
}

}  // namespace hexpoly
