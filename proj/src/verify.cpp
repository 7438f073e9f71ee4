#include "hexpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "hexpoly/kasteleyn.hpp"
#include "hexpoly/lattice.hpp"
#include "hexpoly/limits.hpp"
#include "hexpoly/oracle.hpp"
#include "hexpoly/skewlinalg.hpp"
#include "hexpoly/spectral.hpp"

namespace hexpoly {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// Tracks the worst error seen against a fixed tolerance.
struct ErrorTracker {
  double worst = 0.0;
  bool ok = true;
  void push(double err, double tol) {
    worst = std::max(worst, err);
    if (!(err <= tol)) ok = false;
  }
};

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max({std::fabs(want), std::fabs(got), 1e-300});
}

double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max({std::abs(want), std::abs(got), 1e-300});
}

// Random triple bounded away from the critical surfaces; the suite compares
// exact finite-n quantities, so only near-singular denominators are excluded.
PolygonParams random_off_critical(std::mt19937& rng, double lo, double hi,
                                  double margin) {
  std::uniform_real_distribution<double> dist(lo, hi);
  for (;;) {
    PolygonParams prm{dist(rng), dist(rng), dist(rng)};
    double scale = 1 + prm.alpha * prm.beta + prm.beta * prm.gamma +
                   prm.gamma * prm.alpha;
    if (uvst(prm).min_abs() > margin * scale) return prm;
  }
}

CheckResult check_orientation() {
  CheckResult res{"A0_orientation"};
  auto start = Clock::now();
  bool ok = true;
  std::size_t faces = 0;
  for (int n = 1; n <= 3; ++n) {
    TorusHexLattice lat = build_hex_torus(n);
    FisherGraph fg = build_fisher(lat);
    ClockwiseOddReport fr = verify_clockwise_odd(fg);
    AugFisherGraph ag = build_aug_fisher(fg, HalfEdgeWeights{1.3, 0.7, 1.1});
    ClockwiseOddReport ar = verify_clockwise_odd(ag);
    ok = ok && fr.ok && ar.ok;
    faces += fr.face_count + ar.face_count;
  }
  res.passed = ok;
  res.seconds = elapsed(start);
  res.detail = "clockwise-odd faces audited: " + std::to_string(faces) +
               " over n=1..3";
  return res;
}

CheckResult check_pfaffian() {
  CheckResult res{"A1_pfaffian_vs_determinant"};
  auto start = Clock::now();
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> half_dim(1, 30);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  ErrorTracker track;
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 * half_dim(rng);
    Eigen::MatrixXd raw(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) raw(i, j) = entry(rng);
    Eigen::MatrixXd skew = raw - raw.transpose();
    double pf = pfaffian(SkewMatrix(skew));
    double det = det_complex(skew.cast<std::complex<double>>()).real();
    track.push(rel_err(pf * pf, det), 1e-10);
  }
  res.seconds = elapsed(start);
  res.passed = track.ok && res.seconds < 1.0;
  res.detail = fmt("max rel err %.2e (tol 1e-10), %.3f s (limit 1 s)",
                   track.worst, res.seconds);
  return res;
}

CheckResult check_partition(bool full) {
  CheckResult res{"A2_partition_function_vs_enumeration"};
  auto start = Clock::now();
  std::mt19937 rng(20240602);
  std::uniform_real_distribution<double> dist(0.2, 3.0);
  ErrorTracker track;
  int compared = 0;
  for (int n : {2, 3}) {
    if (n == 3 && !full) continue;
    TorusHexLattice lat = build_hex_torus(n);
    int trials = n == 2 ? 50 : 10;
    for (int t = 0; t < trials; ++t) {
      PolygonParams prm{dist(rng), dist(rng), dist(rng)};
      double want = brute_Z(lat, prm);
      double got = partition_Z(n, prm).value;
      track.push(rel_err(got, want), 1e-8);
      ++compared;
    }
  }
  res.seconds = elapsed(start);
  res.passed = track.ok && res.seconds < 30.0;
  res.detail = fmt("max rel err %.2e (tol 1e-8), %.3f s (limit 30 s)",
                   track.worst, res.seconds) +
               (full ? "" : "; n=3 sweep skipped at fast level");
  res.detail += ", " + std::to_string(compared) + " triples";
  return res;
}

CheckResult check_order_parameter() {
  CheckResult res{"A3_order_parameter_vs_enumeration"};
  auto start = Clock::now();
  std::mt19937 rng(20240603);
  TorusHexLattice lat = build_hex_torus(2);
  int e = lat.edge_index(0, 1, EdgeKind::NorthWest);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  CorrelationPath path = build_path(lat, e, f);
  ErrorTracker track;
  for (int t = 0; t < 20; ++t) {
    PolygonParams prm = random_off_critical(rng, 0.2, 3.0, 0.05);
    double want = brute_M(lat, path, prm);
    double got = correlation_M(2, e, f, prm).value;
    track.push(rel_err(got, want), 1e-8);
  }
  res.seconds = elapsed(start);
  res.passed = track.ok;
  res.detail = fmt("max rel err %.2e (tol 1e-8), 20 triples", track.worst);
  return res;
}

CheckResult check_dimer_correspondence() {
  CheckResult res{"A4_dimer_correspondence"};
  auto start = Clock::now();
  std::mt19937 rng(20240604);
  std::uniform_real_distribution<double> dist(0.2, 3.0);
  ErrorTracker track;
  for (int n : {1, 2}) {
    TorusHexLattice lat = build_hex_torus(n);
    FisherGraph fg = build_fisher(lat);
    for (int t = 0; t < 10; ++t) {
      PolygonParams prm{dist(rng), dist(rng), dist(rng)};
      DimerWeights wts = DimerWeights::from_polygon(prm);
      double want = brute_Z(lat, prm);
      double got = brute_dimer_Z(fg, wts.A, wts.B, wts.C);
      track.push(rel_err(got, want), 1e-10);
    }
  }
  res.seconds = elapsed(start);
  res.passed = track.ok;
  res.detail = fmt("max rel err %.2e (tol 1e-10), n=1,2", track.worst);
  return res;
}

CheckResult check_one_two_identity() {
  CheckResult res{"A5_one_two_model_identity"};
  auto start = Clock::now();
  TorusHexLattice lat = build_hex_torus(2);
  int e = lat.edge_index(0, 1, EdgeKind::NorthWest);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  CorrelationPath path = build_path(lat, e, f);
  OneTwoParams couplings{4.0, 2.0, 1.0};
  OneTwoMap map = from_one_two(couplings);
  PolygonParams prm{map.alpha2, map.beta2, map.gamma2};
  double want = brute_M(lat, path, prm);
  double got = brute_one_two_corr(lat, couplings, e, f);
  double err = rel_err(got, want);
  res.seconds = elapsed(start);
  res.passed = err <= 1e-8 && rel_err(map.alpha2, 15.0 / 7) < 1e-12 &&
               rel_err(map.beta2, 5.0 / 21) < 1e-12 &&
               rel_err(map.gamma2, 3.0 / 35) < 1e-12;
  res.detail = fmt("corr rel err %.2e (tol 1e-8), weights (15/7, 5/21, 3/35)", err);
  return res;
}

CheckResult check_characteristic_polynomial() {
  CheckResult res{"A6_characteristic_polynomial"};
  auto start = Clock::now();
  std::mt19937 rng(20240606);
  std::uniform_real_distribution<double> angle(0.0, 2 * 3.14159265358979323846);
  std::uniform_real_distribution<double> wdist(0.2, 2.0);
  ErrorTracker track;
  for (int t = 0; t < 1000; ++t) {
    double A = wdist(rng), B = wdist(rng), C = wdist(rng);
    std::complex<double> z = std::polar(1.0, angle(rng));
    std::complex<double> w = std::polar(1.0, angle(rng));
    std::complex<double> det = det_complex(assemble_K1(DimerWeights{A, B, C}, z, w));
    std::complex<double> poly = char_poly_closed(A, B, C).eval(z, w);
    track.push(rel_err(det, poly), 1e-10);
  }
  ErrorTracker corners;
  std::uniform_real_distribution<double> pdist(0.2, 3.0);
  for (int t = 0; t < 50; ++t) {
    PolygonParams prm{pdist(rng), pdist(rng), pdist(rng)};
    LaurentPoly2 poly = char_poly_from_polygon(prm);
    CriticalityIndicators ind = uvst(prm);
    corners.push(rel_err(poly.eval(1, 1), ind.U * ind.U), 1e-10);
    corners.push(rel_err(poly.eval(1, -1), ind.V * ind.V), 1e-10);
    corners.push(rel_err(poly.eval(-1, 1), ind.T * ind.T), 1e-10);
    corners.push(rel_err(poly.eval(-1, -1), ind.S * ind.S), 1e-10);
  }
  res.seconds = elapsed(start);
  res.passed = track.ok && corners.ok;
  res.detail = fmt("det vs closed form %.2e, corner factors %.2e (tol 1e-10)",
                   track.worst, corners.worst);
  return res;
}

CheckResult check_augmented_factor() {
  CheckResult res{"A7_augmented_determinant_factor"};
  auto start = Clock::now();
  std::mt19937 rng(20240607);
  std::uniform_real_distribution<double> angle(0.0, 2 * 3.14159265358979323846);
  std::uniform_real_distribution<double> pdist(0.2, 3.0);
  ErrorTracker track;
  for (int t = 0; t < 1000; ++t) {
    PolygonParams prm{pdist(rng), pdist(rng), pdist(rng)};
    HalfEdgeWeights eps = prm.eps();
    std::complex<double> z = std::polar(1.0, angle(rng));
    std::complex<double> w = std::polar(1.0, angle(rng));
    std::complex<double> det = det_complex(assemble_K1_aug(eps, z, w));
    double factor = std::pow(eps.eps_a * eps.eps_b * eps.eps_c, -4.0);
    std::complex<double> want = factor * char_poly_from_polygon(prm).eval(z, w);
    track.push(rel_err(det, want), 1e-9);
  }
  res.seconds = elapsed(start);
  res.passed = track.ok;
  res.detail = fmt("max rel err %.2e (tol 1e-9), 1000 torus points", track.worst);
  return res;
}

CheckResult check_criticality_detection() {
  CheckResult res{"A8_criticality_detection"};
  auto start = Clock::now();
  double r = 1.0 / std::sqrt(3.0);
  TorusMin crit = torus_min(char_poly_from_polygon({r, r, r}), 512);
  bool crit_ok = crit.value <= 1e-6 && std::abs(crit.z - 1.0) < 1e-12 &&
                 std::abs(crit.w - 1.0) < 1e-12;
  TorusMin off = torus_min(char_poly_from_polygon({3.0 / 7, 3.0 / 7, 25.0 / 21}), 512);
  bool off_ok = off.value > 1e-3;
  res.seconds = elapsed(start);
  res.passed = crit_ok && off_ok && res.seconds < 10.0;
  res.detail = fmt("critical min %.2e at (1,1), off-critical min %.2e",
                   crit.value, off.value) +
               fmt(", %.3f s (limit 10 s)", res.seconds);
  return res;
}

CheckResult check_reciprocal_symmetry() {
  CheckResult res{"A9_reciprocal_symmetry"};
  auto start = Clock::now();
  std::mt19937 rng(20240609);
  TorusHexLattice lat = build_hex_torus(2);
  int e = lat.edge_index(0, 1, EdgeKind::NorthWest);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  ErrorTracker track;
  int used = 0;
  while (used < 10) {
    PolygonParams prm = random_off_critical(rng, 0.2, 3.0, 0.05);
    auto orbit = symmetry_orbit(prm);
    bool clean = true;
    for (const PolygonParams& q : orbit) {
      double scale = 1 + q.alpha * q.beta + q.beta * q.gamma + q.gamma * q.alpha;
      if (uvst(q).min_abs() <= 0.02 * scale) clean = false;
    }
    if (!clean) continue;
    ++used;
    double base = correlation_M(2, e, f, orbit[0]).value;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      double mapped = correlation_M(2, e, f, orbit[i]).value;
      track.push(rel_err(mapped, base), 1e-8);
    }
  }
  res.seconds = elapsed(start);
  res.passed = track.ok;
  res.detail = fmt("max rel err %.2e (tol 1e-8), 10 orbits x 3 maps", track.worst);
  return res;
}

CheckResult check_phase_behavior(bool full) {
  CheckResult res{"A10_phase_behavior"};
  auto start = Clock::now();
  PolygonParams sub{0.2, 0.2, 0.2};
  PolygonParams sup{3.0 / 7, 3.0 / 7, 25.0 / 21};

  LambdaEstimate dec = lambda_estimate(sub, 12, 256);
  bool decay_ok = std::fabs(dec.table.back().m2) < 1e-8 && dec.converged &&
                  dec.lambda == 0.0;

  LambdaEstimate plat = lambda_estimate(sup, 12, 256);
  bool plateau_ok = plat.lambda > 0.0 && plat.table.back().delta_rel < 1e-6 &&
                    plat.converged;

  int nfin = full ? 16 : 8;
  double worst_gap = 0.0;
  bool finite_ok = true;
  for (const PolygonParams& prm : {sub, sup}) {
    FourierKinvTable table(prm, 0, 3, 256);
    for (int sep = 1; sep <= 4; ++sep) {
      double m2n = correlation_M(nfin, sep, prm).value_squared;
      double gap = std::fabs(m2n - m_inf_squared(sep, prm, table));
      worst_gap = std::max(worst_gap, gap);
      if (!(gap < 1e-3)) finite_ok = false;
    }
  }

  res.seconds = elapsed(start);
  res.passed = decay_ok && plateau_ok && finite_ok && res.seconds < 300.0;
  res.detail = fmt("subcritical tail %.2e (tol 1e-8), plateau delta %.2e (tol 1e-6)",
                   std::fabs(dec.table.back().m2), plat.table.back().delta_rel) +
               fmt(", n=%.0f gap %.2e (tol 1e-3)", double(nfin), worst_gap) +
               fmt(", %.1f s (limit 300 s)", res.seconds);
  return res;
}

CheckResult check_quadrature_stability(bool full) {
  CheckResult res{"A11_quadrature_stability"};
  auto start = Clock::now();
  if (!full) {
    res.passed = true;
    res.detail = "skipped at fast level (512-grid integrals)";
    return res;
  }
  std::array<PolygonParams, 3> points{
      PolygonParams{0.2, 0.2, 0.2},
      PolygonParams{3.0 / 7, 3.0 / 7, 25.0 / 21},
      PolygonParams{2.0, 1.0, 0.6}};
  ErrorTracker track;
  bool margins_ok = true;
  for (const PolygonParams& prm : points) {
    double scale = 1 + prm.alpha * prm.beta + prm.beta * prm.gamma +
                   prm.gamma * prm.alpha;
    if (uvst(prm).min_abs() <= 0.01 * scale) margins_ok = false;
    FourierKinvTable coarse(prm, 1, 2, 256);
    FourierKinvTable fine(prm, 1, 2, 512);
    for (int dp = -1; dp <= 1; ++dp)
      for (int dq = -2; dq <= 2; ++dq)
        for (int r = 0; r < 12; ++r)
          for (int c = 0; c < 12; ++c)
            track.push(std::fabs(coarse.entry(dp, dq, r, c) -
                                 fine.entry(dp, dq, r, c)),
                       1e-10);
  }
  res.seconds = elapsed(start);
  res.passed = track.ok && margins_ok;
  res.detail = fmt("max 256 vs 512 drift %.2e (tol 1e-10), 3 parameter points",
                   track.worst);
  return res;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(bool full, const CheckLogger& log) {
  VerifyReport report;
  auto push = [&](CheckResult res) {
    if (log) log(res);
    report.checks.push_back(std::move(res));
  };
  push(check_orientation());
  push(check_pfaffian());
  push(check_partition(full));
  push(check_order_parameter());
  push(check_dimer_correspondence());
  push(check_one_two_identity());
  push(check_characteristic_polynomial());
  push(check_augmented_factor());
  push(check_criticality_detection());
  push(check_reciprocal_symmetry());
  push(check_phase_behavior(full));
  push(check_quadrature_stability(full));
  return report;
}

std::string format_check_line(const CheckResult& check) {
  std::string line = check.passed ? "[PASS] " : "[FAIL] ";
  line += check.name;
  if (!check.detail.empty()) line += ": " + check.detail;
  return line;
}

}  // namespace hexpoly
