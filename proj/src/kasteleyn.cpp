#include "hexpoly/kasteleyn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "threads.hpp"

namespace hexpoly {

namespace {

std::complex<double> crossing_phase(Crossing c, std::complex<double> z,
                                    std::complex<double> w) {
  switch (c) {
    case Crossing::None: return {1, 0};
    case Crossing::GammaXPos: return z;
    case Crossing::GammaXNeg: return 1.0 / z;
    case Crossing::GammaYPos: return w;
    case Crossing::GammaYNeg: return 1.0 / w;
  }
  return {1, 0};
}

double crossing_phase_real(Crossing c, int zs, int ws) {
  switch (c) {
    case Crossing::None: return 1.0;
    case Crossing::GammaXPos:
    case Crossing::GammaXNeg: return zs;
    case Crossing::GammaYPos:
    case Crossing::GammaYNeg: return ws;
  }
  return 1.0;
}

double fisher_weight(const DecoratedEdge& e, const DimerWeights& wts) {
  switch (e.tri_kind) {
    case FisherEdgeKind::TriVertical: return wts.A;
    case FisherEdgeKind::TriNorthEast: return wts.B;
    case FisherEdgeKind::TriNorthWest: return wts.C;
    case FisherEdgeKind::Link: return 1.0;
  }
  return 1.0;
}

// Four-Pfaffian combination coefficients in kSectors order, calibrated
// against the enumeration oracle on n = 1..4 and frozen.  With the fixed
// fundamental-domain orientation the pattern is independent of the parity
// of n: the (1,1) sector Pfaffian enters with a flipped sign.
constexpr std::array<double, 4> kCombo{-1, 1, 1, 1};

const std::array<double, 4>& combo_coeffs(int) { return kCombo; }

// Real-sector assembly of the augmented graph, z = zs, w = ws in {-1, 1}.
Eigen::MatrixXd assemble_aug_real(const AugFisherGraph& ag, int zs, int ws) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ag.num_vertices(), ag.num_vertices());
  for (const AugEdge& e : ag.edges) {
    double v = e.weight * crossing_phase_real(e.crossing, zs, ws);
    m(e.tail, e.head) += v;
    m(e.head, e.tail) -= v;
  }
  return m;
}

void scale_path_real(Eigen::MatrixXd& m, const AugFisherGraph& ag,
                     const CorrelationPath& path) {
  for (int id : path.aug_edges(ag)) {
    const AugEdge& e = ag.edges[static_cast<std::size_t>(id)];
    double eps = ag.eps.eps(e.parent);
    m(e.tail, e.head) *= eps * eps;
    m(e.head, e.tail) *= eps * eps;
  }
}

ScaledValue scaled_pow(double base, int exp) {
  ScaledValue r = ScaledValue::from_double(1.0);
  ScaledValue b = ScaledValue::from_double(base);
  for (int i = 0; i < exp; ++i) r = r.times(b);
  return r;
}

void check_n(int n, int min_n) {
  if (n < min_n) throw std::invalid_argument("torus size too small");
}

}  // namespace

DimerWeights DimerWeights::from_polygon(const PolygonParams& prm) {
  if (!(prm.alpha > 0) || !(prm.beta > 0) || !(prm.gamma > 0))
    throw std::invalid_argument("polygon weights must be positive");
  return {std::sqrt(prm.beta * prm.gamma), std::sqrt(prm.alpha * prm.gamma),
          std::sqrt(prm.alpha * prm.beta)};
}

Eigen::MatrixXcd assemble_K1(const DimerWeights& wts, std::complex<double> z,
                             std::complex<double> w) {
  using cd = std::complex<double>;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6, 6);
  const double A = wts.A, B = wts.B, C = wts.C;
  m(0, 1) = -C; m(0, 2) = B; m(0, 3) = -1;
  m(1, 0) = C; m(1, 2) = -A; m(1, 4) = -1.0 / z;
  m(2, 0) = -B; m(2, 1) = A; m(2, 5) = -1.0 / w;
  m(3, 0) = 1; m(3, 4) = -C; m(3, 5) = B;
  m(4, 1) = z; m(4, 3) = C; m(4, 5) = -A;
  m(5, 2) = w; m(5, 3) = -B; m(5, 4) = A;
  return m;
}

Eigen::MatrixXcd assemble_K1_aug(const HalfEdgeWeights& eps,
                                 std::complex<double> z, std::complex<double> w) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(12, 12);
  const double ia = 1 / eps.eps_a, ib = 1 / eps.eps_b, ic = 1 / eps.eps_c;
  auto put = [&m](int tail, int head, std::complex<double> fwd,
                  std::complex<double> bwd) {
    m(tail, head) = fwd;
    m(head, tail) = -bwd;
  };
  // Triangles.
  put(kA1, kC4, 1, 1); put(kC4, kB4, 1, 1); put(kB4, kA1, 1, 1);
  put(kA4, kC1, 1, 1); put(kC1, kB1, 1, 1); put(kB1, kA4, 1, 1);
  // Horizontal string.
  put(kA2, kA1, ia, ia); put(kA3, kA2, 1, 1); put(kA4, kA3, ia, ia);
  // NorthWest string; the middle third crosses gamma_x.
  put(kB3, kB4, ib, ib); put(kB2, kB3, z, 1.0 / z); put(kB1, kB2, ib, ib);
  // NorthEast string; the middle third crosses gamma_y.
  put(kC3, kC4, ic, ic); put(kC2, kC3, w, 1.0 / w); put(kC1, kC2, ic, ic);
  return m;
}

KasteleynAssembly assemble_Kn(const FisherGraph& fg, const DimerWeights& wts,
                              std::complex<double> z, std::complex<double> w) {
  KasteleynAssembly a;
  a.n = fg.n;
  a.augmented = false;
  a.z = z;
  a.w = w;
  a.matrix = Eigen::MatrixXcd::Zero(fg.num_vertices(), fg.num_vertices());
  for (const DecoratedEdge& e : fg.edges) {
    std::complex<double> phase = crossing_phase(e.crossing, z, w);
    double wt = fisher_weight(e, wts);
    a.matrix(e.tail, e.head) += wt * phase;
    a.matrix(e.head, e.tail) -= wt / phase;
  }
  return a;
}

KasteleynAssembly assemble_Kn(const AugFisherGraph& ag, std::complex<double> z,
                              std::complex<double> w) {
  KasteleynAssembly a;
  a.n = ag.n;
  a.augmented = true;
  a.z = z;
  a.w = w;
  a.matrix = Eigen::MatrixXcd::Zero(ag.num_vertices(), ag.num_vertices());
  for (const AugEdge& e : ag.edges) {
    std::complex<double> phase = crossing_phase(e.crossing, z, w);
    a.matrix(e.tail, e.head) += e.weight * phase;
    a.matrix(e.head, e.tail) -= e.weight / phase;
  }
  return a;
}

KasteleynAssembly modify_for_path(const KasteleynAssembly& assembly,
                                  const AugFisherGraph& ag,
                                  const CorrelationPath& path) {
  if (!assembly.augmented)
    throw std::invalid_argument("path modification needs the augmented assembly");
  if (assembly.n != ag.n) throw std::invalid_argument("size mismatch");
  if (path.k < 1) throw std::invalid_argument("empty path");
  KasteleynAssembly out = assembly;
  for (int id : path.aug_edges(ag)) {
    const AugEdge& e = ag.edges[static_cast<std::size_t>(id)];
    double eps = ag.eps.eps(e.parent);
    out.matrix(e.tail, e.head) *= eps * eps;
    out.matrix(e.head, e.tail) *= eps * eps;
  }
  return out;
}

PartitionResult partition_Z(int n, const PolygonParams& prm) {
  check_n(n, 1);
  TorusHexLattice lat = build_hex_torus(n);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, prm.eps());

  PartitionResult res;
  parallel_for_index(4, [&](int s) {
    Eigen::MatrixXd m = assemble_aug_real(ag, kSectors[static_cast<std::size_t>(s)][0],
                                          kSectors[static_cast<std::size_t>(s)][1]);
    res.sector_pfaffians[static_cast<std::size_t>(s)] = pfaffian_scaled_inplace(m);
  });

  const auto& coeffs = combo_coeffs(n);
  ScaledValue combo = scaled_sum(res.sector_pfaffians.data(), coeffs.data(), 4);
  // Restore the weights dropped by the augmentation: one factor eps_g per
  // half edge, (alpha beta gamma)^(n^2) in total.
  ScaledValue restore = scaled_pow(prm.alpha * prm.beta * prm.gamma, n * n);
  res.scaled = combo.times(0.5).times(restore);
  res.value = res.scaled.to_double();
  return res;
}

CorrelationResult correlation_M(int n, int e, int f, const PolygonParams& prm) {
  check_n(n, 2);
  TorusHexLattice lat = build_hex_torus(n);
  CorrelationPath path = build_path(lat, e, f);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, prm.eps());

  CorrelationResult res;
  res.separation = path.k;
  parallel_for_index(4, [&](int s) {
    Eigen::MatrixXd m = assemble_aug_real(ag, kSectors[static_cast<std::size_t>(s)][0],
                                          kSectors[static_cast<std::size_t>(s)][1]);
    Eigen::MatrixXd mp = m;
    scale_path_real(mp, ag, path);
    res.sector_denominator[static_cast<std::size_t>(s)] = pfaffian_scaled_inplace(m);
    res.sector_numerator[static_cast<std::size_t>(s)] = pfaffian_scaled_inplace(mp);
  });

  const auto& coeffs = combo_coeffs(n);
  ScaledValue num = scaled_sum(res.sector_numerator.data(), coeffs.data(), 4);
  ScaledValue den = scaled_sum(res.sector_denominator.data(), coeffs.data(), 4);

  double max_log = -std::numeric_limits<double>::infinity();
  double min_log = std::numeric_limits<double>::infinity();
  for (const ScaledValue& v : res.sector_denominator) {
    max_log = std::max(max_log, v.log2_abs());
    min_log = std::min(min_log, v.log2_abs());
  }
  const double thresh = std::log2(1e-13);
  if (den.mantissa == 0.0 || den.log2_abs() - max_log < thresh ||
      min_log - max_log < thresh) {
    res.critical_proximity = true;
    res.value = std::numeric_limits<double>::quiet_NaN();
    res.value_squared = std::numeric_limits<double>::quiet_NaN();
    return res;
  }

  // Half-edge weight restoration along the path: (alpha beta)^-k.
  double prefactor = std::pow(prm.alpha * prm.beta, -path.k);
  double ratio = (num.mantissa / den.mantissa) *
                 std::exp2(static_cast<double>(num.exponent - den.exponent));
  res.value = prefactor * ratio;
  res.value_squared = res.value * res.value;
  return res;
}

CorrelationResult correlation_M(int n, int sep, const PolygonParams& prm) {
  check_n(n, 2);
  if (sep < 1 || sep > n - 1)
    throw std::invalid_argument("separation must lie in [1, n-1]");
  TorusHexLattice lat = build_hex_torus(n);
  return correlation_M(n, lat.edge_index(0, sep, EdgeKind::NorthWest),
                       lat.edge_index(0, 0, EdgeKind::NorthWest), prm);
}

}  // namespace hexpoly
