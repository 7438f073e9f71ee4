#include "hexpoly/limits.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "threads.hpp"

namespace hexpoly {

namespace {

using Mat12 = Eigen::Matrix<std::complex<double>, 12, 12>;

void check_grid(int grid) {
  if (grid < 64 || (grid & (grid - 1)) != 0)
    throw std::invalid_argument("grid must be a power of two >= 64");
}

void require_off_critical(const PolygonParams& prm) {
  if (classify(prm).phase == Phase::Critical)
    throw std::invalid_argument(
        "spectral curve touches the unit torus (critical parameters)");
}

// Torus quadrature of the one-domain block inverse against z^dq w^-dp, one
// sweep for all requested offsets.  The kernel follows the Bloch
// diagonalization of the periodic assembly: the z power pairs with the tau2
// (q) offset, the w power with the negated tau1 (p) offset.
std::vector<Mat12> fourier_sweep(const PolygonParams& prm, int grid,
                                 const std::vector<std::pair<int, int>>& offsets) {
  check_grid(grid);
  HalfEdgeWeights eps = prm.eps();
  const double step = 2 * std::numbers::pi / grid;
  const std::size_t no = offsets.size();

  std::vector<std::vector<Mat12>> row_acc(
      static_cast<std::size_t>(grid), std::vector<Mat12>(no, Mat12::Zero()));
  parallel_for_index(grid, [&](int j) {
    double t1 = j * step;
    std::complex<double> z = std::polar(1.0, t1);
    std::vector<Mat12>& acc = row_acc[static_cast<std::size_t>(j)];
    for (int k = 0; k < grid; ++k) {
      double t2 = k * step;
      std::complex<double> w = std::polar(1.0, t2);
      Mat12 block = assemble_K1_aug(eps, z, w);
      Mat12 inv = block.partialPivLu().inverse();
      for (std::size_t o = 0; o < no; ++o) {
        auto [dp, dq] = offsets[o];
        std::complex<double> coeff = std::polar(1.0, dq * t1 - dp * t2);
        acc[o] += coeff * inv;
      }
    }
  });

  std::vector<Mat12> total(no, Mat12::Zero());
  for (int j = 0; j < grid; ++j)
    for (std::size_t o = 0; o < no; ++o)
      total[o] += row_acc[static_cast<std::size_t>(j)][o];
  double norm = 1.0 / (static_cast<double>(grid) * grid);
  for (auto& m : total) m *= norm;
  return total;
}

void check_label(int label) {
  if (label < 0 || label >= 12) throw std::invalid_argument("bad vertex label");
}

constexpr int kPathOrder[8] = {kA2, kA1, kA4, kA3, kB2, kB1, kB4, kB3};

}  // namespace

std::complex<double> fourier_kinv(const PolygonParams& prm, int dp, int dq,
                                  int row_label, int col_label, int grid) {
  check_label(row_label);
  check_label(col_label);
  require_off_critical(prm);
  auto res = fourier_sweep(prm, grid, {{dp, dq}});
  return res[0](row_label, col_label);
}

FourierKinvTable::FourierKinvTable(const PolygonParams& prm, int max_abs_dp,
                                   int max_abs_dq, int grid)
    : max_dp_(max_abs_dp), max_dq_(max_abs_dq), grid_(grid) {
  if (max_abs_dp < 0 || max_abs_dq < 0)
    throw std::invalid_argument("offset ranges must be nonnegative");
  require_off_critical(prm);
  std::vector<std::pair<int, int>> offsets;
  for (int dp = -max_dp_; dp <= max_dp_; ++dp)
    for (int dq = -max_dq_; dq <= max_dq_; ++dq) offsets.emplace_back(dp, dq);
  auto res = fourier_sweep(prm, grid, offsets);
  data_.resize(offsets.size() * 144);
  for (std::size_t o = 0; o < offsets.size(); ++o) {
    for (int r = 0; r < 12; ++r) {
      for (int c = 0; c < 12; ++c) {
        std::complex<double> v = res[o](r, c);
        max_imag_ = std::max(max_imag_, std::fabs(v.imag()));
        data_[o * 144 + static_cast<std::size_t>(r) * 12 +
              static_cast<std::size_t>(c)] = v.real();
      }
    }
  }
}

double FourierKinvTable::entry(int dp, int dq, int row_label, int col_label) const {
  check_label(row_label);
  check_label(col_label);
  if (std::abs(dp) > max_dp_ || std::abs(dq) > max_dq_)
    throw std::out_of_range("offset outside the tabulated range");
  std::size_t o = static_cast<std::size_t>(dp + max_dp_) *
                      static_cast<std::size_t>(2 * max_dq_ + 1) +
                  static_cast<std::size_t>(dq + max_dq_);
  return data_[o * 144 + static_cast<std::size_t>(row_label) * 12 +
               static_cast<std::size_t>(col_label)];
}

PathPerturbation build_X(const CorrelationPath& path, const HalfEdgeWeights& eps) {
  if (path.k < 1) throw std::invalid_argument("empty path");
  PathPerturbation x;
  x.lambda_a = eps.eps_a - 1 / eps.eps_a;
  x.lambda_b = eps.eps_b - 1 / eps.eps_b;
  const int dim = 8 * path.k;
  x.matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < path.k; ++j) {
    int o = 8 * j;
    // (a2,a1) and (a4,a3) blocks with +lambda_a, (b2,b1) and (b4,b3) with
    // the flipped sign.
    x.matrix(o + 0, o + 1) = x.lambda_a;
    x.matrix(o + 1, o + 0) = -x.lambda_a;
    x.matrix(o + 2, o + 3) = x.lambda_a;
    x.matrix(o + 3, o + 2) = -x.lambda_a;
    x.matrix(o + 4, o + 5) = -x.lambda_b;
    x.matrix(o + 5, o + 4) = x.lambda_b;
    x.matrix(o + 6, o + 7) = -x.lambda_b;
    x.matrix(o + 7, o + 6) = x.lambda_b;
  }
  x.det_x = std::pow(x.lambda_a * x.lambda_a * x.lambda_b * x.lambda_b,
                     2 * path.k);
  return x;
}

namespace {

// K_sub: the infinite-volume inverse restricted to the path vertices, blocks
// ordered along the walk; consecutive domains differ by dq = -1.
Eigen::MatrixXd path_kinv(int sep, const FourierKinvTable& table) {
  const int dim = 8 * sep;
  Eigen::MatrixXd ksub(dim, dim);
  for (int j = 0; j < sep; ++j)
    for (int jp = 0; jp < sep; ++jp)
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          ksub(8 * j + r, 8 * jp + c) =
              table.entry(0, j - jp, kPathOrder[r], kPathOrder[c]);
  return ksub;
}

CorrelationPath synthetic_path(int sep) {
  // Only the period count matters for the infinite-volume formulas.
  TorusHexLattice lat = build_hex_torus(sep + 1);
  return build_path(lat, lat.edge_index(0, sep, EdgeKind::NorthWest),
                    lat.edge_index(0, 0, EdgeKind::NorthWest));
}

}  // namespace

double m_inf_squared(int sep, const PolygonParams& prm,
                     const FourierKinvTable& table) {
  if (sep < 1) throw std::invalid_argument("separation must be >= 1");
  require_off_critical(prm);
  CorrelationPath path = synthetic_path(sep);
  PathPerturbation x = build_X(path, prm.eps());
  Eigen::MatrixXd ksub = path_kinv(sep, table);
  const int dim = 8 * sep;
  Eigen::MatrixXd m = x.matrix * ksub + Eigen::MatrixXd::Identity(dim, dim);
  double det = Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
  return det * std::pow(prm.alpha * prm.beta, -2 * sep);
}

double m_inf_squared(int sep, const PolygonParams& prm, int grid) {
  if (sep < 1) throw std::invalid_argument("separation must be >= 1");
  FourierKinvTable table(prm, 0, sep - 1, grid);
  return m_inf_squared(sep, prm, table);
}

LambdaEstimate lambda_estimate(const PolygonParams& prm, int max_sep, int grid) {
  if (max_sep < 1) throw std::invalid_argument("max separation must be >= 1");
  PhaseVerdict verdict = classify(prm);
  if (verdict.phase == Phase::Critical)
    throw std::invalid_argument("long-range order is undefined at criticality");

  LambdaEstimate est;
  est.phase = verdict.phase;
  FourierKinvTable table(prm, 0, max_sep - 1, grid);
  double prev = 0.0;
  for (int sep = 1; sep <= max_sep; ++sep) {
    double m2 = m_inf_squared(sep, prm, table);
    DecayRow row;
    row.sep = sep;
    row.m2 = m2;
    row.delta_rel = sep == 1 ? std::numeric_limits<double>::quiet_NaN()
                             : std::fabs(m2 - prev) /
                                   std::max(std::fabs(m2), 1e-300);
    est.table.push_back(row);
    prev = m2;
  }

  const DecayRow& last = est.table.back();
  if (verdict.phase == Phase::Supercritical) {
    est.converged = last.delta_rel < 1e-6;
    est.lambda = last.m2;
  } else {
    est.converged = std::fabs(last.m2) < 1e-8;
    est.lambda = est.converged ? 0.0 : last.m2;
  }
  return est;
}

Eigen::MatrixXcd toeplitz_symbol(const PolygonParams& prm,
                                 std::complex<double> zeta, int grid) {
  check_grid(grid);
  require_off_critical(prm);
  if (std::fabs(std::abs(zeta) - 1.0) > 1e-9)
    throw std::invalid_argument("zeta must lie on the unit circle");
  HalfEdgeWeights eps = prm.eps();
  const double step = 2 * std::numbers::pi / grid;
  Mat12 acc = Mat12::Zero();
  for (int k = 0; k < grid; ++k) {
    std::complex<double> w = std::polar(1.0, k * step);
    Mat12 block = assemble_K1_aug(eps, zeta, w);
    acc += block.partialPivLu().inverse();
  }
  acc /= static_cast<double>(grid);

  static constexpr int kRows[8] = {kA2, kA1, kA4, kA3, kB2, kB1, kB4, kB3};
  static constexpr int kCols[8] = {kA1, kA2, kA3, kA4, kB1, kB2, kB3, kB4};
  static constexpr double kSigns[8] = {1, -1, 1, -1, -1, 1, -1, 1};
  const double la = 1 - 1 / (eps.eps_a * eps.eps_a);
  const double lb = 1 - 1 / (eps.eps_b * eps.eps_b);

  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    double lambda = i < 4 ? la : lb;
    double diag = i < 4 ? 1 / eps.eps_a : 1 / eps.eps_b;
    for (int j = 0; j < 8; ++j)
      psi(i, j) = kSigns[i] * lambda * acc(kRows[i], kCols[j]);
    psi(i, i) += diag;
  }
  return psi;
}

}  // namespace hexpoly
