#include "hexpoly/skewlinalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hexpoly {

ScaledValue ScaledValue::from_double(double v) {
  if (v == 0.0) return {};
  int e = 0;
  double m = std::frexp(v, &e);
  return {m, e};
}

ScaledValue ScaledValue::times(double v) const {
  if (mantissa == 0.0 || v == 0.0) return {};
  int e = 0;
  double m = std::frexp(mantissa * v, &e);
  return {m, exponent + e};
}

ScaledValue ScaledValue::times(const ScaledValue& o) const {
  if (mantissa == 0.0 || o.mantissa == 0.0) return {};
  int e = 0;
  double m = std::frexp(mantissa * o.mantissa, &e);
  return {m, exponent + o.exponent + e};
}

double ScaledValue::to_double() const {
  if (mantissa == 0.0) return 0.0;
  if (exponent > 1024) return mantissa > 0 ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
  if (exponent < -1070) return 0.0;
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

double ScaledValue::log2_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

int ScaledValue::sign() const {
  if (mantissa > 0) return 1;
  if (mantissa < 0) return -1;
  return 0;
}

ScaledValue scaled_sum(const ScaledValue* vals, const double* coeffs, int count) {
  long emax = std::numeric_limits<long>::min();
  for (int i = 0; i < count; ++i)
    if (vals[i].mantissa != 0.0 && vals[i].exponent > emax) emax = vals[i].exponent;
  if (emax == std::numeric_limits<long>::min()) return {};
  double acc = 0.0;
  for (int i = 0; i < count; ++i) {
    if (vals[i].mantissa == 0.0) continue;
    long shift = vals[i].exponent - emax;
    if (shift < -1070) continue;
    acc += coeffs[i] * std::ldexp(vals[i].mantissa, static_cast<int>(shift));
  }
  ScaledValue r = ScaledValue::from_double(acc);
  r.exponent += emax;
  return r;
}

SkewMatrix::SkewMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("skew matrix must be square");
  if (m.size() > 0) {
    double scale = m.cwiseAbs().maxCoeff();
    double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
    if (scale > 0 && asym > 1e-12 * scale)
      throw std::invalid_argument("matrix is not antisymmetric");
  }
  m_ = 0.5 * (m - m.transpose());
}

namespace {

// Parlett-Reid elimination: P A P^T = L T L^T with T tridiagonal; the
// Pfaffian is the product of odd superdiagonal entries times the permutation
// sign.  The rank-two Schur update keeps the trailing block skew.
ScaledValue pfaffian_impl(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even dimension");
  if (n == 0) return ScaledValue::from_double(1.0);

  ScaledValue pf = ScaledValue::from_double(1.0);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index rest = n - k - 1;
    Eigen::Index kp;
    double mx = a.col(k).segment(k + 1, rest).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (mx == 0.0) return {};
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = pf.times(-1.0);
    }
    pf = pf.times(a(k, k + 1));
    Eigen::Index m = n - k - 2;
    if (m <= 0) continue;
    // tau = A(k, k+2:) / A(k, k+1); v = A(k+2:, k+1)
    Eigen::VectorXd tau = a.row(k).segment(k + 2, m) / a(k, k + 1);
    Eigen::VectorXd v = a.col(k + 1).segment(k + 2, m);
    // Rank-two skew update, fused per column to stay in one pass.
    for (Eigen::Index j = 0; j < m; ++j) {
      double tj = tau(j), vj = v(j);
      a.col(k + 2 + j).segment(k + 2, m) += vj * tau - tj * v;
    }
  }
  return pf;
}

}  // namespace

double pfaffian(const SkewMatrix& m) {
  Eigen::MatrixXd a = m.matrix();
  return pfaffian_impl(a).to_double();
}

ScaledValue pfaffian_scaled(const SkewMatrix& m) {
  Eigen::MatrixXd a = m.matrix();
  return pfaffian_impl(a);
}

ScaledValue pfaffian_scaled_inplace(Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("skew matrix must be square");
  return pfaffian_impl(m);
}

std::complex<double> det_complex(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant needs a square matrix");
  if (m.rows() == 0) return {1.0, 0.0};
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  return lu.determinant();
}

Eigen::MatrixXcd inverse_complex(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse needs a square matrix");
  if (m.rows() == 0) return m;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  double scale = m.cwiseAbs().maxCoeff();
  double pivot_min = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (scale == 0.0 || pivot_min < 1e-12 * scale)
    throw std::runtime_error("matrix is numerically singular");
  return lu.inverse();
}

}  // namespace hexpoly
