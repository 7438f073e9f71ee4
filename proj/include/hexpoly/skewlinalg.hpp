#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hexpoly {

// value = mantissa * 2^exponent with |mantissa| in [0.5, 1) or zero; keeps
// products of thousands of pivots representable.
struct ScaledValue {
  double mantissa = 0.0;
  long exponent = 0;

  static ScaledValue from_double(double v);
  ScaledValue times(double v) const;
  ScaledValue times(const ScaledValue& o) const;
  double to_double() const;  // saturates to +-inf / 0 outside double range
  double log2_abs() const;
  int sign() const;
};

// Signed sum of scaled values; exact up to the usual floating point rounding
// after alignment to the largest exponent.
ScaledValue scaled_sum(const ScaledValue* vals, const double* coeffs, int count);

// Real antisymmetric matrix of even or odd dimension.  Construction rejects
// inputs whose asymmetry exceeds 1e-12 relative to the largest entry and
// symmetrizes the rest via (m - m^T) / 2.
class SkewMatrix {
 public:
  explicit SkewMatrix(const Eigen::MatrixXd& m);
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Eigen::MatrixXd m_;
};

// Pfaffian via Parlett-Reid tridiagonalization with partial pivoting.
// Throws on odd dimension.
double pfaffian(const SkewMatrix& m);
ScaledValue pfaffian_scaled(const SkewMatrix& m);
// In-place variant for large assemblies; destroys the buffer.
ScaledValue pfaffian_scaled_inplace(Eigen::MatrixXd& m);

// Determinant of a complex square matrix as the signed pivot product of a
// partially pivoted LU factorization.
std::complex<double> det_complex(const Eigen::MatrixXcd& m);

// Inverse via the same LU route; throws when some pivot falls below
// 1e-12 times the largest input entry.
Eigen::MatrixXcd inverse_complex(const Eigen::MatrixXcd& m);

}  // namespace hexpoly
