#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hexpoly/kasteleyn.hpp"
#include "hexpoly/spectral.hpp"

namespace hexpoly {

// Infinite-volume inverse entry between augmented vertices: row vertex
// (domain (0,0), label row_label), column vertex (domain (dp,dq), label
// col_label), computed as a torus quadrature of the one-domain block inverse.
// The limit is real; the imaginary part measures quadrature error.  grid must
// be a power of two >= 64 and the parameters off the critical surfaces.
std::complex<double> fourier_kinv(const PolygonParams& prm, int dp, int dq,
                                  int row_label, int col_label, int grid);

// Same integrals for every label pair and a rectangle of domain offsets,
// sharing one sweep over the quadrature grid.
class FourierKinvTable {
 public:
  FourierKinvTable(const PolygonParams& prm, int max_abs_dp, int max_abs_dq,
                   int grid);
  double entry(int dp, int dq, int row_label, int col_label) const;
  int grid() const { return grid_; }
  double max_imag() const { return max_imag_; }  // quadrature consistency

 private:
  int max_dp_, max_dq_, grid_;
  double max_imag_ = 0.0;
  std::vector<double> data_;
};

// Block-diagonal path perturbation X; one 8x8 block per period in vertex
// order (a2, a1, a4, a3, b2, b1, b4, b3).
struct PathPerturbation {
  Eigen::MatrixXd matrix;
  double det_x = 0.0;        // product form over the flipped side thirds
  double lambda_a = 0.0;     // eps_a - 1/eps_a
  double lambda_b = 0.0;
};

PathPerturbation build_X(const CorrelationPath& path, const HalfEdgeWeights& eps);

// Squared infinite-volume order parameter at the given path separation:
// det(X Kinf + I) * (alpha beta)^(-2 sep).
double m_inf_squared(int sep, const PolygonParams& prm, int grid);
double m_inf_squared(int sep, const PolygonParams& prm,
                     const FourierKinvTable& table);

struct DecayRow {
  int sep = 0;
  double m2 = 0.0;
  double delta_rel = 0.0;  // successive relative change; nan on the first row
};

struct LambdaEstimate {
  double lambda = 0.0;
  bool converged = false;
  Phase phase = Phase::Supercritical;
  std::vector<DecayRow> table;
};

// Plateau (supercritical) or decay (subcritical) scan of m_inf_squared up to
// max_sep.  Critical parameters are rejected.
LambdaEstimate lambda_estimate(const PolygonParams& prm, int max_sep, int grid);

// Block Toeplitz symbol of the one-period correlation expansion; diagnostic.
Eigen::MatrixXcd toeplitz_symbol(const PolygonParams& prm,
                                 std::complex<double> zeta, int grid);

}  // namespace hexpoly
