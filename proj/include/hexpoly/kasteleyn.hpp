#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "hexpoly/lattice.hpp"
#include "hexpoly/oracle.hpp"
#include "hexpoly/skewlinalg.hpp"

namespace hexpoly {

// Triangle weights of the dimer model matching the polygon weights.
struct DimerWeights {
  double A = 1.0;
  double B = 1.0;
  double C = 1.0;
  static DimerWeights from_polygon(const PolygonParams& prm);
};

// Modified adjacency matrix: entry (tail, head) = +weight * phase, entry
// (head, tail) = -weight / phase, with the phase z or w on homology-crossing
// edges.  Antisymmetric whenever z, w are +-1.
struct KasteleynAssembly {
  Eigen::MatrixXcd matrix;
  int n = 0;
  bool augmented = false;
  std::complex<double> z{1, 0}, w{1, 0};
};

// One-domain Fisher block, vertex order (a_bk, b_bk, c_bk, a_wt, b_wt, c_wt).
Eigen::MatrixXcd assemble_K1(const DimerWeights& wts, std::complex<double> z,
                             std::complex<double> w);
// One-domain augmented block, vertex order a1..a4 b1..b4 c1..c4.
Eigen::MatrixXcd assemble_K1_aug(const HalfEdgeWeights& eps,
                                 std::complex<double> z, std::complex<double> w);

KasteleynAssembly assemble_Kn(const FisherGraph& fg, const DimerWeights& wts,
                              std::complex<double> z, std::complex<double> w);
KasteleynAssembly assemble_Kn(const AugFisherGraph& ag, std::complex<double> z,
                              std::complex<double> w);

// Defect-weight flip: the side thirds along the path change magnitude from
// 1/eps to eps; signs and phases are untouched.
KasteleynAssembly modify_for_path(const KasteleynAssembly& assembly,
                                  const AugFisherGraph& ag,
                                  const CorrelationPath& path);

// Sector order used everywhere: (z, w) = (1,1), (1,-1), (-1,1), (-1,-1).
inline constexpr std::array<std::array<int, 2>, 4> kSectors{
    {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

struct PartitionResult {
  double value = 0.0;       // partition function; +-inf when out of range
  ScaledValue scaled{};     // exact scaled representation
  std::array<ScaledValue, 4> sector_pfaffians{};
};

PartitionResult partition_Z(int n, const PolygonParams& prm);

struct CorrelationResult {
  double value = 0.0;
  double value_squared = 0.0;
  bool critical_proximity = false;
  int separation = 0;
  std::array<ScaledValue, 4> sector_numerator{};    // path-modified Pfaffians
  std::array<ScaledValue, 4> sector_denominator{};
};

CorrelationResult correlation_M(int n, int e, int f, const PolygonParams& prm);
// Convenience: e = NorthWest(0, sep), f = NorthWest(0, 0).
CorrelationResult correlation_M(int n, int sep, const PolygonParams& prm);

}  // namespace hexpoly
