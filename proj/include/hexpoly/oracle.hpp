#pragma once

#include <cstdint>
#include <vector>

#include "hexpoly/lattice.hpp"

namespace hexpoly {

// Full-edge polygon weights; eps() gives the positive square roots used by
// the half-edge form.
struct PolygonParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  HalfEdgeWeights eps() const;
};

struct OneTwoParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Fundamental cycles of a spanning tree, as bitmasks over edge ids.  XOR
// combinations enumerate every even subgraph exactly once.
std::vector<std::uint64_t> cycle_space_basis(const TorusHexLattice& lat);

// Partition function by explicit even-subgraph enumeration.
double brute_Z(const TorusHexLattice& lat, const PolygonParams& prm);

// Defect partition function: sum over even subgraphs of the half-edge weight
// of the symmetric difference with the path's half edges.
double brute_Z_ef(const TorusHexLattice& lat, const CorrelationPath& path,
                  const PolygonParams& prm);

double brute_M(const TorusHexLattice& lat, const CorrelationPath& path,
               const PolygonParams& prm);

// Perfect matching sum of the Fisher graph with triangle weights A, B, C and
// unit link weights.
double brute_dimer_Z(const FisherGraph& fg, double A, double B, double C);

// Edge-spin correlation <sigma_e sigma_f> of the mixed-interaction model with
// per-vertex weight 1 + A s_b s_c + B s_a s_c + C s_a s_b.
double brute_one_two_corr(const TorusHexLattice& lat, const OneTwoParams& prm,
                          int e, int f);

}  // namespace hexpoly
