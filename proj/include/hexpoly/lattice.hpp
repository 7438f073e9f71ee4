#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hexpoly {

// Edge types of the toroidal hexagonal lattice.  Horizontal edges connect the
// two vertices of a fundamental domain, NorthWest edges leave the domain in
// the -tau2 direction seen from the white endpoint, NorthEast edges in the
// +tau1 direction.  Weight letters: alpha <-> Horizontal, beta <-> NorthWest,
// gamma <-> NorthEast.
enum class EdgeKind : std::uint8_t { Horizontal = 0, NorthWest = 1, NorthEast = 2 };

enum class Color : std::uint8_t { Black = 0, White = 1 };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct HexVertex {
  int p = 0;
  int q = 0;
  Color color = Color::Black;
};

struct HexEdge {
  int u = 0;  // black endpoint
  int v = 0;  // white endpoint
  EdgeKind kind = EdgeKind::Horizontal;
  int p = 0;  // domain of the black endpoint
  int q = 0;
};

// n x n torus of hexagonal fundamental domains.  Each domain (p, q) carries
// one black and one white vertex and owns one edge of each kind:
//   Horizontal: B(p,q) -- W(p,q)
//   NorthWest:  B(p,q) -- W(p,q+1)
//   NorthEast:  B(p,q) -- W(p-1,q)
// Domain origins sit at p*tau1 + q*tau2 with tau1 = (3/2, sqrt3/2) and
// tau2 = (-3/2, sqrt3/2); all indices are mod n.
struct TorusHexLattice {
  int n = 0;
  std::vector<HexVertex> vertices;  // 2n^2
  std::vector<HexEdge> edges;       // 3n^2

  int vertex_index(int p, int q, Color c) const;
  int edge_index(int p, int q, EdgeKind k) const;
  int wrap(int i) const;
  Vec2 vertex_position(int v) const;  // representative in the plane
};

TorusHexLattice build_hex_torus(int n);

// Square roots of the polygon weights, one per edge kind.
struct HalfEdgeWeights {
  double eps_a = 1.0;
  double eps_b = 1.0;
  double eps_c = 1.0;
  double eps(EdgeKind k) const;
};

// Homology annotation of an edge: phase picked up by the (tail -> head)
// traversal when the edge crosses one of the two fixed dual cycles.
enum class Crossing : std::uint8_t {
  None = 0,
  GammaXPos,  // factor z
  GammaXNeg,  // factor 1/z
  GammaYPos,  // factor w
  GammaYNeg   // factor 1/w
};

enum class FisherEdgeKind : std::uint8_t {
  TriVertical = 0,  // dimer weight A
  TriNorthEast,     // dimer weight B
  TriNorthWest,     // dimer weight C
  Link              // inherited lattice edge, dimer weight 1
};

// Directed weighted edge of a decorated graph; orientation is tail -> head.
struct DecoratedEdge {
  int tail = 0;
  int head = 0;
  double weight = 1.0;
  FisherEdgeKind tri_kind = FisherEdgeKind::Link;
  EdgeKind parent = EdgeKind::Horizontal;  // lattice edge this derives from
  int parent_edge = -1;                    // lattice edge id, -1 for triangle edges
  Crossing crossing = Crossing::None;
};

// Per-domain vertex labels of the Fisher graph.  Each lattice vertex becomes
// a triangle whose corners attach to the three incident edge kinds.
//   0: black Horizontal attach   3: white Horizontal attach
//   1: black NorthWest attach    4: white NorthWest attach
//   2: black NorthEast attach    5: white NorthEast attach
struct FisherGraph {
  int n = 0;
  static constexpr int kVertsPerDomain = 6;
  std::vector<DecoratedEdge> edges;     // 9n^2
  std::vector<Vec2> positions;          // embedding representative per vertex
  std::vector<Vec2> edge_displacement;  // tail -> head vector in the plane

  int num_vertices() const { return kVertsPerDomain * n * n; }
  int vertex_index(int p, int q, int label) const;
  std::array<int, 3> vertex_domain_label(int v) const;  // (p, q, label)
};

FisherGraph build_fisher(const TorusHexLattice& lat);

// Per-domain vertex labels of the augmented Fisher graph.  Each lattice edge
// becomes a string of three edges; the two interior vertices are "added".
//   0..3:  a1 a2 a3 a4   Horizontal string, a1 = black attach, a4 = white
//                        attach, a2/a3 added, all in-domain.
//   4..7:  b1 b2 b3 b4   NorthWest string, b1 = white attach, b4 = black
//                        attach; b3 added on b(p,q), b2 added on b(p,q-1).
//   8..11: c1 c2 c3 c4   NorthEast string, c1 = white attach, c4 = black
//                        attach; c3 added on c(p,q), c2 added on c(p+1,q).
enum AugLabel {
  kA1 = 0, kA2, kA3, kA4,
  kB1, kB2, kB3, kB4,
  kC1, kC2, kC3, kC4
};

enum class AugEdgeKind : std::uint8_t { Triangle = 0, SideThird, MiddleThird };

struct AugEdge {
  int tail = 0;
  int head = 0;
  double weight = 1.0;
  AugEdgeKind kind = AugEdgeKind::Triangle;
  EdgeKind parent = EdgeKind::Horizontal;
  int parent_edge = -1;
  Crossing crossing = Crossing::None;
};

struct AugFisherGraph {
  int n = 0;
  static constexpr int kVertsPerDomain = 12;
  HalfEdgeWeights eps;
  std::vector<AugEdge> edges;  // 15n^2
  std::vector<Vec2> positions;
  std::vector<Vec2> edge_displacement;

  int num_vertices() const { return kVertsPerDomain * n * n; }
  int vertex_index(int p, int q, int label) const;
  std::array<int, 3> vertex_domain_label(int v) const;
  // Id of the third belonging to (lattice edge, slot).  Slot 0 = white-side
  // third, 1 = middle third, 2 = black-side third.
  int third_edge(int lattice_edge, int slot) const;

 private:
  friend AugFisherGraph build_aug_fisher(const FisherGraph&, const HalfEdgeWeights&);
  std::vector<std::array<int, 3>> thirds_;  // per lattice edge
};

AugFisherGraph build_aug_fisher(const FisherGraph& fg, const HalfEdgeWeights& eps);

// Edge ids crossed by the two fixed dual homology cycles.
struct HomologyCycles {
  std::vector<int> gamma_x;  // z-phase carriers
  std::vector<int> gamma_y;  // w-phase carriers
};

HomologyCycles homology_cycles(const FisherGraph& fg);
HomologyCycles homology_cycles(const AugFisherGraph& ag);

struct ClockwiseOddReport {
  bool ok = false;
  std::size_t face_count = 0;
  // Offending faces as vertex cycles.
  std::vector<std::vector<int>> offending;
};

ClockwiseOddReport verify_clockwise_odd(const FisherGraph& fg);
ClockwiseOddReport verify_clockwise_odd(const AugFisherGraph& ag);

struct HalfEdgeRef {
  int edge = 0;      // lattice edge id
  Color side = Color::Black;  // half adjacent to this endpoint
  bool operator==(const HalfEdgeRef&) const = default;
};

// Midpoint-to-midpoint defect path between two NorthWest edges on the same
// tau1 row, walking in the -tau2 direction.  One period covers the black half
// of a NorthWest edge, both halves of a Horizontal edge and the white half of
// the next NorthWest edge; all eight augmented vertices it touches lie in a
// single fundamental domain.
struct CorrelationPath {
  int e = 0;  // start edge (larger q)
  int f = 0;  // end edge
  int k = 0;  // number of periods
  std::vector<HalfEdgeRef> half_edges;            // 4k, walk order
  std::vector<std::pair<int, int>> domains;       // k domains, walk order

  // Flipped augmented edges, four per domain in the order
  // (b3b4, a1a2, a3a4, b1b2); these are exactly the side thirds along the walk.
  std::vector<int> aug_edges(const AugFisherGraph& ag) const;
  // Touched augmented vertices, eight per domain in the order
  // (a2, a1, a4, a3, b2, b1, b4, b3) used by the perturbation blocks.
  std::vector<int> aug_vertices(const AugFisherGraph& ag) const;
  double euclidean_separation() const;  // k * sqrt(3)
};

CorrelationPath build_path(const TorusHexLattice& lat, int e, int f);

// Plain text edge listing: "edge_id u v kind weight orientation crossing".
std::string export_edges(const TorusHexLattice& lat);
std::string export_edges(const FisherGraph& fg);
std::string export_edges(const AugFisherGraph& ag);

}  // namespace hexpoly
