#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>

#include "doctest.h"
#include "hexpoly/oracle.hpp"

using namespace hexpoly;

TEST_CASE("cycle space basis size and parity") {
  for (int n = 1; n <= 3; ++n) {
    TorusHexLattice lat = build_hex_torus(n);
    std::vector<std::uint64_t> basis = cycle_space_basis(lat);
    // |E| - |V| + 1 independent cycles on a connected torus graph
    CHECK(basis.size() == static_cast<std::size_t>(n * n + 1));
    for (std::uint64_t mask : basis) {
      CHECK(mask != 0);
      std::vector<int> degree(lat.vertices.size(), 0);
      for (std::size_t e = 0; e < lat.edges.size(); ++e)
        if (mask >> e & 1) {
          ++degree[lat.edges[e].u];
          ++degree[lat.edges[e].v];
        }
      for (int d : degree) CHECK(d % 2 == 0);
    }
  }
}

TEST_CASE("partition oracle closed forms") {
  TorusHexLattice l1 = build_hex_torus(1);
  for (PolygonParams prm : {PolygonParams{0.7, 1.3, 0.9}, PolygonParams{2.5, 0.4, 1.0}}) {
    double want = 1 + prm.alpha * prm.beta + prm.alpha * prm.gamma +
                  prm.beta * prm.gamma;
    CHECK(brute_Z(l1, prm) == doctest::Approx(want).epsilon(1e-14));
  }
  TorusHexLattice l2 = build_hex_torus(2);
  CHECK(brute_Z(l2, PolygonParams{1, 1, 1}) == 32.0);  // 2^5 even subgraphs
  TorusHexLattice l3 = build_hex_torus(3);
  CHECK(brute_Z(l3, PolygonParams{1, 1, 1}) == 1024.0);
}

TEST_CASE("oracle input validation") {
  TorusHexLattice l5 = build_hex_torus(5);
  CHECK_THROWS_AS(brute_Z(l5, PolygonParams{1, 1, 1}), std::invalid_argument);
  TorusHexLattice l1 = build_hex_torus(1);
  CHECK_THROWS_AS(brute_Z(l1, PolygonParams{0.0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(brute_Z(l1, PolygonParams{-1.0, 1, 1}), std::invalid_argument);
}

TEST_CASE("defect ratio at unit weights is one") {
  TorusHexLattice lat = build_hex_torus(2);
  CorrelationPath path =
      build_path(lat, lat.edge_index(0, 1, EdgeKind::NorthWest),
                 lat.edge_index(0, 0, EdgeKind::NorthWest));
  CHECK(brute_M(lat, path, PolygonParams{1, 1, 1}) == doctest::Approx(1.0));
}

TEST_CASE("defect partition function ignores the path representative") {
  // XOR-ing any even subgraph into the defect set relabels the sum exactly
  TorusHexLattice lat = build_hex_torus(3);
  CorrelationPath path =
      build_path(lat, lat.edge_index(0, 2, EdgeKind::NorthWest),
                 lat.edge_index(0, 0, EdgeKind::NorthWest));
  PolygonParams prm{0.6, 1.8, 1.1};
  double base = brute_Z_ef(lat, path, prm);
  std::vector<std::uint64_t> basis = cycle_space_basis(lat);
  for (std::uint64_t mask : {basis[0], basis[3], basis[0] ^ basis[3]}) {
    CorrelationPath alt = path;
    auto toggle = [&alt](HalfEdgeRef h) {
      auto it = std::find(alt.half_edges.begin(), alt.half_edges.end(), h);
      if (it != alt.half_edges.end())
        alt.half_edges.erase(it);
      else
        alt.half_edges.push_back(h);
    };
    for (int e = 0; e < 27; ++e)
      if (mask >> e & 1) {
        toggle(HalfEdgeRef{e, Color::Black});
        toggle(HalfEdgeRef{e, Color::White});
      }
    CHECK(brute_Z_ef(lat, alt, prm) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("dimer oracle closed form at n=1") {
  FisherGraph fg = build_fisher(build_hex_torus(1));
  double A = 0.8, B = 1.7, C = 0.35;
  // matchings: three links, or one link plus the two opposite triangle edges
  CHECK(brute_dimer_Z(fg, A, B, C) ==
        doctest::Approx(1 + A * A + B * B + C * C).epsilon(1e-14));
  FisherGraph big = build_fisher(build_hex_torus(4));
  CHECK_THROWS_AS(brute_dimer_Z(big, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("mixed interaction correlation hand value") {
  TorusHexLattice lat = build_hex_torus(1);
  int e = lat.edge_index(0, 0, EdgeKind::Horizontal);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  double got = brute_one_two_corr(lat, OneTwoParams{4, 2, 1}, e, f);
  CHECK(got == doctest::Approx(-19.0 / 21).epsilon(1e-14));

  CHECK_THROWS_AS(brute_one_two_corr(lat, OneTwoParams{4, 2, 1}, e, e),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_one_two_corr(lat, OneTwoParams{0, 0, 0}, e, f),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_one_two_corr(lat, OneTwoParams{-1, 2, 1}, e, f),
                  std::invalid_argument);
  TorusHexLattice big = build_hex_torus(3);
  CHECK_THROWS_AS(brute_one_two_corr(big, OneTwoParams{4, 2, 1}, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("eps accessor takes square roots") {
  PolygonParams prm{4.0, 0.25, 9.0};
  HalfEdgeWeights eps = prm.eps();
  CHECK(eps.eps_a == 2.0);
  CHECK(eps.eps_b == 0.5);
  CHECK(eps.eps_c == 3.0);
  CHECK(eps.eps(EdgeKind::NorthEast) == 3.0);
}
