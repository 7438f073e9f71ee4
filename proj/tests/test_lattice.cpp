#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hexpoly/lattice.hpp"

using namespace hexpoly;

TEST_CASE("hex torus counts and indexing") {
  TorusHexLattice lat = build_hex_torus(2);
  CHECK(lat.n == 2);
  CHECK(lat.vertices.size() == 8);
  CHECK(lat.edges.size() == 12);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      int b = lat.vertex_index(p, q, Color::Black);
      CHECK(lat.vertices[b].p == p);
      CHECK(lat.vertices[b].q == q);
      CHECK(lat.vertices[b].color == Color::Black);
      for (EdgeKind k : {EdgeKind::Horizontal, EdgeKind::NorthWest, EdgeKind::NorthEast}) {
        const HexEdge& e = lat.edges[lat.edge_index(p, q, k)];
        CHECK(e.kind == k);
        CHECK(e.p == p);
        CHECK(e.q == q);
        CHECK(e.u == lat.vertex_index(p, q, Color::Black));
      }
    }
  CHECK(lat.wrap(-1) == 1);
  CHECK(lat.wrap(2) == 0);
}

TEST_CASE("hex torus edge endpoints follow the domain rule") {
  TorusHexLattice lat = build_hex_torus(3);
  const HexEdge& a = lat.edges[lat.edge_index(1, 2, EdgeKind::Horizontal)];
  CHECK(a.v == lat.vertex_index(1, 2, Color::White));
  const HexEdge& b = lat.edges[lat.edge_index(1, 2, EdgeKind::NorthWest)];
  CHECK(b.v == lat.vertex_index(1, 0, Color::White));
  const HexEdge& c = lat.edges[lat.edge_index(0, 2, EdgeKind::NorthEast)];
  CHECK(c.v == lat.vertex_index(2, 2, Color::White));
  // every vertex sees exactly three incident edges
  std::vector<int> degree(lat.vertices.size(), 0);
  for (const HexEdge& e : lat.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }));
}

TEST_CASE("fisher graph structure") {
  TorusHexLattice lat = build_hex_torus(2);
  FisherGraph fg = build_fisher(lat);
  CHECK(fg.num_vertices() == 24);
  CHECK(fg.edges.size() == 36);
  int tri = 0, links = 0;
  for (const DecoratedEdge& e : fg.edges) {
    if (e.tri_kind == FisherEdgeKind::Link) {
      ++links;
      CHECK(e.weight == 1.0);
      CHECK(e.parent_edge >= 0);
    } else {
      ++tri;
      CHECK(e.parent_edge == -1);
    }
  }
  CHECK(tri == 24);   // two triangles of three edges per domain
  CHECK(links == 12);  // one link per lattice edge

  // b link: white attach of (p,q+1) -> black attach of (p,q), z phase at the seam
  bool found = false;
  for (const DecoratedEdge& e : fg.edges) {
    if (e.tri_kind != FisherEdgeKind::Link || e.parent != EdgeKind::NorthWest)
      continue;
    auto [tp, tq, tl] = fg.vertex_domain_label(e.tail);
    auto [hp, hq, hl] = fg.vertex_domain_label(e.head);
    CHECK(tl == 4);
    CHECK(hl == 1);
    CHECK(tp == hp);
    CHECK(tq == lat.wrap(hq + 1));
    CHECK((e.crossing == Crossing::GammaXPos) == (hq == lat.n - 1));
    found = true;
  }
  CHECK(found);

  HomologyCycles cyc = homology_cycles(fg);
  CHECK(cyc.gamma_x.size() == 2);
  CHECK(cyc.gamma_y.size() == 2);
}

TEST_CASE("clockwise odd audit passes for built graphs") {
  for (int n = 1; n <= 3; ++n) {
    FisherGraph fg = build_fisher(build_hex_torus(n));
    ClockwiseOddReport rep = verify_clockwise_odd(fg);
    CHECK(rep.ok);
    CHECK(rep.face_count == static_cast<std::size_t>(3 * n * n));
    AugFisherGraph ag = build_aug_fisher(fg, HalfEdgeWeights{0.8, 1.4, 1.1});
    ClockwiseOddReport arep = verify_clockwise_odd(ag);
    CHECK(arep.ok);
    CHECK(arep.face_count == static_cast<std::size_t>(3 * n * n));
  }
}

TEST_CASE("flipping one edge breaks the clockwise odd property") {
  FisherGraph fg = build_fisher(build_hex_torus(2));
  std::swap(fg.edges[0].tail, fg.edges[0].head);
  fg.edge_displacement[0].x = -fg.edge_displacement[0].x;
  fg.edge_displacement[0].y = -fg.edge_displacement[0].y;
  ClockwiseOddReport rep = verify_clockwise_odd(fg);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.offending.empty());
}

TEST_CASE("augmented fisher graph structure") {
  HalfEdgeWeights eps{2.0, 0.5, 1.25};
  TorusHexLattice lat = build_hex_torus(2);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, eps);
  CHECK(ag.num_vertices() == 48);
  CHECK(ag.edges.size() == 60);
  int tri = 0, side = 0, mid = 0;
  for (const AugEdge& e : ag.edges) {
    switch (e.kind) {
      case AugEdgeKind::Triangle:
        ++tri;
        CHECK(e.weight == 1.0);
        break;
      case AugEdgeKind::SideThird:
        ++side;
        CHECK(e.weight == doctest::Approx(1.0 / eps.eps(e.parent)).epsilon(1e-15));
        break;
      case AugEdgeKind::MiddleThird:
        ++mid;
        CHECK(e.weight == 1.0);
        break;
    }
  }
  CHECK(tri == 24);
  CHECK(side == 24);
  CHECK(mid == 12);

  // third_edge covers each string once, slots ordered white side / middle /
  // black side
  std::set<int> seen;
  for (int le = 0; le < 12; ++le) {
    for (int slot = 0; slot < 3; ++slot) {
      int id = ag.third_edge(le, slot);
      CHECK(seen.insert(id).second);
      const AugEdge& e = ag.edges[id];
      CHECK(e.parent_edge == le);
      CHECK((e.kind == AugEdgeKind::MiddleThird) == (slot == 1));
    }
  }
  CHECK(seen.size() == 36);

  HomologyCycles cyc = homology_cycles(ag);
  CHECK(cyc.gamma_x.size() == 2);
  CHECK(cyc.gamma_y.size() == 2);
  for (int id : cyc.gamma_x)
    CHECK(ag.edges[id].kind == AugEdgeKind::MiddleThird);
}

TEST_CASE("correlation path layout") {
  TorusHexLattice lat = build_hex_torus(4);
  int e = lat.edge_index(0, 3, EdgeKind::NorthWest);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  CorrelationPath path = build_path(lat, e, f);
  CHECK(path.e == e);
  CHECK(path.f == f);
  CHECK(path.k == 3);
  CHECK(path.half_edges.size() == 12);
  REQUIRE(path.domains.size() == 3);
  CHECK(path.domains[0] == std::pair<int, int>{0, 3});
  CHECK(path.domains[2] == std::pair<int, int>{0, 1});
  CHECK(path.euclidean_separation() ==
        doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-15));

  // first period: black half of b(0,3), both halves of a(0,3), white half of b(0,2)
  CHECK(path.half_edges[0] ==
        HalfEdgeRef{lat.edge_index(0, 3, EdgeKind::NorthWest), Color::Black});
  CHECK(path.half_edges[1] ==
        HalfEdgeRef{lat.edge_index(0, 3, EdgeKind::Horizontal), Color::Black});
  CHECK(path.half_edges[2] ==
        HalfEdgeRef{lat.edge_index(0, 3, EdgeKind::Horizontal), Color::White});
  CHECK(path.half_edges[3] ==
        HalfEdgeRef{lat.edge_index(0, 2, EdgeKind::NorthWest), Color::White});

  // swapped endpoints canonicalize to the same walk
  CorrelationPath swapped = build_path(lat, f, e);
  CHECK(swapped.half_edges == path.half_edges);

  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, HalfEdgeWeights{1.1, 0.9, 1.3});
  std::vector<int> flipped = path.aug_edges(ag);
  REQUIRE(flipped.size() == 12);
  for (int id : flipped) CHECK(ag.edges[id].kind == AugEdgeKind::SideThird);
  CHECK(std::set<int>(flipped.begin(), flipped.end()).size() == 12);

  std::vector<int> verts = path.aug_vertices(ag);
  REQUIRE(verts.size() == 24);
  CHECK(std::set<int>(verts.begin(), verts.end()).size() == 24);
  // first block lives in domain (0,3) with labels (a2,a1,a4,a3,b2,b1,b4,b3)
  CHECK(verts[0] == ag.vertex_index(0, 3, kA2));
  CHECK(verts[1] == ag.vertex_index(0, 3, kA1));
  CHECK(verts[4] == ag.vertex_index(0, 3, kB2));
  CHECK(verts[7] == ag.vertex_index(0, 3, kB3));
}

TEST_CASE("path validation") {
  TorusHexLattice lat = build_hex_torus(3);
  int e = lat.edge_index(0, 2, EdgeKind::NorthWest);
  CHECK_THROWS_AS(build_path(lat, e, e), std::invalid_argument);
  CHECK_THROWS_AS(
      build_path(lat, e, lat.edge_index(0, 0, EdgeKind::Horizontal)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_path(lat, e, lat.edge_index(1, 0, EdgeKind::NorthWest)),
      std::invalid_argument);
  CHECK_THROWS_AS(build_path(lat, -1, e), std::invalid_argument);
}

TEST_CASE("edge export is deterministic and complete") {
  TorusHexLattice lat = build_hex_torus(2);
  std::string dump = export_edges(lat);
  CHECK(dump == export_edges(lat));
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 12);
  std::istringstream first(dump.substr(0, dump.find('\n')));
  int id, u, v, orient;
  std::string kind, crossing;
  double weight;
  first >> id >> u >> v >> kind >> weight >> orient >> crossing;
  CHECK(id == 0);
  CHECK(kind == "a");
  CHECK(orient == 0);
  CHECK(crossing == "none");

  FisherGraph fg = build_fisher(lat);
  std::string fdump = export_edges(fg);
  CHECK(std::count(fdump.begin(), fdump.end(), '\n') == 36);
  AugFisherGraph ag = build_aug_fisher(fg, HalfEdgeWeights{1, 1, 1});
  std::string adump = export_edges(ag);
  CHECK(std::count(adump.begin(), adump.end(), '\n') == 60);
}
