#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "hexpoly/kasteleyn.hpp"
#include "hexpoly/oracle.hpp"
#include "hexpoly/skewlinalg.hpp"

using namespace hexpoly;
using cd = std::complex<double>;

TEST_CASE("dimer weights from polygon weights") {
  DimerWeights d = DimerWeights::from_polygon(PolygonParams{0.5, 2.0, 1.5});
  CHECK(d.A == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(d.B == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(d.C == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(DimerWeights::from_polygon(PolygonParams{0.0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("one domain block symmetries") {
  DimerWeights d{0.8, 1.1, 0.6};
  for (int zs : {1, -1})
    for (int ws : {1, -1}) {
      Eigen::MatrixXcd m = assemble_K1(d, zs, ws);
      CHECK((m + m.transpose()).norm() < 1e-14);
      CHECK(m.imag().norm() == 0.0);
    }
  // K(z, w)^T = -K(conj z, conj w) on the unit torus
  cd z = std::polar(1.0, 0.7), w = std::polar(1.0, -1.9);
  Eigen::MatrixXcd m = assemble_K1(d, z, w);
  Eigen::MatrixXcd mc = assemble_K1(d, std::conj(z), std::conj(w));
  CHECK((m.transpose() + mc).norm() < 1e-14);
}

TEST_CASE("general assembly reduces to the one domain blocks at n = 1") {
  PolygonParams prm{0.7, 1.4, 0.9};
  TorusHexLattice lat = build_hex_torus(1);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, prm.eps());
  DimerWeights d = DimerWeights::from_polygon(prm);

  for (cd z : {cd{1, 0}, cd{-1, 0}, std::polar(1.0, 0.3)})
    for (cd w : {cd{1, 0}, std::polar(1.0, 2.1)}) {
      CHECK((assemble_Kn(fg, d, z, w).matrix - assemble_K1(d, z, w)).norm() <
            1e-14);
      CHECK((assemble_Kn(ag, z, w).matrix - assemble_K1_aug(prm.eps(), z, w))
                .norm() < 1e-14);
    }
}

TEST_CASE("sector matrices are real antisymmetric with consistent pfaffians") {
  PolygonParams prm{1.2, 0.6, 0.9};
  TorusHexLattice lat = build_hex_torus(2);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, prm.eps());
  for (const auto& sec : kSectors) {
    KasteleynAssembly a = assemble_Kn(ag, sec[0], sec[1]);
    CHECK(a.matrix.imag().norm() == 0.0);
    Eigen::MatrixXd m = a.matrix.real();
    CHECK((m + m.transpose()).norm() < 1e-13);
    double pf = pfaffian(SkewMatrix(m));
    CHECK(pf * pf == doctest::Approx(m.determinant()).epsilon(1e-9));
  }
  // nonreal phases appear away from the real sectors
  KasteleynAssembly b = assemble_Kn(ag, std::polar(1.0, 0.4), 1.0);
  CHECK(b.matrix.imag().norm() > 0.0);
  Eigen::MatrixXcd bc = assemble_Kn(ag, std::polar(1.0, -0.4), 1.0).matrix;
  CHECK((b.matrix.transpose() + bc).norm() < 1e-13);
}

TEST_CASE("partition function closed form at n = 1") {
  PolygonParams unit{1, 1, 1};
  PartitionResult r = partition_Z(1, unit);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-12));
  // frozen sector pfaffians (-U, V, T, S) at the unit point
  const double expect[4] = {-2, 2, 2, 2};
  for (int s = 0; s < 4; ++s)
    CHECK(r.sector_pfaffians[s].to_double() ==
          doctest::Approx(expect[s]).epsilon(1e-12));

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(0.3, 2.5);
  for (int t = 0; t < 10; ++t) {
    PolygonParams prm{dist(rng), dist(rng), dist(rng)};
    double closed = 1 + prm.alpha * prm.beta + prm.alpha * prm.gamma +
                    prm.beta * prm.gamma;
    CHECK(partition_Z(1, prm).value == doctest::Approx(closed).epsilon(1e-12));
  }
  CHECK_THROWS_AS(partition_Z(0, unit), std::invalid_argument);
}

TEST_CASE("partition function matches enumeration at n = 2") {
  TorusHexLattice lat = build_hex_torus(2);
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> dist(0.25, 2.8);
  for (int t = 0; t < 8; ++t) {
    PolygonParams prm{dist(rng), dist(rng), dist(rng)};
    CHECK(partition_Z(2, prm).value ==
          doctest::Approx(brute_Z(lat, prm)).epsilon(1e-10));
  }
}

TEST_CASE("path modification scales exactly the path side thirds") {
  PolygonParams prm{0.8, 1.7, 1.1};
  TorusHexLattice lat = build_hex_torus(3);
  FisherGraph fg = build_fisher(lat);
  AugFisherGraph ag = build_aug_fisher(fg, prm.eps());
  CorrelationPath path =
      build_path(lat, lat.edge_index(0, 2, EdgeKind::NorthWest),
                 lat.edge_index(0, 0, EdgeKind::NorthWest));
  REQUIRE(path.k == 2);

  KasteleynAssembly base = assemble_Kn(ag, 1, -1);
  KasteleynAssembly mod = modify_for_path(base, ag, path);
  int changed = 0;
  double ea2 = prm.alpha, eb2 = prm.beta;  // eps^2 of the side-third parents
  for (int i = 0; i < base.matrix.rows(); ++i)
    for (int j = 0; j < base.matrix.cols(); ++j) {
      cd b = base.matrix(i, j), m = mod.matrix(i, j);
      if (b == m) continue;
      ++changed;
      double ratio = std::abs(m) / std::abs(b);
      bool ok = std::fabs(ratio - ea2) < 1e-12 || std::fabs(ratio - eb2) < 1e-12;
      CHECK(ok);
    }
  CHECK(changed == 2 * 4 * path.k);
  Eigen::MatrixXd mm = mod.matrix.real();
  CHECK((mm + mm.transpose()).norm() < 1e-13);

  KasteleynAssembly plain = assemble_Kn(fg, DimerWeights::from_polygon(prm), 1, 1);
  CHECK_THROWS_AS(modify_for_path(plain, ag, path), std::invalid_argument);
  AugFisherGraph ag2 = build_aug_fisher(build_fisher(build_hex_torus(2)), prm.eps());
  CHECK_THROWS_AS(modify_for_path(base, ag2, path), std::invalid_argument);
  CorrelationPath empty;
  CHECK_THROWS_AS(modify_for_path(base, ag, empty), std::invalid_argument);
}

TEST_CASE("order parameter against enumeration") {
  PolygonParams unit{1, 1, 1};
  CorrelationResult u = correlation_M(2, 1, unit);
  CHECK(u.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u.separation == 1);
  CHECK_FALSE(u.critical_proximity);

  TorusHexLattice lat = build_hex_torus(2);
  int e = lat.edge_index(0, 1, EdgeKind::NorthWest);
  int f = lat.edge_index(0, 0, EdgeKind::NorthWest);
  CorrelationPath path = build_path(lat, e, f);
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> dist(0.3, 2.2);
  for (int t = 0; t < 6; ++t) {
    PolygonParams prm{dist(rng), dist(rng), dist(rng)};
    CorrelationResult r = correlation_M(2, e, f, prm);
    REQUIRE_FALSE(r.critical_proximity);
    CHECK(r.value == doctest::Approx(brute_M(lat, path, prm)).epsilon(1e-9));
    CHECK(r.value_squared == doctest::Approx(r.value * r.value).epsilon(1e-14));
  }
}

TEST_CASE("separation convenience overload") {
  PolygonParams prm{0.9, 1.3, 0.7};
  TorusHexLattice lat = build_hex_torus(3);
  CorrelationResult a = correlation_M(3, 2, prm);
  CorrelationResult b =
      correlation_M(3, lat.edge_index(0, 2, EdgeKind::NorthWest),
                    lat.edge_index(0, 0, EdgeKind::NorthWest), prm);
  CHECK(a.value == b.value);
  CHECK(a.separation == 2);
  CHECK_THROWS_AS(correlation_M(3, 0, prm), std::invalid_argument);
  CHECK_THROWS_AS(correlation_M(3, 3, prm), std::invalid_argument);
  CHECK_THROWS_AS(correlation_M(1, 1, prm), std::invalid_argument);
}

TEST_CASE("critical parameters raise the proximity flag") {
  CorrelationResult r = correlation_M(2, 1, PolygonParams{2.0, 1.0, 1.0 / 3});
  CHECK(r.critical_proximity);
  CHECK(std::isnan(r.value));
  CHECK(std::isnan(r.value_squared));
}
