#include "hexpoly/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hexpoly {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr Vec2 kTau1{1.5, kSqrt3 / 2};
constexpr Vec2 kTau2{-1.5, kSqrt3 / 2};
constexpr double kAttach = 0.25;  // pull-in of triangle corners along each leg

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

Vec2 domain_origin(int p, int q) { return p * kTau1 + q * kTau2; }

constexpr Vec2 kBlack{0.0, 0.0};
constexpr Vec2 kWhite{1.0, 0.0};

// Unit leg directions seen from the black / white vertex of a domain.
constexpr Vec2 kLegA_Black{1.0, 0.0};
constexpr Vec2 kLegB_Black{-0.5, kSqrt3 / 2};
constexpr Vec2 kLegC_Black{-0.5, -kSqrt3 / 2};
constexpr Vec2 kLegA_White{-1.0, 0.0};
constexpr Vec2 kLegB_White{0.5, -kSqrt3 / 2};
constexpr Vec2 kLegC_White{0.5, kSqrt3 / 2};

// Fisher label offsets inside a domain, labels as in FisherGraph.
const Vec2 kFisherOffset[6] = {
    kBlack + kAttach * kLegA_Black,  // 0: a attach, black
    kBlack + kAttach * kLegB_Black,  // 1: b attach, black
    kBlack + kAttach * kLegC_Black,  // 2: c attach, black
    kWhite + kAttach * kLegA_White,  // 3: a attach, white
    kWhite + kAttach * kLegB_White,  // 4: b attach, white
    kWhite + kAttach * kLegC_White,  // 5: c attach, white
};

int mod(int i, int n) { return ((i % n) + n) % n; }

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("torus size must be >= 1");
}

const char* crossing_token(Crossing c) {
  switch (c) {
    case Crossing::None: return "none";
    case Crossing::GammaXPos: return "z";
    case Crossing::GammaXNeg: return "z^-1";
    case Crossing::GammaYPos: return "w";
    case Crossing::GammaYNeg: return "w^-1";
  }
  return "none";
}

}  // namespace

int TorusHexLattice::vertex_index(int p, int q, Color c) const {
  return 2 * (mod(p, n) * n + mod(q, n)) + static_cast<int>(c);
}

int TorusHexLattice::edge_index(int p, int q, EdgeKind k) const {
  return 3 * (mod(p, n) * n + mod(q, n)) + static_cast<int>(k);
}

int TorusHexLattice::wrap(int i) const { return mod(i, n); }

Vec2 TorusHexLattice::vertex_position(int v) const {
  const HexVertex& hv = vertices[static_cast<std::size_t>(v)];
  Vec2 base = hv.color == Color::Black ? kBlack : kWhite;
  return base + domain_origin(hv.p, hv.q);
}

TorusHexLattice build_hex_torus(int n) {
  require_positive(n);
  TorusHexLattice lat;
  lat.n = n;
  lat.vertices.reserve(static_cast<std::size_t>(2 * n * n));
  lat.edges.reserve(static_cast<std::size_t>(3 * n * n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      lat.vertices.push_back({p, q, Color::Black});
      lat.vertices.push_back({p, q, Color::White});
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      int b = lat.vertex_index(p, q, Color::Black);
      lat.edges.push_back({b, lat.vertex_index(p, q, Color::White),
                           EdgeKind::Horizontal, p, q});
      lat.edges.push_back({b, lat.vertex_index(p, q + 1, Color::White),
                           EdgeKind::NorthWest, p, q});
      lat.edges.push_back({b, lat.vertex_index(p - 1, q, Color::White),
                           EdgeKind::NorthEast, p, q});
    }
  }
  return lat;
}

double HalfEdgeWeights::eps(EdgeKind k) const {
  switch (k) {
    case EdgeKind::Horizontal: return eps_a;
    case EdgeKind::NorthWest: return eps_b;
    case EdgeKind::NorthEast: return eps_c;
  }
  return 1.0;
}

int FisherGraph::vertex_index(int p, int q, int label) const {
  return kVertsPerDomain * (mod(p, n) * n + mod(q, n)) + label;
}

std::array<int, 3> FisherGraph::vertex_domain_label(int v) const {
  int d = v / kVertsPerDomain;
  return {d / n, d % n, v % kVertsPerDomain};
}

FisherGraph build_fisher(const TorusHexLattice& lat) {
  FisherGraph fg;
  const int n = lat.n;
  fg.n = n;
  fg.positions.resize(static_cast<std::size_t>(fg.num_vertices()));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int l = 0; l < 6; ++l)
        fg.positions[static_cast<std::size_t>(fg.vertex_index(p, q, l))] =
            kFisherOffset[l] + domain_origin(p, q);

  auto push = [&fg](int tail, int head, FisherEdgeKind tk, EdgeKind parent,
                    int parent_edge, Crossing cr, Vec2 disp) {
    fg.edges.push_back({tail, head, 1.0, tk, parent, parent_edge, cr});
    fg.edge_displacement.push_back(disp);
  };

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      auto v = [&](int label) { return fg.vertex_index(p, q, label); };
      // Black triangle: directed cycle a -> c -> b -> a.
      push(v(2), v(1), FisherEdgeKind::TriVertical, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[1] - kFisherOffset[2]);
      push(v(0), v(2), FisherEdgeKind::TriNorthEast, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[2] - kFisherOffset[0]);
      push(v(1), v(0), FisherEdgeKind::TriNorthWest, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[0] - kFisherOffset[1]);
      // White triangle: directed cycle a -> c -> b -> a on white labels.
      push(v(5), v(4), FisherEdgeKind::TriVertical, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[4] - kFisherOffset[5]);
      push(v(3), v(5), FisherEdgeKind::TriNorthEast, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[5] - kFisherOffset[3]);
      push(v(4), v(3), FisherEdgeKind::TriNorthWest, EdgeKind::Horizontal, -1,
           Crossing::None, kFisherOffset[3] - kFisherOffset[4]);
      // Links, oriented white attach -> black attach.
      push(v(3), v(0), FisherEdgeKind::Link, EdgeKind::Horizontal,
           lat.edge_index(p, q, EdgeKind::Horizontal), Crossing::None,
           kFisherOffset[0] - kFisherOffset[3]);
      push(fg.vertex_index(p, q + 1, 4), v(1), FisherEdgeKind::Link,
           EdgeKind::NorthWest, lat.edge_index(p, q, EdgeKind::NorthWest),
           q == n - 1 ? Crossing::GammaXPos : Crossing::None,
           kFisherOffset[1] - kFisherOffset[4] - kTau2);
      push(fg.vertex_index(p - 1, q, 5), v(2), FisherEdgeKind::Link,
           EdgeKind::NorthEast, lat.edge_index(p, q, EdgeKind::NorthEast),
           p == 0 ? Crossing::GammaYPos : Crossing::None,
           kFisherOffset[2] - kFisherOffset[5] + kTau1);
    }
  }
  return fg;
}

int AugFisherGraph::vertex_index(int p, int q, int label) const {
  return kVertsPerDomain * (mod(p, n) * n + mod(q, n)) + label;
}

std::array<int, 3> AugFisherGraph::vertex_domain_label(int v) const {
  int d = v / kVertsPerDomain;
  return {d / n, d % n, v % kVertsPerDomain};
}

int AugFisherGraph::third_edge(int lattice_edge, int slot) const {
  return thirds_[static_cast<std::size_t>(lattice_edge)][static_cast<std::size_t>(slot)];
}

AugFisherGraph build_aug_fisher(const FisherGraph& fg, const HalfEdgeWeights& eps) {
  if (eps.eps_a <= 0 || eps.eps_b <= 0 || eps.eps_c <= 0)
    throw std::invalid_argument("half edge weights must be positive");
  AugFisherGraph ag;
  const int n = fg.n;
  ag.n = n;
  ag.eps = eps;

  // Label offsets; added vertices sit at the thirds of the attach-to-attach
  // segment of their lattice edge.
  Vec2 off[12];
  off[kA1] = kFisherOffset[0];
  off[kA4] = kFisherOffset[3];
  off[kA2] = off[kA1] + (1.0 / 3.0) * (off[kA4] - off[kA1]);
  off[kA3] = off[kA1] + (2.0 / 3.0) * (off[kA4] - off[kA1]);
  off[kB4] = kFisherOffset[1];
  off[kB1] = kFisherOffset[4];
  Vec2 b_white_far = kFisherOffset[4] + kTau2;  // white attach of b(p,q) seen from (p,q)
  off[kB3] = off[kB4] + (1.0 / 3.0) * (b_white_far - off[kB4]);
  Vec2 b_black_far = kFisherOffset[1] - kTau2;  // black attach of b(p,q-1) seen from (p,q)
  off[kB2] = off[kB1] + (1.0 / 3.0) * (b_black_far - off[kB1]);
  off[kC4] = kFisherOffset[2];
  off[kC1] = kFisherOffset[5];
  Vec2 c_white_far = kFisherOffset[5] - kTau1;  // white attach of c(p,q) seen from (p,q)
  off[kC3] = off[kC4] + (1.0 / 3.0) * (c_white_far - off[kC4]);
  Vec2 c_black_far = kFisherOffset[2] + kTau1;  // black attach of c(p+1,q) seen from (p,q)
  off[kC2] = off[kC1] + (1.0 / 3.0) * (c_black_far - off[kC1]);

  ag.positions.resize(static_cast<std::size_t>(ag.num_vertices()));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int l = 0; l < 12; ++l)
        ag.positions[static_cast<std::size_t>(ag.vertex_index(p, q, l))] =
            off[l] + domain_origin(p, q);

  ag.thirds_.assign(static_cast<std::size_t>(3 * n * n), {-1, -1, -1});
  TorusHexLattice idx;  // index helper only
  idx.n = n;

  auto push = [&ag](int tail, int head, double weight, AugEdgeKind kind,
                    EdgeKind parent, int parent_edge, Crossing cr, Vec2 disp) {
    ag.edges.push_back({tail, head, weight, kind, parent, parent_edge, cr});
    ag.edge_displacement.push_back(disp);
    return static_cast<int>(ag.edges.size()) - 1;
  };

  const double ia = 1.0 / eps.eps_a, ib = 1.0 / eps.eps_b, ic = 1.0 / eps.eps_c;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      auto v = [&](int label) { return ag.vertex_index(p, q, label); };
      int ea = idx.edge_index(p, q, EdgeKind::Horizontal);
      int eb = idx.edge_index(p, q, EdgeKind::NorthWest);
      int ebm = idx.edge_index(p, q - 1, EdgeKind::NorthWest);
      int ec = idx.edge_index(p, q, EdgeKind::NorthEast);
      int ecp = idx.edge_index(p + 1, q, EdgeKind::NorthEast);

      // Triangles, directed cycles a -> c -> b -> a as in the Fisher graph.
      push(v(kC4), v(kB4), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kB4] - off[kC4]);
      push(v(kA1), v(kC4), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kC4] - off[kA1]);
      push(v(kB4), v(kA1), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kA1] - off[kB4]);
      push(v(kC1), v(kB1), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kB1] - off[kC1]);
      push(v(kA4), v(kC1), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kC1] - off[kA4]);
      push(v(kB1), v(kA4), 1.0, AugEdgeKind::Triangle, EdgeKind::Horizontal, -1,
           Crossing::None, off[kA4] - off[kB1]);

      // Horizontal string, white attach -> black attach.
      int id = push(v(kA2), v(kA1), ia, AugEdgeKind::SideThird,
                    EdgeKind::Horizontal, ea, Crossing::None,
                    off[kA1] - off[kA2]);
      ag.thirds_[static_cast<std::size_t>(ea)][2] = id;
      id = push(v(kA3), v(kA2), 1.0, AugEdgeKind::MiddleThird,
                EdgeKind::Horizontal, ea, Crossing::None, off[kA2] - off[kA3]);
      ag.thirds_[static_cast<std::size_t>(ea)][1] = id;
      id = push(v(kA4), v(kA3), ia, AugEdgeKind::SideThird, EdgeKind::Horizontal,
                ea, Crossing::None, off[kA3] - off[kA4]);
      ag.thirds_[static_cast<std::size_t>(ea)][0] = id;

      // NorthWest string.
      id = push(v(kB3), v(kB4), ib, AugEdgeKind::SideThird, EdgeKind::NorthWest,
                eb, Crossing::None, off[kB4] - off[kB3]);
      ag.thirds_[static_cast<std::size_t>(eb)][2] = id;
      id = push(ag.vertex_index(p, q + 1, kB2), v(kB3), 1.0,
                AugEdgeKind::MiddleThird, EdgeKind::NorthWest, eb,
                q == n - 1 ? Crossing::GammaXPos : Crossing::None,
                off[kB3] - off[kB2] - kTau2);
      ag.thirds_[static_cast<std::size_t>(eb)][1] = id;
      id = push(v(kB1), v(kB2), ib, AugEdgeKind::SideThird, EdgeKind::NorthWest,
                ebm, Crossing::None, off[kB2] - off[kB1]);
      ag.thirds_[static_cast<std::size_t>(ebm)][0] = id;

      // NorthEast string.
      id = push(v(kC3), v(kC4), ic, AugEdgeKind::SideThird, EdgeKind::NorthEast,
                ec, Crossing::None, off[kC4] - off[kC3]);
      ag.thirds_[static_cast<std::size_t>(ec)][2] = id;
      id = push(ag.vertex_index(p - 1, q, kC2), v(kC3), 1.0,
                AugEdgeKind::MiddleThird, EdgeKind::NorthEast, ec,
                p == 0 ? Crossing::GammaYPos : Crossing::None,
                off[kC3] - off[kC2] + kTau1);
      ag.thirds_[static_cast<std::size_t>(ec)][1] = id;
      id = push(v(kC1), v(kC2), ic, AugEdgeKind::SideThird, EdgeKind::NorthEast,
                ecp, Crossing::None, off[kC2] - off[kC1]);
      ag.thirds_[static_cast<std::size_t>(ecp)][0] = id;
    }
  }
  return ag;
}

HomologyCycles homology_cycles(const FisherGraph& fg) {
  HomologyCycles hc;
  for (int i = 0; i < static_cast<int>(fg.edges.size()); ++i) {
    Crossing c = fg.edges[static_cast<std::size_t>(i)].crossing;
    if (c == Crossing::GammaXPos || c == Crossing::GammaXNeg) hc.gamma_x.push_back(i);
    if (c == Crossing::GammaYPos || c == Crossing::GammaYNeg) hc.gamma_y.push_back(i);
  }
  return hc;
}

HomologyCycles homology_cycles(const AugFisherGraph& ag) {
  HomologyCycles hc;
  for (int i = 0; i < static_cast<int>(ag.edges.size()); ++i) {
    Crossing c = ag.edges[static_cast<std::size_t>(i)].crossing;
    if (c == Crossing::GammaXPos || c == Crossing::GammaXNeg) hc.gamma_x.push_back(i);
    if (c == Crossing::GammaYPos || c == Crossing::GammaYNeg) hc.gamma_y.push_back(i);
  }
  return hc;
}

namespace {

struct EdgeView {
  int tail, head;
  Vec2 disp;
};

// Face audit on the embedded torus graph.  Faces are traced through the
// rotation system induced by edge directions; each face's winding sense is
// recovered from its total turning, so no global orientation convention is
// needed.  A face passes when its clockwise traversal covers an odd number of
// co-oriented edges.
ClockwiseOddReport audit_faces(int num_vertices, const std::vector<EdgeView>& edges) {
  struct Out {
    int edge;
    bool from_tail;
    double angle;
  };
  std::vector<std::vector<Out>> at(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const EdgeView& e = edges[static_cast<std::size_t>(i)];
    at[static_cast<std::size_t>(e.tail)].push_back(
        {i, true, std::atan2(e.disp.y, e.disp.x)});
    at[static_cast<std::size_t>(e.head)].push_back(
        {i, false, std::atan2(-e.disp.y, -e.disp.x)});
  }
  for (auto& list : at)
    std::sort(list.begin(), list.end(),
              [](const Out& a, const Out& b) { return a.angle < b.angle; });

  // Half edge id: 2*edge + (0 if running tail->head else 1).
  auto next_half = [&](int h) {
    int e = h / 2;
    bool along = (h % 2) == 0;
    int v = along ? edges[static_cast<std::size_t>(e)].head
                  : edges[static_cast<std::size_t>(e)].tail;
    const auto& list = at[static_cast<std::size_t>(v)];
    // Locate the reverse half edge among v's outgoing slots, step to the next
    // slot counterclockwise.
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].edge == e && list[i].from_tail == !along) {
        const Out& nxt = list[(i + 1) % list.size()];
        return 2 * nxt.edge + (nxt.from_tail ? 0 : 1);
      }
    }
    throw std::logic_error("inconsistent rotation system");
  };

  std::vector<char> seen(2 * edges.size(), 0);
  ClockwiseOddReport rep;
  rep.ok = true;
  for (int h0 = 0; h0 < static_cast<int>(2 * edges.size()); ++h0) {
    if (seen[static_cast<std::size_t>(h0)]) continue;
    std::vector<int> halves;
    int h = h0;
    do {
      seen[static_cast<std::size_t>(h)] = 1;
      halves.push_back(h);
      h = next_half(h);
    } while (h != h0);
    ++rep.face_count;

    double turning = 0.0;
    int co = 0;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      int cur = halves[i];
      int nxt = halves[(i + 1) % halves.size()];
      Vec2 d1 = edges[static_cast<std::size_t>(cur / 2)].disp;
      if (cur % 2) d1 = {-d1.x, -d1.y};
      Vec2 d2 = edges[static_cast<std::size_t>(nxt / 2)].disp;
      if (nxt % 2) d2 = {-d2.x, -d2.y};
      double t = std::atan2(d2.y, d2.x) - std::atan2(d1.y, d1.x);
      while (t > 3.14159265358979324) t -= 2 * 3.14159265358979324;
      while (t <= -3.14159265358979324) t += 2 * 3.14159265358979324;
      turning += t;
      if (cur % 2 == 0) ++co;
    }
    bool ccw = turning > 0;
    int cw_co = ccw ? static_cast<int>(halves.size()) - co : co;
    if (cw_co % 2 == 0) {
      rep.ok = false;
      std::vector<int> cycle;
      for (int hh : halves)
        cycle.push_back(hh % 2 == 0 ? edges[static_cast<std::size_t>(hh / 2)].tail
                                    : edges[static_cast<std::size_t>(hh / 2)].head);
      rep.offending.push_back(std::move(cycle));
    }
  }
  return rep;
}

}  // namespace

ClockwiseOddReport verify_clockwise_odd(const FisherGraph& fg) {
  std::vector<EdgeView> ev;
  ev.reserve(fg.edges.size());
  for (std::size_t i = 0; i < fg.edges.size(); ++i)
    ev.push_back({fg.edges[i].tail, fg.edges[i].head, fg.edge_displacement[i]});
  return audit_faces(fg.num_vertices(), ev);
}

ClockwiseOddReport verify_clockwise_odd(const AugFisherGraph& ag) {
  std::vector<EdgeView> ev;
  ev.reserve(ag.edges.size());
  for (std::size_t i = 0; i < ag.edges.size(); ++i)
    ev.push_back({ag.edges[i].tail, ag.edges[i].head, ag.edge_displacement[i]});
  return audit_faces(ag.num_vertices(), ev);
}

std::vector<int> CorrelationPath::aug_edges(const AugFisherGraph& ag) const {
  TorusHexLattice idx;
  idx.n = ag.n;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(4 * k));
  for (const auto& [p, q] : domains) {
    out.push_back(ag.third_edge(idx.edge_index(p, q, EdgeKind::NorthWest), 2));
    out.push_back(ag.third_edge(idx.edge_index(p, q, EdgeKind::Horizontal), 2));
    out.push_back(ag.third_edge(idx.edge_index(p, q, EdgeKind::Horizontal), 0));
    out.push_back(ag.third_edge(idx.edge_index(p, q - 1, EdgeKind::NorthWest), 0));
  }
  return out;
}

std::vector<int> CorrelationPath::aug_vertices(const AugFisherGraph& ag) const {
  static constexpr int kOrder[8] = {kA2, kA1, kA4, kA3, kB2, kB1, kB4, kB3};
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(8 * k));
  for (const auto& [p, q] : domains)
    for (int l : kOrder) out.push_back(ag.vertex_index(p, q, l));
  return out;
}

double CorrelationPath::euclidean_separation() const { return k * kSqrt3; }

CorrelationPath build_path(const TorusHexLattice& lat, int e, int f) {
  if (e < 0 || f < 0 || e >= static_cast<int>(lat.edges.size()) ||
      f >= static_cast<int>(lat.edges.size()))
    throw std::invalid_argument("edge id out of range");
  if (e == f) throw std::invalid_argument("edges must be distinct");
  const HexEdge& ee = lat.edges[static_cast<std::size_t>(e)];
  const HexEdge& fe = lat.edges[static_cast<std::size_t>(f)];
  if (ee.kind != EdgeKind::NorthWest || fe.kind != EdgeKind::NorthWest)
    throw std::invalid_argument("path endpoints must be NorthWest edges");
  if (ee.p != fe.p)
    throw std::invalid_argument("path endpoints must share a tau1 row");

  CorrelationPath path;
  int hi = std::max(ee.q, fe.q);
  int lo = std::min(ee.q, fe.q);
  path.e = lat.edge_index(ee.p, hi, EdgeKind::NorthWest);
  path.f = lat.edge_index(ee.p, lo, EdgeKind::NorthWest);
  path.k = hi - lo;
  for (int j = 0; j < path.k; ++j) {
    int q = hi - j;
    path.domains.emplace_back(ee.p, q);
    path.half_edges.push_back(
        {lat.edge_index(ee.p, q, EdgeKind::NorthWest), Color::Black});
    path.half_edges.push_back(
        {lat.edge_index(ee.p, q, EdgeKind::Horizontal), Color::Black});
    path.half_edges.push_back(
        {lat.edge_index(ee.p, q, EdgeKind::Horizontal), Color::White});
    path.half_edges.push_back(
        {lat.edge_index(ee.p, q - 1, EdgeKind::NorthWest), Color::White});
  }
  return path;
}

namespace {

const char* lattice_kind_token(EdgeKind k) {
  switch (k) {
    case EdgeKind::Horizontal: return "a";
    case EdgeKind::NorthWest: return "b";
    case EdgeKind::NorthEast: return "c";
  }
  return "?";
}

const char* fisher_kind_token(FisherEdgeKind k, EdgeKind parent) {
  switch (k) {
    case FisherEdgeKind::TriVertical: return "tri_v";
    case FisherEdgeKind::TriNorthEast: return "tri_ne";
    case FisherEdgeKind::TriNorthWest: return "tri_nw";
    case FisherEdgeKind::Link: return lattice_kind_token(parent);
  }
  return "?";
}

const char* aug_kind_token(AugEdgeKind k, EdgeKind parent) {
  if (k == AugEdgeKind::Triangle) return "tri";
  bool mid = k == AugEdgeKind::MiddleThird;
  switch (parent) {
    case EdgeKind::Horizontal: return mid ? "a_mid" : "a_side";
    case EdgeKind::NorthWest: return mid ? "b_mid" : "b_side";
    case EdgeKind::NorthEast: return mid ? "c_mid" : "c_side";
  }
  return "?";
}

std::string format_line(int id, int u, int v, const char* kind, double weight,
                        int orientation, const char* crossing) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d %d %d %s %.17g %d %s\n", id, u, v, kind,
                weight, orientation, crossing);
  return buf;
}

}  // namespace

std::string export_edges(const TorusHexLattice& lat) {
  std::string out;
  for (int i = 0; i < static_cast<int>(lat.edges.size()); ++i) {
    const HexEdge& e = lat.edges[static_cast<std::size_t>(i)];
    out += format_line(i, e.u, e.v, lattice_kind_token(e.kind), 1.0, 0, "none");
  }
  return out;
}

std::string export_edges(const FisherGraph& fg) {
  std::string out;
  for (int i = 0; i < static_cast<int>(fg.edges.size()); ++i) {
    const DecoratedEdge& e = fg.edges[static_cast<std::size_t>(i)];
    out += format_line(i, e.tail, e.head, fisher_kind_token(e.tri_kind, e.parent),
                       e.weight, 1, crossing_token(e.crossing));
  }
  return out;
}

std::string export_edges(const AugFisherGraph& ag) {
  std::string out;
  for (int i = 0; i < static_cast<int>(ag.edges.size()); ++i) {
    const AugEdge& e = ag.edges[static_cast<std::size_t>(i)];
    out += format_line(i, e.tail, e.head, aug_kind_token(e.kind, e.parent),
                       e.weight, 1, crossing_token(e.crossing));
  }
  return out;
}

}  // namespace hexpoly
