#include "hexpoly/oracle.hpp"

#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace hexpoly {

namespace {

constexpr int kMaxEnumerationN = 4;   // 2^(n^2+1) even subgraphs
constexpr int kMaxMatchingN = 3;      // perfect matching backtracking
constexpr int kMaxSpinN = 2;          // 2^(3n^2) spin states

void check_params(const PolygonParams& prm) {
  if (!(prm.alpha > 0) || !(prm.beta > 0) || !(prm.gamma > 0))
    throw std::invalid_argument("polygon weights must be positive");
}

std::uint64_t kind_mask(const TorusHexLattice& lat, EdgeKind k) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < lat.edges.size(); ++i)
    if (lat.edges[i].kind == k) m |= std::uint64_t{1} << i;
  return m;
}

std::vector<double> pow_table(double x, int count) {
  std::vector<double> t(static_cast<std::size_t>(count) + 1);
  t[0] = 1.0;
  for (int i = 1; i <= count; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * x;
  return t;
}

// Applies fn to every XOR combination of the basis, Gray-code order.
template <typename Fn>
void for_each_even_subgraph(const std::vector<std::uint64_t>& basis, Fn&& fn) {
  std::uint64_t cur = 0;
  fn(cur);
  std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    fn(cur);
  }
}

}  // namespace

HalfEdgeWeights PolygonParams::eps() const {
  return {std::sqrt(alpha), std::sqrt(beta), std::sqrt(gamma)};
}

std::vector<std::uint64_t> cycle_space_basis(const TorusHexLattice& lat) {
  const int nv = static_cast<int>(lat.vertices.size());
  const int ne = static_cast<int>(lat.edges.size());
  if (ne > 64) throw std::invalid_argument("n too large for enumeration");

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (int i = 0; i < ne; ++i) {
    const HexEdge& e = lat.edges[static_cast<std::size_t>(i)];
    adj[static_cast<std::size_t>(e.u)].emplace_back(i, e.v);
    adj[static_cast<std::size_t>(e.v)].emplace_back(i, e.u);
  }

  std::vector<int> parent_edge(static_cast<std::size_t>(nv), -1);
  std::vector<int> parent(static_cast<std::size_t>(nv), -1);
  std::vector<int> depth(static_cast<std::size_t>(nv), -1);
  std::vector<char> in_tree(static_cast<std::size_t>(ne), 0);
  std::queue<int> bfs;
  bfs.push(0);
  depth[0] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [eid, v] : adj[static_cast<std::size_t>(u)]) {
      if (depth[static_cast<std::size_t>(v)] >= 0) continue;
      depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
      parent[static_cast<std::size_t>(v)] = u;
      parent_edge[static_cast<std::size_t>(v)] = eid;
      in_tree[static_cast<std::size_t>(eid)] = 1;
      bfs.push(v);
    }
  }

  std::vector<std::uint64_t> basis;
  for (int i = 0; i < ne; ++i) {
    if (in_tree[static_cast<std::size_t>(i)]) continue;
    std::uint64_t mask = std::uint64_t{1} << i;
    int u = lat.edges[static_cast<std::size_t>(i)].u;
    int v = lat.edges[static_cast<std::size_t>(i)].v;
    while (u != v) {
      int& deeper = depth[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(v)] ? u : v;
      mask ^= std::uint64_t{1} << parent_edge[static_cast<std::size_t>(deeper)];
      deeper = parent[static_cast<std::size_t>(deeper)];
    }
    basis.push_back(mask);
  }
  return basis;
}

double brute_Z(const TorusHexLattice& lat, const PolygonParams& prm) {
  check_params(prm);
  if (lat.n > kMaxEnumerationN)
    throw std::invalid_argument("n too large for enumeration");
  auto basis = cycle_space_basis(lat);
  std::uint64_t ma = kind_mask(lat, EdgeKind::Horizontal);
  std::uint64_t mb = kind_mask(lat, EdgeKind::NorthWest);
  std::uint64_t mc = kind_mask(lat, EdgeKind::NorthEast);
  int per_kind = lat.n * lat.n;
  auto pa = pow_table(prm.alpha, per_kind);
  auto pb = pow_table(prm.beta, per_kind);
  auto pc = pow_table(prm.gamma, per_kind);
  double z = 0.0;
  for_each_even_subgraph(basis, [&](std::uint64_t cfg) {
    z += pa[static_cast<std::size_t>(std::popcount(cfg & ma))] *
         pb[static_cast<std::size_t>(std::popcount(cfg & mb))] *
         pc[static_cast<std::size_t>(std::popcount(cfg & mc))];
  });
  return z;
}

double brute_Z_ef(const TorusHexLattice& lat, const CorrelationPath& path,
                  const PolygonParams& prm) {
  check_params(prm);
  if (lat.n > kMaxEnumerationN)
    throw std::invalid_argument("n too large for enumeration");
  if (path.half_edges.empty()) throw std::invalid_argument("empty path");

  std::uint64_t black_l = 0, white_l = 0;
  for (const HalfEdgeRef& h : path.half_edges) {
    std::uint64_t bit = std::uint64_t{1} << h.edge;
    if (h.side == Color::Black) black_l ^= bit; else white_l ^= bit;
  }

  auto basis = cycle_space_basis(lat);
  std::uint64_t ma = kind_mask(lat, EdgeKind::Horizontal);
  std::uint64_t mb = kind_mask(lat, EdgeKind::NorthWest);
  std::uint64_t mc = kind_mask(lat, EdgeKind::NorthEast);
  HalfEdgeWeights eps = prm.eps();
  int per_kind = 2 * lat.n * lat.n;  // half edges per kind
  auto pa = pow_table(eps.eps_a, per_kind);
  auto pb = pow_table(eps.eps_b, per_kind);
  auto pc = pow_table(eps.eps_c, per_kind);
  double z = 0.0;
  for_each_even_subgraph(basis, [&](std::uint64_t cfg) {
    std::uint64_t bh = cfg ^ black_l;
    std::uint64_t wh = cfg ^ white_l;
    int na = std::popcount(bh & ma) + std::popcount(wh & ma);
    int nb = std::popcount(bh & mb) + std::popcount(wh & mb);
    int nc = std::popcount(bh & mc) + std::popcount(wh & mc);
    z += pa[static_cast<std::size_t>(na)] * pb[static_cast<std::size_t>(nb)] *
         pc[static_cast<std::size_t>(nc)];
  });
  return z;
}

double brute_M(const TorusHexLattice& lat, const CorrelationPath& path,
               const PolygonParams& prm) {
  return brute_Z_ef(lat, path, prm) / brute_Z(lat, prm);
}

namespace {

double matching_sum(const std::vector<std::vector<std::pair<int, double>>>& adj,
                    std::vector<char>& matched, int from) {
  int u = from;
  while (u < static_cast<int>(matched.size()) && matched[static_cast<std::size_t>(u)]) ++u;
  if (u == static_cast<int>(matched.size())) return 1.0;
  double total = 0.0;
  matched[static_cast<std::size_t>(u)] = 1;
  for (auto [v, wt] : adj[static_cast<std::size_t>(u)]) {
    if (matched[static_cast<std::size_t>(v)]) continue;
    matched[static_cast<std::size_t>(v)] = 1;
    total += wt * matching_sum(adj, matched, u + 1);
    matched[static_cast<std::size_t>(v)] = 0;
  }
  matched[static_cast<std::size_t>(u)] = 0;
  return total;
}

}  // namespace

double brute_dimer_Z(const FisherGraph& fg, double A, double B, double C) {
  if (fg.n > kMaxMatchingN)
    throw std::invalid_argument("n too large for matching enumeration");
  std::vector<std::vector<std::pair<int, double>>> adj(
      static_cast<std::size_t>(fg.num_vertices()));
  for (const DecoratedEdge& e : fg.edges) {
    double wt = 1.0;
    switch (e.tri_kind) {
      case FisherEdgeKind::TriVertical: wt = A; break;
      case FisherEdgeKind::TriNorthEast: wt = B; break;
      case FisherEdgeKind::TriNorthWest: wt = C; break;
      case FisherEdgeKind::Link: wt = 1.0; break;
    }
    adj[static_cast<std::size_t>(e.tail)].emplace_back(e.head, wt);
    adj[static_cast<std::size_t>(e.head)].emplace_back(e.tail, wt);
  }
  std::vector<char> matched(static_cast<std::size_t>(fg.num_vertices()), 0);
  return matching_sum(adj, matched, 0);
}

double brute_one_two_corr(const TorusHexLattice& lat, const OneTwoParams& prm,
                          int e, int f) {
  if (lat.n > kMaxSpinN)
    throw std::invalid_argument("n too large for spin enumeration");
  if (!(prm.a >= 0) || !(prm.b >= 0) || !(prm.c >= 0) ||
      prm.a + prm.b + prm.c <= 0)
    throw std::invalid_argument("couplings must be nonnegative, not all zero");
  if (e == f || e < 0 || f < 0 || e >= static_cast<int>(lat.edges.size()) ||
      f >= static_cast<int>(lat.edges.size()))
    throw std::invalid_argument("need two distinct edge ids");

  double s = prm.a + prm.b + prm.c;
  double A = (prm.a - prm.b - prm.c) / s;
  double B = (prm.b - prm.a - prm.c) / s;
  double C = (prm.c - prm.a - prm.b) / s;

  const int n = lat.n;
  struct VertexEdges { int a, b, c; };
  std::vector<VertexEdges> ve(static_cast<std::size_t>(2 * n * n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      ve[static_cast<std::size_t>(lat.vertex_index(p, q, Color::Black))] = {
          lat.edge_index(p, q, EdgeKind::Horizontal),
          lat.edge_index(p, q, EdgeKind::NorthWest),
          lat.edge_index(p, q, EdgeKind::NorthEast)};
      ve[static_cast<std::size_t>(lat.vertex_index(p, q, Color::White))] = {
          lat.edge_index(p, q, EdgeKind::Horizontal),
          lat.edge_index(p, q - 1, EdgeKind::NorthWest),
          lat.edge_index(p + 1, q, EdgeKind::NorthEast)};
    }
  }

  const int ne = 3 * n * n;
  double num = 0.0, den = 0.0;
  for (std::uint64_t cfg = 0; cfg < (std::uint64_t{1} << ne); ++cfg) {
    auto spin = [&](int eid) {
      return (cfg >> eid) & 1 ? 1.0 : -1.0;
    };
    double wt = 1.0;
    for (const VertexEdges& v : ve)
      wt *= 1.0 + A * spin(v.b) * spin(v.c) + B * spin(v.a) * spin(v.c) +
            C * spin(v.a) * spin(v.b);
    den += wt;
    num += spin(e) * spin(f) * wt;
  }
  return num / den;
}

}  // namespace hexpoly
