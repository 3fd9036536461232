#include "graphlets/generators.hpp"

#include <cmath>

#include "graphlets/rng.hpp"
#include "graphlets/spectral.hpp"

namespace graphlets {

namespace {

constexpr int kMaxResamples = 100;

/// One attempt of an independent-pair draw; pairs(u, v, counter) returns the
/// edge probability and consumes one counter slot per unordered pair.
template <typename Prob>
std::vector<WeightedEdge> draw_pairs(int n, std::uint64_t seed, std::uint64_t salt, Prob prob) {
  std::vector<WeightedEdge> edges;
  std::uint64_t counter = salt;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++counter) {
      const double p = prob(u, v);
      if (rng::u01(seed, counter) < p) edges.push_back({u, v, 1.0});
    }
  }
  return edges;
}

bool covers_all(int n, const std::vector<WeightedEdge>& edges) {
  std::vector<char> hit(n, 0);
  for (const auto& e : edges) hit[e.u] = hit[e.v] = 1;
  for (char c : hit) {
    if (!c) return false;
  }
  return true;
}

template <typename Prob>
Graph draw_until_covered(int n, std::uint64_t seed, Prob prob) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    auto edges = draw_pairs(n, seed, attempt * pairs, prob);
    if (covers_all(n, edges)) return Graph::from_edges(n, edges);
  }
  throw IsolationRetryExhausted("an isolated vertex survived " + std::to_string(kMaxResamples) + " resamples");
}

}  // namespace

Graph chung_lu(const Eigen::VectorXd& weights, std::uint64_t seed) {
  const int n = static_cast<int>(weights.size());
  if (n < 2) throw SizeTooSmall("need at least 2 vertices");
  if (weights.minCoeff() <= 0.0) throw InvalidArgument("weights must be positive");
  const double total = weights.sum();
  const double wmax = weights.maxCoeff();
  if (wmax * wmax / total > 1.0 + 1e-12) {
    throw ProbabilityOverflow("max pair probability " + std::to_string(wmax * wmax / total) + " exceeds 1");
  }
  return draw_until_covered(n, seed, [&](int u, int v) { return weights(u) * weights(v) / total; });
}

UnionSample union_quasirandom(const std::vector<Eigen::VectorXd>& weight_lists, std::uint64_t seed) {
  if (weight_lists.empty()) throw InvalidArgument("need at least one weight vector");
  const int n = static_cast<int>(weight_lists.front().size());
  for (const auto& w : weight_lists) {
    if (w.size() != n) throw VertexCountMismatch("weight vectors must share one vertex set");
  }
  std::vector<Graph> parts;
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
  RankKSplit split;
  for (std::size_t j = 0; j < weight_lists.size(); ++j) {
    parts.push_back(chung_lu(weight_lists[j], rng::hash(seed, j + 1)));
    total += parts.back().adjacency();
    split.parts.push_back(parts.back().degrees());
  }
  return {Graph::from_adjacency(total), std::move(parts), std::move(split)};
}

Graph bipartite_quasirandom(const Eigen::VectorXd& wx, const Eigen::VectorXd& wy, std::uint64_t seed) {
  const int a = static_cast<int>(wx.size());
  const int b = static_cast<int>(wy.size());
  if (a < 1 || b < 1) throw SizeTooSmall("both sides need vertices");
  if (wx.minCoeff() <= 0.0 || wy.minCoeff() <= 0.0) throw InvalidArgument("weights must be positive");
  const double sx = wx.sum(), sy = wy.sum();
  // p = wx wy / c with expected volume 2 sx sy / c = sx + sy
  const double c = 2.0 * sx * sy / (sx + sy);
  const double pmax = wx.maxCoeff() * wy.maxCoeff() / c;
  if (pmax > 1.0 + 1e-12) {
    throw ProbabilityOverflow("max cross probability " + std::to_string(pmax) + " exceeds 1");
  }
  // side X gets ids 0..a-1, side Y gets a..a+b-1
  return draw_until_covered(a + b, seed, [&](int u, int v) {
    const bool ux = u < a, vx = v < a;
    if (ux == vx) return 0.0;
    const double pu = ux ? wx(u) : wy(u - a);
    const double pv = vx ? wx(v) : wy(v - a);
    return pu * pv / c;
  });
}

Graph blowup(const Graph& g, int k) {
  if (k < 1) throw SizeTooSmall("blow-up factor must be >= 1");
  if (k == 1) return g;
  const int n = g.n();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n * k, n * k);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || g.weight(u, v) == 0.0) continue;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) adj(u * k + i, v * k + j) = g.weight(u, v);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Eigen::MatrixXd dense_universal_basis(const Graph& h, int m) {
  if (m < 1) throw SizeTooSmall("block size must be >= 1");
  const int hn = h.n();
  const int n = hn * m;
  const SpectralSummary s = spectrum(h);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < hn; ++j) {
    for (int u = 0; u < hn; ++u) {
      for (int t = 0; t < m; ++t) basis(u * m + t, j) = s.combinatorial(u, j);
    }
  }
  // block-supported real Fourier patterns: cos(2 pi t r / m), r = 1..m/2, and
  // sin(2 pi t r / m), r = 1..ceil(m/2)-1 — together m-1 zero-sum vectors
  int col = hn;
  const double tau = 6.283185307179586;
  for (int u = 0; u < hn; ++u) {
    for (int r = 1; r <= m / 2; ++r) {
      for (int t = 0; t < m; ++t) basis(u * m + t, col) = std::cos(tau * t * r / m);
      ++col;
    }
    for (int r = 1; r <= (m + 1) / 2 - 1; ++r) {
      for (int t = 0; t < m; ++t) basis(u * m + t, col) = std::sin(tau * t * r / m);
      ++col;
    }
  }
  return basis;
}

Graph complete_graph(int n) {
  if (n < 2) throw SizeTooSmall("complete graph needs n >= 2");
  return Graph::from_adjacency(Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw SizeTooSmall("complete bipartite graph needs a,b >= 1");
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(a + b, a + b);
  adj.topRightCorner(a, b).setOnes();
  adj.bottomLeftCorner(b, a).setOnes();
  return Graph::from_adjacency(std::move(adj));
}

Graph path_graph(int n) {
  if (n < 2) throw SizeTooSmall("path needs n >= 2");
  std::vector<WeightedEdge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw SizeTooSmall("cycle needs n >= 3");
  std::vector<WeightedEdge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1.0});
  return Graph::from_edges(n, edges);
}

Graph matching_graph(int pairs) {
  if (pairs < 1) throw SizeTooSmall("matching needs at least one edge");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < pairs; ++i) edges.push_back({2 * i, 2 * i + 1, 1.0});
  return Graph::from_edges(2 * pairs, edges);
}

}  // namespace graphlets
