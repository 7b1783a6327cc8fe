// Test-only reference implementations, kept independent of the code paths
// they check: pseudoinverses come from QR/LU routes instead of the
// eigendecomposition, connectivity from union-find instead of BFS, and
// shortest paths from Floyd-Warshall.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "kirchhoff/er_model.hpp"
#include "kirchhoff/graph.hpp"

namespace oracle {

// Moore-Penrose pseudoinverse via complete orthogonal decomposition.
inline Eigen::MatrixXd pinv_qr(const Eigen::MatrixXd& m) {
  return m.completeOrthogonalDecomposition().pseudoInverse();
}

// For a connected graph, L + (1/n) ones is invertible and its inverse equals
// pinv(L) + (1/n) ones; solved with LU, so no spectral code is involved.
inline Eigen::MatrixXd pinv_connected_lu(const Eigen::MatrixXd& lap) {
  const auto n = lap.rows();
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  return (lap + ones).partialPivLu().solve(Eigen::MatrixXd::Identity(n, n)) - ones;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline int component_count(const kirchhoff::Graph& g) {
  UnionFind uf(g.node_count());
  for (auto [i, j] : g.edges()) uf.unite(i, j);
  int count = 0;
  for (int v = 0; v < g.node_count(); ++v)
    if (uf.find(v) == v) ++count;
  return count;
}

inline bool connected(const kirchhoff::Graph& g) { return component_count(g) == 1; }

inline Eigen::MatrixXd floyd_warshall(const kirchhoff::Graph& g) {
  const int n = g.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, inf);
  for (int i = 0; i < n; ++i) d(i, i) = 0.0;
  for (auto [i, j] : g.edges()) d(i, j) = d(j, i) = 1.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
  return d;
}

// Resamples with incrementing seeds until the draw is connected (union-find
// route); returns the graph actually used.
inline kirchhoff::Graph random_connected_graph(int n, double p, std::uint64_t& seed) {
  for (;;) {
    kirchhoff::Graph g = kirchhoff::sample_er({n, p, seed++});
    if (connected(g)) return g;
  }
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;      // sample standard deviation
  double se = 0.0;      // standard error of the mean
};

inline MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) out.mean += x;
  out.mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.sd = std::sqrt(ss / (n - 1.0));
  out.se = out.sd / std::sqrt(n);
  return out;
}

}  // namespace oracle
