#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kirchhoff {

/// Simple undirected graph on nodes 0..n-1 with dense 0/1 adjacency.
/// No self-loops, no multi-edges; adjacency is kept symmetric by
/// construction.
class Graph {
 public:
  explicit Graph(int n);

  static Graph path(int n);
  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int node_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int i, int j) const {
    check_pair(i, j);
    return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }

  /// Inserts edge {i,j}; no-op if already present. Throws on self-loops and
  /// out-of-range nodes.
  void add_edge(int i, int j);

  int degree(int i) const;

  /// All edges as (i,j) pairs with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  Eigen::MatrixXd adjacency_matrix() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_pair(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::invalid_argument("Graph: node index out of range");
  }

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major n*n, symmetric, zero diagonal
};

/// Combinatorial Laplacian L = D - A of a graph. Symmetric, positive
/// semidefinite, rows sum to zero, diagonal holds node degrees.
struct Laplacian {
  Eigen::MatrixXd matrix;
  int size() const { return static_cast<int>(matrix.rows()); }
};

Laplacian build_laplacian(const Graph& g);

/// True iff a breadth-first search from node 0 reaches every node.
bool is_connected(const Graph& g);

/// Hop-count matrix: entry (i,j) is the minimum number of edges between i
/// and j, +infinity when no path exists, 0 on the diagonal.
Eigen::MatrixXd shortest_path_distances(const Graph& g);

/// Sum of hop counts over unordered pairs; +infinity for disconnected graphs.
double wiener_index(const Graph& g);

/// Parse failure in the edge-list text format; line() is 1-based.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(int line, const std::string& what)
      : std::runtime_error("edge list, line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format: a header line "n=<count>" followed by one "i j"
// line per edge, 0-indexed with i < j.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace kirchhoff
