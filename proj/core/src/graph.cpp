#include "kirchhoff/graph.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace kirchhoff {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be >= 1");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::add_edge(int i, int j) {
  check_pair(i, j);
  if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
  auto& a = adj_[static_cast<std::size_t>(i) * n_ + j];
  if (a) return;
  a = 1;
  adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
  ++edge_count_;
}

int Graph::degree(int i) const {
  check_pair(i, i);
  int d = 0;
  const std::uint8_t* row = adj_.data() + static_cast<std::size_t>(i) * n_;
  for (int j = 0; j < n_; ++j) d += row[j];
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[static_cast<std::size_t>(i) * n_ + j]) out.emplace_back(i, j);
  return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      a(i, j) = adj_[static_cast<std::size_t>(i) * n_ + j];
  return a;
}

Laplacian build_laplacian(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j) {
      if (i != j && g.has_edge(i, j)) {
        m(i, j) = -1.0;
        ++deg;
      }
    }
    m(i, i) = deg;
  }
  return Laplacian{std::move(m)};
}

namespace {

std::vector<std::vector<int>> neighbor_lists(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> nbr(n);
  for (auto [i, j] : g.edges()) {
    nbr[i].push_back(j);
    nbr[j].push_back(i);
  }
  return nbr;
}

// Single-source BFS hop counts; -1 marks unreachable nodes.
std::vector<int> bfs_hops(const std::vector<std::vector<int>>& nbr, int source) {
  const int n = static_cast<int>(nbr.size());
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : nbr[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  const auto nbr = neighbor_lists(g);
  const auto dist = bfs_hops(nbr, 0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

Eigen::MatrixXd shortest_path_distances(const Graph& g) {
  const int n = g.node_count();
  const auto nbr = neighbor_lists(g);
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d(n, n);
  for (int s = 0; s < n; ++s) {
    const auto hops = bfs_hops(nbr, s);
    for (int t = 0; t < n; ++t) d(s, t) = hops[t] < 0 ? inf : hops[t];
  }
  return d;
}

double wiener_index(const Graph& g) {
  const auto d = shortest_path_distances(g);
  double sum = 0.0;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = i + 1; j < d.cols(); ++j) sum += d(i, j);
  return sum;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw EdgeListError(1, "missing header line \"n=<count>\"");
  ++lineno;
  if (line.rfind("n=", 0) != 0) throw EdgeListError(lineno, "expected header \"n=<count>\"");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(line.substr(2), &pos);
    if (pos != line.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw EdgeListError(lineno, "malformed node count in header");
  }
  if (n < 1) throw EdgeListError(lineno, "node count must be >= 1");

  Graph g(n);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    int i = 0, j = 0;
    std::string extra;
    if (!(row >> i >> j) || (row >> extra))
      throw EdgeListError(lineno, "expected \"i j\"");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw EdgeListError(lineno, "node index out of range");
    if (i >= j) throw EdgeListError(lineno, "edges must satisfy i < j");
    if (g.has_edge(i, j)) throw EdgeListError(lineno, "duplicate edge");
    g.add_edge(i, j);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n=" << g.node_count() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

}  // namespace kirchhoff
