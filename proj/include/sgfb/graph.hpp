#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace sgfb {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Undirected weighted graph without self-loops. Edges are stored with
/// u < v and sorted lexicographically, so two graphs built from the same
/// edge set compare equal regardless of input order.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws Error with SelfLoop, NegativeWeight,
  /// IndexOutOfRange or DuplicateEdge.
  static Graph build(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Eigen::MatrixXd adjacency() const;
  Eigen::VectorXd degrees() const;
  std::vector<std::vector<int>> neighbors() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

inline Graph build_graph(int n, std::vector<Edge> edges) {
  return Graph::build(n, std::move(edges));
}

enum class OperatorKind { Combinatorial, SymmetricNormalized };

struct OperatorMatrix {
  OperatorKind kind = OperatorKind::Combinatorial;
  Eigen::MatrixXd values;

  int size() const noexcept { return static_cast<int>(values.rows()); }
};

/// L = D - A, or D^{-1/2} L D^{-1/2} for the normalized kind (which throws
/// IsolatedVertex when some degree is zero).
OperatorMatrix laplacian(const Graph& g, OperatorKind kind);

/// Two-colour split of the vertices. Both lists are ascending.
struct VertexPartition {
  std::vector<int> set_l;
  std::vector<int> set_h;
};

/// BFS two-colouring; the lowest-index vertex of every component goes to
/// set_l. Returns nullopt when an odd cycle exists.
std::optional<VertexPartition> bipartite_partition(const Graph& g);

}  // namespace sgfb
