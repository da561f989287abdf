#include "sgfb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "sgfb/error.hpp"

namespace sgfb {

Graph Graph::build(int n, std::vector<Edge> edges) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "vertex count must be nonnegative");
  }
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has invalid weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  return g;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return a;
}

Eigen::VectorXd Graph::degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n_);
  for (const auto& e : edges_) {
    d[e.u] += e.w;
    d[e.v] += e.w;
  }
  return d;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  const auto adj = neighbors();
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

OperatorMatrix laplacian(const Graph& g, OperatorKind kind) {
  const Eigen::VectorXd d = g.degrees();
  Eigen::MatrixXd l = -g.adjacency();
  l.diagonal() = d;
  if (kind == OperatorKind::SymmetricNormalized) {
    for (int i = 0; i < g.size(); ++i) {
      if (!(d[i] > 0.0)) {
        throw Error(ErrorCode::IsolatedVertex,
                    "vertex " + std::to_string(i) +
                        " has zero degree; normalized Laplacian undefined");
      }
    }
    const Eigen::VectorXd s = d.cwiseSqrt().cwiseInverse();
    l = s.asDiagonal() * l * s.asDiagonal();
    // Exact symmetry; the two-sided scaling can differ in the last bit.
    l = 0.5 * (l + l.transpose()).eval();
    l.diagonal().setOnes();
  }
  return OperatorMatrix{kind, std::move(l)};
}

std::optional<VertexPartition> bipartite_partition(const Graph& g) {
  const int n = g.size();
  const auto adj = g.neighbors();
  std::vector<int> colour(n, -1);
  for (int start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexPartition part;
  for (int v = 0; v < n; ++v) {
    (colour[v] == 0 ? part.set_l : part.set_h).push_back(v);
  }
  return part;
}

}  // namespace sgfb
