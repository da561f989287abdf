#include "sgfb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

// Symmetrised k-nearest-neighbour graph with Gaussian weights
// exp(-d^2 / (2 theta^2)), theta being the mean k-NN distance.
Graph knn_graph(const Eigen::MatrixXd& pts, int k) {
  const int n = static_cast<int>(pts.rows());
  k = std::min(k, n - 1);
  std::vector<std::vector<std::pair<double, int>>> nearest(n);
  double dist_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> cand;
    cand.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j != i) cand.emplace_back((pts.row(i) - pts.row(j)).norm(), j);
    }
    std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
    cand.resize(k);
    for (const auto& c : cand) dist_sum += c.first;
    nearest[i] = std::move(cand);
  }
  const double theta = dist_sum / (static_cast<double>(n) * k);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [d, j] : nearest[i]) {
      const double wij = theta > 0 ? std::exp(-d * d / (2 * theta * theta)) : 1.0;
      w(i, j) = wij;
      w(j, i) = wij;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w(i, j) > 0) edges.push_back({i, j, w(i, j)});
    }
  }
  return Graph::build(n, std::move(edges));
}

Graph radius_graph(const Eigen::MatrixXd& pts) {
  constexpr double kCutoffWeight = 0.6;
  constexpr int kMinLinks = 2;
  const int n = static_cast<int>(pts.rows());
  const double cutoff = 2.0 / std::sqrt(static_cast<double>(n));
  const double two_s2 = -cutoff * cutoff / std::log(kCutoffWeight);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w(i, j) = std::exp(-(pts.row(i) - pts.row(j)).squaredNorm() / two_s2);
    }
  }
  // Strongest links per vertex, symmetrised by averaging; they override the cutoff.
  Eigen::MatrixXd strong = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const int links = std::min(kMinLinks, n - 1);
    std::partial_sort(order.begin(), order.begin() + links + 1, order.end(),
                      [&](int a, int b) { return w(i, a) > w(i, b); });
    int taken = 0;
    for (int j : order) {
      if (taken == links) break;
      if (j == i) continue;
      strong(i, j) = w(i, j);
      ++taken;
    }
  }
  strong = (0.5 * (strong + strong.transpose())).eval();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double wij = strong(i, j) > 0 ? strong(i, j) : (w(i, j) >= kCutoffWeight ? w(i, j) : 0);
      if (wij > 0) edges.push_back({i, j, wij});
    }
  }
  return Graph::build(n, std::move(edges));
}

GeneratedGraph sensor(int n, const GeneratorParams& p, std::mt19937_64& rng) {
  if (p.concentrated_fraction < 0 || p.concentrated_fraction > 1) {
    throw Error(ErrorCode::InvalidArgument, "concentrated_fraction must lie in [0,1]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int dense = static_cast<int>(std::lround(p.concentrated_fraction * n));
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) {
    const double scale = i < dense ? 0.25 : 1.0;
    pts(i, 0) = scale * unit(rng);
    pts(i, 1) = scale * unit(rng);
  }
  GeneratedGraph out;
  out.graph = p.sensor_rule == SensorRule::Radius ? radius_graph(pts) : knn_graph(pts, p.knn);
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    out.labels[i] = (pts(i, 0) >= 0.5 ? 1 : 0) + (pts(i, 1) >= 0.5 ? 2 : 0);
  }
  out.coords = std::move(pts);
  return out;
}

GeneratedGraph swiss_roll(int n, const GeneratorParams& p, std::mt19937_64& rng) {
  constexpr double pi = std::numbers::pi;
  const double t_lo = 1.5 * pi;
  const double t_hi = 4.5 * pi;
  std::uniform_real_distribution<double> t_dist(t_lo, t_hi);
  std::uniform_real_distribution<double> h_dist(0.0, 21.0);
  Eigen::MatrixXd pts(n, 3);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    const double t = t_dist(rng);
    pts(i, 0) = t * std::cos(t);
    pts(i, 1) = h_dist(rng);
    pts(i, 2) = t * std::sin(t);
    labels[i] = std::min(3, static_cast<int>(4 * (t - t_lo) / (t_hi - t_lo)));
  }
  GeneratedGraph out;
  out.graph = knn_graph(pts, p.knn);
  out.labels = std::move(labels);
  out.coords = std::move(pts);
  return out;
}

GeneratedGraph community(int n, const GeneratorParams& p, std::mt19937_64& rng) {
  if (p.clusters < 1 || p.clusters > n) {
    throw Error(ErrorCode::InvalidArgument, "cluster count must lie in [1, n]");
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(static_cast<long long>(i) * p.clusters / n);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double prob = labels[i] == labels[j] ? p.p_in : p.p_out;
      if (unit(rng) < prob) edges.push_back({i, j, 1.0});
    }
  }
  GeneratedGraph out;
  out.graph = Graph::build(n, std::move(edges));
  out.labels = std::move(labels);
  return out;
}

GeneratedGraph random_bipartite(int n, const GeneratorParams& p, std::mt19937_64& rng) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "random bipartite graphs need even n");
  }
  const int half = n / 2;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::vector<Edge> edges;
  for (int i = 0; i < half; ++i) {
    for (int j = half; j < n; ++j) {
      if (unit(rng) < p.p_cross) edges.push_back({i, j, weight(rng)});
    }
  }
  GeneratedGraph out;
  out.graph = Graph::build(n, std::move(edges));
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) out.labels[i] = i < half ? 0 : 1;
  return out;
}

GeneratedGraph chain(int n, bool closed) {
  if (closed && n < 3) {
    throw Error(ErrorCode::InvalidArgument, "ring graphs need n >= 3");
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  if (closed) edges.push_back({0, n - 1, 1.0});
  GeneratedGraph out;
  out.graph = Graph::build(n, std::move(edges));
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) out.labels[i] = std::min(3, 4 * i / n);
  return out;
}

}  // namespace

GeneratedGraph generate(GraphModel model, int n, const GeneratorParams& params,
                        std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "generators need n >= 2");
  if ((model == GraphModel::RandomSensor || model == GraphModel::SwissRoll) &&
      params.knn < 1) {
    throw Error(ErrorCode::InvalidArgument, "k-NN count must be positive");
  }
  if (model == GraphModel::Path || model == GraphModel::Ring) {
    auto out = chain(n, model == GraphModel::Ring);
    out.seed_used = seed;
    return out;
  }
  for (int attempt = 0; attempt < std::max(1, params.retry_budget); ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt) * kSeedStride;
    std::mt19937_64 rng(s);
    GeneratedGraph out;
    switch (model) {
      case GraphModel::RandomSensor: out = sensor(n, params, rng); break;
      case GraphModel::SwissRoll: out = swiss_roll(n, params, rng); break;
      case GraphModel::Community: out = community(n, params, rng); break;
      case GraphModel::RandomBipartite: out = random_bipartite(n, params, rng); break;
      default: break;
    }
    if (out.graph.is_connected()) {
      out.seed_used = s;
      return out;
    }
  }
  throw Error(ErrorCode::ConnectivityFailure,
              "no connected " + std::string(to_string(model)) + " graph after " +
                  std::to_string(params.retry_budget) + " draws");
}

GraphModel parse_graph_model(std::string_view name) {
  if (name == "sensor" || name == "random-sensor") return GraphModel::RandomSensor;
  if (name == "community") return GraphModel::Community;
  if (name == "swissroll" || name == "swiss-roll") return GraphModel::SwissRoll;
  if (name == "bipartite" || name == "random-bipartite") return GraphModel::RandomBipartite;
  if (name == "path") return GraphModel::Path;
  if (name == "ring") return GraphModel::Ring;
  throw Error(ErrorCode::InvalidArgument, "unknown graph model '" + std::string(name) + "'");
}

std::string_view to_string(GraphModel model) {
  switch (model) {
    case GraphModel::RandomSensor: return "sensor";
    case GraphModel::Community: return "community";
    case GraphModel::SwissRoll: return "swissroll";
    case GraphModel::RandomBipartite: return "bipartite";
    case GraphModel::Path: return "path";
    case GraphModel::Ring: return "ring";
  }
  return "unknown";
}

SensorRule parse_sensor_rule(std::string_view name) {
  if (name == "knn") return SensorRule::Knn;
  if (name == "radius") return SensorRule::Radius;
  throw Error(ErrorCode::InvalidArgument, "unknown sensor rule '" + std::string(name) + "'");
}

std::string_view to_string(SensorRule rule) {
  return rule == SensorRule::Radius ? "radius" : "knn";
}

}  // namespace sgfb
