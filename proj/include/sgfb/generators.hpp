#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sgfb/graph.hpp"

namespace sgfb {

enum class GraphModel { RandomSensor, Community, SwissRoll, RandomBipartite, Path, Ring };

// RandomSensor edge rule. Knn: symmetrised k-NN with exp(-d^2 / 2 theta^2),
// theta the mean k-NN distance. Radius: exp(-d^2 / 2 s^2) kept where >= 0.6,
// s tuned to n, unioned with each vertex's two strongest links.
enum class SensorRule { Knn, Radius };

struct GeneratorParams {
  int knn = 6;                      // RandomSensor (Knn rule), SwissRoll
  SensorRule sensor_rule = SensorRule::Radius;
  double concentrated_fraction = 0; // RandomSensor: share of points in [0,0.25]^2
  int clusters = 4;                 // Community
  double p_in = 0.3;                // Community
  double p_out = 0.002;             // Community
  double p_cross = 0.3;             // RandomBipartite
  int retry_budget = 50;
};

struct GeneratedGraph {
  Graph graph;
  // Cluster label per vertex: community block, sensor quadrant, swiss-roll
  // segment, bipartite side, or path/ring segment.
  std::vector<int> labels;
  // One row per vertex; empty for Path/Ring/RandomBipartite/Community.
  Eigen::MatrixXd coords;
  std::uint64_t seed_used = 0;
};

/// Deterministic for a fixed (model, n, params, seed). Disconnected draws are
/// discarded and redrawn with a perturbed seed; throws ConnectivityFailure
/// once params.retry_budget draws have failed.
GeneratedGraph generate(GraphModel model, int n, const GeneratorParams& params,
                        std::uint64_t seed);

GraphModel parse_graph_model(std::string_view name);
std::string_view to_string(GraphModel model);
SensorRule parse_sensor_rule(std::string_view name);
std::string_view to_string(SensorRule rule);

}  // namespace sgfb
