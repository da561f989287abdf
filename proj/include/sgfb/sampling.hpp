#pragma once

#include <span>

#include <Eigen/Dense>

namespace sgfb {

enum class Channel { Low, High };

// Spectral-domain folding. For an even-length spectrum x of length M:
//   down(x, Low)[i]  = x[i] + x[M-1-i]
//   down(x, High)[i] = x[i] - x[M-1-i],   i < M/2
// and up() is the transpose: [x; flip(x)] or [x; -flip(x)].
Eigen::VectorXd spectral_downsample(const Eigen::VectorXd& x, Channel ch);
Eigen::VectorXd spectral_upsample(const Eigen::VectorXd& x, Channel ch);

// Vertex-domain sampling: keep[n] is the vertex that sample n lives on.
Eigen::VectorXd vertex_downsample(const Eigen::VectorXd& f, std::span<const int> keep);
Eigen::VectorXd vertex_upsample(const Eigen::VectorXd& f, std::span<const int> keep, int n);

}  // namespace sgfb
