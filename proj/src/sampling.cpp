#include "sgfb/sampling.hpp"

#include <string>
#include <vector>

#include "sgfb/error.hpp"

namespace sgfb {

Eigen::VectorXd spectral_downsample(const Eigen::VectorXd& x, Channel ch) {
  const Eigen::Index m = x.size();
  if (m % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                "spectral downsampling needs even length, got " + std::to_string(m));
  }
  const double sign = ch == Channel::Low ? 1.0 : -1.0;
  Eigen::VectorXd y(m / 2);
  for (Eigen::Index i = 0; i < m / 2; ++i) y[i] = x[i] + sign * x[m - 1 - i];
  return y;
}

Eigen::VectorXd spectral_upsample(const Eigen::VectorXd& x, Channel ch) {
  const Eigen::Index m = x.size();
  const double sign = ch == Channel::Low ? 1.0 : -1.0;
  Eigen::VectorXd y(2 * m);
  y.head(m) = x;
  for (Eigen::Index i = 0; i < m; ++i) y[2 * m - 1 - i] = sign * x[i];
  return y;
}

namespace {

void check_keep(std::span<const int> keep, Eigen::Index n) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "sample index " + std::to_string(k) + " outside [0," +
                      std::to_string(n) + ")");
    }
    if (used[k]) {
      throw Error(ErrorCode::InvalidArgument,
                  "sample index " + std::to_string(k) + " repeated");
    }
    used[k] = 1;
  }
}

}  // namespace

Eigen::VectorXd vertex_downsample(const Eigen::VectorXd& f, std::span<const int> keep) {
  check_keep(keep, f.size());
  Eigen::VectorXd out(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) out[i] = f[keep[i]];
  return out;
}

Eigen::VectorXd vertex_upsample(const Eigen::VectorXd& f, std::span<const int> keep, int n) {
  if (static_cast<std::size_t>(f.size()) != keep.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "sample count " + std::to_string(f.size()) + " != index count " +
                    std::to_string(keep.size()));
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "target length must be nonnegative");
  check_keep(keep, n);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < keep.size(); ++i) out[keep[i]] = f[i];
  return out;
}

}  // namespace sgfb
