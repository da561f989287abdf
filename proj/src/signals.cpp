#include "sgfb/signals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "sgfb/error.hpp"

namespace sgfb {

Eigen::VectorXd gen_smooth_signal(const SpectralBasis& basis) {
  return igft(basis, (-basis.values.array() / 4.0).exp().matrix());
}

std::vector<SpectralRange> default_localized_ranges(int n) {
  constexpr std::array<std::array<int, 2>, 4> kReference{{{9, 29}, {59, 79}, {149, 169}, {299, 319}}};
  std::vector<SpectralRange> out;
  for (const auto& [lo, hi] : kReference) {
    auto scale = [n](int idx) {
      const long r = std::lround(static_cast<double>(idx) * n / 400.0);
      return static_cast<int>(std::min<long>(r, n - 1));
    };
    out.push_back({scale(lo), scale(hi)});
  }
  return out;
}

Eigen::VectorXd localized_component(const SpectralBasis& basis, const std::vector<int>& labels,
                                    int cluster, SpectralRange range) {
  const int n = basis.size();
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "cluster labels do not cover all vertices");
  }
  if (range.lo < 0 || range.hi >= n || range.lo > range.hi) {
    throw Error(ErrorCode::RangeOutOfSpectrum,
                "index range [" + std::to_string(range.lo) + "," + std::to_string(range.hi) +
                    "] outside spectrum of size " + std::to_string(n));
  }
  if (std::find(labels.begin(), labels.end(), cluster) == labels.end()) {
    throw Error(ErrorCode::EmptyCluster, "no vertex in cluster " + std::to_string(cluster));
  }
  const double lo = basis.values[range.lo];
  const double hi = basis.values[range.hi];
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    if (lo <= basis.values[l] && basis.values[l] <= hi) sum += basis.vectors.col(l);
  }
  for (int i = 0; i < n; ++i) {
    if (labels[i] != cluster) sum[i] = 0.0;
  }
  return sum;
}

namespace {

Eigen::VectorXd inf_normalized(Eigen::VectorXd v, int cluster) {
  const double m = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  if (!(m > 0.0)) {
    throw Error(ErrorCode::EmptyCluster,
                "localized component on cluster " + std::to_string(cluster) + " is zero");
  }
  return v / m;
}

}  // namespace

Eigen::VectorXd gen_localized_signal(const SpectralBasis& basis, const std::vector<int>& labels,
                                     const std::vector<SpectralRange>& ranges) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(basis.size());
  for (std::size_t j = 0; j < ranges.size(); ++j) {
    const int cluster = static_cast<int>(j);
    f += inf_normalized(localized_component(basis, labels, cluster, ranges[j]), cluster);
  }
  return f;
}

Eigen::VectorXd gen_mixed_signal(const SpectralBasis& basis, const MixedParams& params) {
  Eigen::VectorXd f = gen_smooth_signal(basis);
  if (params.weight == 0.0) return f;
  return f + params.weight * inf_normalized(localized_component(basis, params.labels,
                                                                params.cluster, params.range),
                                            params.cluster);
}

Eigen::VectorXd add_noise(const Eigen::VectorXd& f, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be nonnegative");
  if (sigma == 0.0) return f;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  Eigen::VectorXd out = f;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += noise(rng);
  return out;
}

Eigen::VectorXd noisy_exponential_spectrum(const SpectralBasis& basis, double sigma,
                                           std::uint64_t seed) {
  return add_noise((-basis.values.array() / 4.0).exp().matrix(), sigma, seed);
}

double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate) {
  if (reference.size() != estimate.size()) {
    throw Error(ErrorCode::DimensionMismatch, "SNR operands differ in length");
  }
  const double ref = reference.norm();
  if (!(ref > 0.0)) throw Error(ErrorCode::ZeroReference, "reference signal is zero");
  const double err = (reference - estimate).norm();
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(ref / err);
}

}  // namespace sgfb
