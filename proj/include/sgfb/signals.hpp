#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sgfb/spectral_basis.hpp"

namespace sgfb {

/// f = U exp(-lambda / 4).
Eigen::VectorXd gen_smooth_signal(const SpectralBasis& basis);

/// Inclusive eigenvalue-index range [lo, hi]; selects every eigenvector whose
/// eigenvalue lies in [lambda_lo, lambda_hi].
struct SpectralRange {
  int lo = 0;
  int hi = 0;
};

/// The four index ranges (9,29), (59,79), (149,169), (299,319) defined for
/// N = 400, rescaled to n by rounding idx * n / 400.
std::vector<SpectralRange> default_localized_ranges(int n);

/// Unnormalised component: on vertices labelled `cluster`, the sum of all
/// eigenvectors in `range`; zero elsewhere.
Eigen::VectorXd localized_component(const SpectralBasis& basis, const std::vector<int>& labels,
                                    int cluster, SpectralRange range);

/// sum_j f_j / ||f_j||_inf where component j lives on cluster j and uses
/// ranges[j]. Throws RangeOutOfSpectrum or EmptyCluster (||f_j||_inf = 0).
Eigen::VectorXd gen_localized_signal(const SpectralBasis& basis, const std::vector<int>& labels,
                                     const std::vector<SpectralRange>& ranges);

struct MixedParams {
  std::vector<int> labels;
  int cluster = 0;
  SpectralRange range;
  double weight = 1.0;  // scale of the inf-normalised localized component
};

/// Smooth signal plus weight * f_j / ||f_j||_inf.
Eigen::VectorXd gen_mixed_signal(const SpectralBasis& basis, const MixedParams& params);

/// f + e with e i.i.d. N(0, sigma^2) drawn from a generator seeded by `seed`.
Eigen::VectorXd add_noise(const Eigen::VectorXd& f, double sigma, std::uint64_t seed);

/// Spectrum exp(-lambda / 4) + e, e i.i.d. N(0, sigma^2).
Eigen::VectorXd noisy_exponential_spectrum(const SpectralBasis& basis, double sigma,
                                           std::uint64_t seed);

/// 20 log10(||ref|| / ||ref - est||); +infinity when the two are identical.
/// Throws ZeroReference for a zero reference.
double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate);

}  // namespace sgfb
