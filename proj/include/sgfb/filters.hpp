#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include <Eigen/Dense>

namespace sgfb {

enum class Design { Ideal, MeyerOrtho, Cdf97Bior };

/// Spectral gains of a two-channel bank, indexed by eigenvalue position.
/// Analysis filters are h0/h1, synthesis filters g0/g1, and a perfect
/// reconstruction bank satisfies for all i
///   g0[i] h0[i] + g1[i] h1[i]             = c^2
///   g0[i] h0[n-1-i] - g1[i] h1[n-1-i]     = 0.
struct FilterBankSpec {
  Eigen::VectorXd h0, h1, g0, g1;
  double c = 1.0;
  Design design = Design::Ideal;

  int size() const noexcept { return static_cast<int>(h0.size()); }
};

struct PrReport {
  double max_residual_identity = 0.0;
  double max_residual_alias = 0.0;
};

FilterBankSpec ideal_design(int n);
FilterBankSpec meyer_orthogonal_design(int n);
FilterBankSpec cdf97_biorthogonal_design(int n);
FilterBankSpec make_design(Design design, int n);

PrReport verify_pr(const FilterBankSpec& spec);

/// 1 where lambda_i < lambda_max / 2, else 0.
Eigen::VectorXd value_ideal_gains(const Eigen::VectorXd& lambdas);

/// Frequency of spectral index i in a length-n bank: pi * i / (n - 1), so that
/// indices i and n-1-i always map to frequencies summing to pi.
double index_frequency(int i, int n);

/// Meyer low-pass prototype on [0, pi]: 1 below pi/3, 0 above 2pi/3,
/// cos(pi/2 * nu(3w/pi - 1)) between, nu(x) = x^4 (35 - 84x + 70x^2 - 20x^3).
double meyer_prototype(double omega);

/// CDF 9/7 low-pass taps (centre tap first), normalised to unit DC gain.
/// Derived by factoring the degree-3 Daubechies half-band polynomial at its
/// real root: the 9-tap analysis filter takes the quadratic factor, the
/// 7-tap synthesis filter the linear one.
struct Cdf97Taps {
  std::array<double, 5> analysis;
  std::array<double, 4> synthesis;
};
const Cdf97Taps& cdf97_taps();

/// Zero-phase amplitude response t[0] + 2 sum_k t[k] cos(k w).
template <std::size_t K>
double zero_phase_response(const std::array<double, K>& taps, double omega) {
  double r = taps[0];
  for (std::size_t k = 1; k < K; ++k) r += 2.0 * taps[k] * std::cos(static_cast<double>(k) * omega);
  return r;
}

std::string_view to_string(Design d);
Design parse_design(std::string_view name);

}  // namespace sgfb
