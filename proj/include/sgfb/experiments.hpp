#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgfb/generators.hpp"
#include "sgfb/octave.hpp"
#include "sgfb/signals.hpp"

namespace sgfb {

struct ApproxResult {
  Eigen::VectorXd estimate;
  double snr_db = 0;
};

/// Nonlinear approximation: keep the ceil(fraction * N) largest-magnitude
/// coefficients across all bands, zero the rest, synthesize.
ApproxResult nla(const Eigen::VectorXd& f, const SpectralBasis& basis,
                 const std::vector<FilterBankSpec>& specs, int levels, double fraction);

/// Zeroes every coefficient with |x| <= threshold in all bands except the
/// deepest low-pass band.
void hard_threshold(SubbandPyramid& pyramid, double threshold);

/// Hard-thresholding denoiser with threshold multiplier * sigma (3 sigma by
/// default).
Eigen::VectorXd denoise(const Eigen::VectorXd& noisy, const SpectralBasis& basis,
                        const std::vector<FilterBankSpec>& specs, int levels, double sigma,
                        double multiplier = 3.0);

/// denoise() plus the SNR of the estimate against the clean signal.
ApproxResult denoise_against(const Eigen::VectorXd& noisy, const Eigen::VectorXd& clean,
                             const SpectralBasis& basis, const std::vector<FilterBankSpec>& specs,
                             int levels, double sigma, double multiplier = 3.0);

struct PassbandResult {
  Design design = Design::Ideal;
  Eigen::VectorXd squared_error;  // E_X[i] = (value-ideal[i] - h0[i] f~[i])^2
  double distance = 0;            // ||value-ideal - h0 . f~||_2
};

/// Compares the low-pass output h0 . f~ of each design with the value-based
/// ideal low-pass output.
std::vector<PassbandResult> passband_compare(const SpectralBasis& basis, const Eigen::VectorXd& f,
                                             const std::vector<Design>& designs);

enum class Protocol { Denoise, Nla };
enum class SignalModel { SmoothExponential, LocalizedMixture, MixedSpectral };

struct ExperimentConfig {
  GraphModel graph = GraphModel::RandomSensor;
  int n = 100;
  GeneratorParams generator;
  bool vary_graph = true;  // redraw the graph for every run
  SignalModel signal = SignalModel::SmoothExponential;
  OperatorKind signal_kind = OperatorKind::Combinatorial;  // spectrum the signal is defined on
  OperatorKind kind = OperatorKind::Combinatorial;
  Design design = Design::Cdf97Bior;
  int levels = 2;
  double sigma = 0.25;     // Denoise
  double fraction = 0.25;  // Nla
};

struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  double snr_db = 0;
  double baseline_snr_db = 0;  // noisy input for Denoise; unused for Nla
};

struct ExperimentReport {
  std::string method;  // e.g. "cdf97(C)"
  Protocol protocol = Protocol::Denoise;
  ExperimentConfig config;
  std::uint64_t base_seed = 0;
  std::vector<RunRecord> runs;
  double mean_snr_db = 0;
  double mean_baseline_snr_db = 0;
};

std::string method_tag(Design design, OperatorKind kind);

/// The graph, the transform basis and the clean signal for one
/// configuration. The signal is built on the signal_kind spectrum, so every
/// transform kind sees the same signal.
struct ExperimentSetup {
  GeneratedGraph graph;
  SpectralBasis basis;
  Eigen::VectorXd signal;
};
ExperimentSetup make_setup(const ExperimentConfig& config, std::uint64_t graph_seed);
Eigen::VectorXd make_signal(SignalModel model, const SpectralBasis& basis,
                            const std::vector<int>& labels);

/// Run r uses seed base_seed + r for its noise (and its graph when
/// config.vary_graph is set; otherwise every run shares the graph drawn with
/// base_seed). Runs are independent and are spread over `threads` workers
/// (0 = hardware concurrency); the report does not depend on the schedule.
ExperimentReport monte_carlo(Protocol protocol, const ExperimentConfig& config, int runs,
                             std::uint64_t base_seed, int threads = 0);

struct PassbandConfig {
  int n = 100;
  GeneratorParams generator;  // set concentrated_fraction for the skewed sensor graph
  OperatorKind kind = OperatorKind::Combinatorial;
  double sigma = 0.05;
  std::vector<Design> designs{Design::Ideal, Design::MeyerOrtho, Design::Cdf97Bior};
};

struct PassbandReport {
  PassbandConfig config;
  std::uint64_t base_seed = 0;
  std::vector<std::vector<double>> distances;  // [run][design]
  std::vector<double> mean_distance;           // [design]
  std::vector<int> half_count;                 // #(lambda < lambda_max/2) per run
};

/// Run r draws a sensor graph and a noisy exponential spectrum, both with
/// seed base_seed + r.
PassbandReport passband_monte_carlo(const PassbandConfig& config, int runs,
                                    std::uint64_t base_seed, int threads = 0);

}  // namespace sgfb
