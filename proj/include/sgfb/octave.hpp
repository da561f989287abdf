#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgfb/filterbank.hpp"

namespace sgfb {

struct Band {
  std::string id;  // "H", "LH", "LLH", ..., and "L...L" for the residual low band
  int depth = 0;   // number of folding stages; length is n / 2^depth
  Eigen::VectorXd values;
};

/// Output of an L-level octave-band analysis. Bands are ordered coarse to
/// fine: the deepest low band first, then high bands from level L-1 down to
/// level 0.
struct SubbandPyramid {
  int n = 0;
  int levels = 0;
  std::vector<Band> bands;

  std::size_t coefficient_count() const;
  const Band& band(const std::string& id) const;
};

/// Per-level specs for an L-level cascade; level k has length n / 2^k.
std::vector<FilterBankSpec> design_cascade(Design design, int n, int levels);

/// Throws DepthTooLarge unless n / 2^k is even for every k < levels.
void check_depth(int n, int levels);

// The cascade never leaves the spectral domain: the low band of level k is
// fed straight into level k+1 without an inverse GFT.
SubbandPyramid analyze_octave_spectrum(const std::vector<FilterBankSpec>& specs,
                                       const Eigen::VectorXd& ftilde, int levels);
Eigen::VectorXd synthesize_octave_spectrum(const std::vector<FilterBankSpec>& specs,
                                           const SubbandPyramid& pyramid);

SubbandPyramid analyze_octave(const SpectralBasis& basis, const std::vector<FilterBankSpec>& specs,
                              const Eigen::VectorXd& f, int levels);
Eigen::VectorXd synthesize_octave(const SpectralBasis& basis,
                                  const std::vector<FilterBankSpec>& specs,
                                  const SubbandPyramid& pyramid);

/// One band of the merged cascade: every input slot j contributes
/// sign[j] * analysis_gain[j] * ftilde[j] to output slot target[j].
struct MergedBand {
  std::string id;
  int depth = 0;
  int length = 0;
  Eigen::VectorXd analysis_gain;
  Eigen::VectorXd synthesis_gain;  // includes the 1/c^2 factors of every stage
  std::vector<int> target;
  Eigen::VectorXd sign;
};

/// The cascade with all filters pulled to the front (one diagonal gain per
/// band) and all foldings composed into a single index map.
struct MergedBandOperator {
  int n = 0;
  int levels = 0;
  std::vector<MergedBand> bands;

  SubbandPyramid analyze(const Eigen::VectorXd& ftilde) const;
  Eigen::VectorXd synthesize(const SubbandPyramid& pyramid) const;
};

MergedBandOperator merge_octave(const std::vector<FilterBankSpec>& specs, int levels);

}  // namespace sgfb
