#pragma once

#include <Eigen/Dense>

#include "sgfb/filters.hpp"
#include "sgfb/spectral_basis.hpp"

namespace sgfb {

/// Spectral-domain subband pair produced by one analysis stage.
struct TwoBand {
  Eigen::VectorXd low;
  Eigen::VectorXd high;
};

// One analysis/synthesis stage acting directly on GFT coefficients:
//   low  = S_{d,0} H0 ftilde,   high = S_{d,1} H1 ftilde
//   ftilde_hat = (G0 S_{u,0} low + G1 S_{u,1} high) / c^2
TwoBand analyze_spectrum(const FilterBankSpec& spec, const Eigen::VectorXd& ftilde);
Eigen::VectorXd synthesize_spectrum(const FilterBankSpec& spec, const Eigen::VectorXd& low,
                                    const Eigen::VectorXd& high);

// Vertex-domain wrappers: the forward GFT happens before analysis and the
// inverse GFT after synthesis. Subband coefficients stay spectral.
TwoBand analyze_one_level(const SpectralBasis& basis, const FilterBankSpec& spec,
                          const Eigen::VectorXd& f);
Eigen::VectorXd synthesize_one_level(const SpectralBasis& basis, const FilterBankSpec& spec,
                                     const Eigen::VectorXd& low, const Eigen::VectorXd& high);

/// T = G0 S_{u,0} S_{d,0} H0 + G1 S_{u,1} S_{d,1} H1 in the spectral domain.
/// Equals c^2 I exactly when the spec satisfies the PR identities.
Eigen::MatrixXd transfer_matrix(const FilterBankSpec& spec);

/// Polyphase matrices: four diagonal N/2 blocks each,
///   hpoly = [H0(Lu)  H0(Ll')]     gpoly = [G0(Lu)   G1(Lu) ]
///           [H1(Lu) -H1(Ll')]             [G0(Ll') -G1(Ll')]
/// where Lu are the lower N/2 eigenvalue slots and Ll' the upper ones in
/// reversed order. gpoly * hpoly = c^2 I for a PR spec.
struct PolyphasePair {
  Eigen::MatrixXd hpoly;
  Eigen::MatrixXd gpoly;
};
PolyphasePair polyphase_matrices(const FilterBankSpec& spec);

/// Reorders a spectrum as [ftilde_upper; J ftilde_lower], the input hpoly
/// expects.
Eigen::VectorXd polyphase_input(const Eigen::VectorXd& ftilde);

/// Stacked N x N analysis operator [S_{d,0} H0; S_{d,1} H1] U^T and the
/// matching synthesis operator (with the 1/c^2 factor).
Eigen::MatrixXd analysis_matrix(const SpectralBasis& basis, const FilterBankSpec& spec);
Eigen::MatrixXd synthesis_matrix(const SpectralBasis& basis, const FilterBankSpec& spec);

}  // namespace sgfb
