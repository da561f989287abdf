#pragma once

#include <span>

#include <Eigen/Dense>

#include "sgfb/filters.hpp"
#include "sgfb/graph.hpp"
#include "sgfb/spectral_basis.hpp"

namespace sgfb {

/// Schur complement L_KK - L_KC L_CC^{-1} L_CK onto the kept vertices (in
/// the order given). Throws SingularComplementBlock when L_CC has condition
/// number above 1e12.
Eigen::MatrixXd kron_reduce(const OperatorMatrix& op, std::span<const int> keep);

/// Paired eigenbasis of the normalized Laplacian of a bipartite graph with
/// |set_l| = |set_h| = N/2. In (set_l, set_h) vertex order,
///   W = [U_LL  U_LL; U_HL  -U_HL],   eigenvalues [lambda_l; 2 - lambda_l]
/// with lambda_l ascending in [0, 1]. Built from the SVD of the off-diagonal
/// block L_LH = 2 U_LL (Lambda_l - I) U_HL^T, so eigenvector pairs for lambda
/// and 2 - lambda stay matched even inside degenerate eigenspaces.
struct BipartiteBasis {
  VertexPartition part;
  Eigen::MatrixXd ull;  // N/2 x N/2, columns of norm 1/sqrt(2)
  Eigen::MatrixXd uhl;
  Eigen::VectorXd lambda_l;

  int size() const noexcept { return 2 * static_cast<int>(lambda_l.size()); }

  /// W in the original vertex order (eigenvalues [lambda_l; 2 - lambda_l]).
  SpectralBasis paired() const;
  /// W diag(I, J) in the original vertex order: eigenvalues ascending.
  SpectralBasis ascending() const;
};

/// Throws NotBipartite, UnequalHalves or IsolatedVertex.
BipartiteBasis bipartite_basis(const Graph& g);

/// sum = U_LL^T f_l + U_HL^T f_h and diff = J (U_LL^T f_l - U_HL^T f_h),
/// with f_l / f_h the restrictions of f to set_l / set_h. [sum; diff] is the
/// ascending-order GFT of f, computed from each vertex half separately.
struct PolyphaseSplit {
  Eigen::VectorXd sum;
  Eigen::VectorXd diff;
};
PolyphaseSplit bipartite_polyphase_split(const Eigen::VectorXd& f, const VertexPartition& part,
                                         const Eigen::MatrixXd& ull, const Eigen::MatrixXd& uhl);

/// Spectral-vs-vertex downsampling on a bipartite graph with Kron reduction.
struct Theorem2Report {
  Eigen::VectorXd spectral;  // U1 S_{d,0} U0^T f with U1 = sqrt(2) U_LL
  Eigen::VectorXd vertex;    // f restricted to set_l
  double max_deviation = 0;  // max |spectral - sqrt(2) vertex|
  double kron_residual = 0;  // max |U1^T L_red U1 - diag(2 lambda_l - lambda_l^2)|
  double u1_orthogonality = 0;  // max |U1^T U1 - I|
  double basis_residual = 0;    // max |U0 Lambda U0^T - L|
};
Theorem2Report verify_theorem2(const Graph& g, const Eigen::VectorXd& f);

/// T_v = G0 S_{u,0} S_{d,0} H0 + G1 S_{u,1} S_{d,1} H1 with vertex-domain
/// filters U diag(gains) U^T and binary sampling on set_l (low channel) and
/// set_h (high channel).
Eigen::MatrixXd vertex_domain_transfer(const FilterBankSpec& spec, const SpectralBasis& basis,
                                       const VertexPartition& part);

struct Theorem3Report {
  double spectrum_symmetry = 0;  // max |lambda_{N-1-i} - (2 - lambda_i)|
  double pr_residual = 0;        // max |T_v - c^2 I|
  double scale = 0;              // trace(T_v) / N
  double off_scale = 0;          // max |T_v - scale * I|
};
Theorem3Report verify_theorem3(const Graph& g, const FilterBankSpec& spec);

}  // namespace sgfb
