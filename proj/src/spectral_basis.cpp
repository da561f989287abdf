#include "sgfb/spectral_basis.hpp"

#include <cmath>
#include <string>

#include "sgfb/error.hpp"

namespace sgfb {

void normalize_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double a = std::abs(vectors(r, c));
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (vectors.rows() > 0 && vectors(best, c) < 0) vectors.col(c) *= -1.0;
  }
}

SpectralBasis eigendecompose(const OperatorMatrix& op) {
  const auto& m = op.values;
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::InvalidArgument, "operator is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "symmetric eigensolver did not converge");
  }
  SpectralBasis basis;
  basis.vectors = solver.eigenvectors();
  basis.values = solver.eigenvalues();
  basis.kind = op.kind;
  normalize_signs(basis.vectors);
  return basis;
}

Eigen::VectorXd gft(const SpectralBasis& basis, const Eigen::VectorXd& f) {
  if (f.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "signal length " + std::to_string(f.size()) + " != basis size " +
                    std::to_string(basis.size()));
  }
  return basis.vectors.transpose() * f;
}

Eigen::VectorXd igft(const SpectralBasis& basis, const Eigen::VectorXd& ftilde) {
  if (ftilde.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "spectrum length " + std::to_string(ftilde.size()) +
                    " != basis size " + std::to_string(basis.size()));
  }
  return basis.vectors * ftilde;
}

}  // namespace sgfb
