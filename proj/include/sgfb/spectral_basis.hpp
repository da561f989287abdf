#pragma once

#include <cstdint>
#include <filesystem>

#include <Eigen/Dense>

#include "sgfb/graph.hpp"

namespace sgfb {

/// Orthonormal eigenvectors (columns) with eigenvalues in ascending order.
struct SpectralBasis {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
  OperatorKind kind = OperatorKind::Combinatorial;

  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Dense symmetric eigendecomposition. Each eigenvector is signed so that
/// its largest-magnitude entry (lowest index on exact ties) is positive.
SpectralBasis eigendecompose(const OperatorMatrix& op);

/// Applies the sign rule above to every column in place.
void normalize_signs(Eigen::MatrixXd& vectors);

Eigen::VectorXd gft(const SpectralBasis& basis, const Eigen::VectorXd& f);
Eigen::VectorXd igft(const SpectralBasis& basis, const Eigen::VectorXd& ftilde);

/// On-disk cache of decompositions keyed by a hash of the operator content.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  SpectralBasis get_or_compute(const OperatorMatrix& op) const;
  std::filesystem::path entry_path(const OperatorMatrix& op) const;

  /// FNV-1a over the kind tag, the dimension and the raw matrix bytes.
  static std::uint64_t content_hash(const OperatorMatrix& op);

  /// $SGFB_CACHE_DIR, else $XDG_CACHE_HOME/sgfb, else $HOME/.cache/sgfb,
  /// else <tmp>/sgfb-cache.
  static std::filesystem::path default_dir();

 private:
  std::filesystem::path dir_;
};

}  // namespace sgfb
