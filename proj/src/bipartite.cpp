#include "sgfb/bipartite.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sgfb/error.hpp"
#include "sgfb/sampling.hpp"

namespace sgfb {
namespace {

std::vector<int> complement(std::span<const int> keep, int n) {
  std::vector<char> kept(n, 0);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "kept vertex " + std::to_string(k) + " out of range");
    }
    if (kept[k]) throw Error(ErrorCode::InvalidArgument, "kept vertex repeated");
    kept[k] = 1;
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!kept[i]) rest.push_back(i);
  }
  return rest;
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, std::span<const int> rows,
                          std::span<const int> cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  }
  return out;
}

// Places the rows of a (set_l, set_h)-ordered matrix back at their vertices.
Eigen::MatrixXd unpermute_rows(const Eigen::MatrixXd& m, const VertexPartition& part) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  const auto half = static_cast<Eigen::Index>(part.set_l.size());
  for (Eigen::Index r = 0; r < half; ++r) out.row(part.set_l[r]) = m.row(r);
  for (Eigen::Index r = 0; r < half; ++r) out.row(part.set_h[r]) = m.row(half + r);
  return out;
}

}  // namespace

Eigen::MatrixXd kron_reduce(const OperatorMatrix& op, std::span<const int> keep) {
  const int n = op.size();
  const auto rest = complement(keep, n);
  const Eigen::MatrixXd lkk = submatrix(op.values, keep, keep);
  if (rest.empty()) return lkk;
  const Eigen::MatrixXd lkc = submatrix(op.values, keep, rest);
  const Eigen::MatrixXd lcc = submatrix(op.values, rest, rest);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lcc);
  const auto& sv = svd.singularValues();
  const double smax = sv[0];
  const double smin = sv[sv.size() - 1];
  if (!(smin > 0.0) || smax / smin > 1e12) {
    throw Error(ErrorCode::SingularComplementBlock,
                "eliminated block is singular or ill-conditioned");
  }
  Eigen::MatrixXd reduced = lkk - lkc * lcc.partialPivLu().solve(lkc.transpose());
  return 0.5 * (reduced + reduced.transpose());
}

BipartiteBasis bipartite_basis(const Graph& g) {
  auto part = bipartite_partition(g);
  if (!part) throw Error(ErrorCode::NotBipartite, "graph contains an odd cycle");
  if (part->set_l.size() != part->set_h.size()) {
    throw Error(ErrorCode::UnequalHalves,
                "bipartition has sizes " + std::to_string(part->set_l.size()) + " and " +
                    std::to_string(part->set_h.size()));
  }
  const OperatorMatrix op = laplacian(g, OperatorKind::SymmetricNormalized);
  const Eigen::MatrixXd b = submatrix(op.values, part->set_l, part->set_h);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd p = svd.matrixU();
  Eigen::MatrixXd q = svd.matrixV();
  // Sign rule on the U_LL columns, carried over to U_HL so B is unchanged.
  for (Eigen::Index c = 0; c < p.cols(); ++c) {
    Eigen::Index r;
    p.col(c).cwiseAbs().maxCoeff(&r);
    if (p(r, c) < 0) {
      p.col(c) *= -1.0;
      q.col(c) *= -1.0;
    }
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  BipartiteBasis out;
  out.part = std::move(*part);
  out.ull = p * inv_sqrt2;
  out.uhl = -q * inv_sqrt2;
  out.lambda_l = Eigen::VectorXd::Ones(b.rows()) - svd.singularValues();
  return out;
}

SpectralBasis BipartiteBasis::paired() const {
  const auto half = lambda_l.size();
  Eigen::MatrixXd w(2 * half, 2 * half);
  w << ull, ull, uhl, -uhl;
  SpectralBasis basis;
  basis.kind = OperatorKind::SymmetricNormalized;
  basis.vectors = unpermute_rows(w, part);
  basis.values.resize(2 * half);
  basis.values << lambda_l, Eigen::VectorXd::Constant(half, 2.0) - lambda_l;
  return basis;
}

SpectralBasis BipartiteBasis::ascending() const {
  SpectralBasis basis = paired();
  const auto half = lambda_l.size();
  basis.vectors.rightCols(half) = basis.vectors.rightCols(half).rowwise().reverse().eval();
  basis.values.tail(half).reverseInPlace();
  return basis;
}

PolyphaseSplit bipartite_polyphase_split(const Eigen::VectorXd& f, const VertexPartition& part,
                                         const Eigen::MatrixXd& ull, const Eigen::MatrixXd& uhl) {
  if (part.set_l.size() != part.set_h.size()) {
    throw Error(ErrorCode::UnequalHalves, "polyphase split needs |set_l| = |set_h|");
  }
  const auto half = static_cast<Eigen::Index>(part.set_l.size());
  if (f.size() != 2 * half || ull.rows() != half || ull.cols() != half ||
      uhl.rows() != half || uhl.cols() != half) {
    throw Error(ErrorCode::DimensionMismatch, "polyphase split dimensions disagree");
  }
  const Eigen::VectorXd fl = vertex_downsample(f, part.set_l);
  const Eigen::VectorXd fh = vertex_downsample(f, part.set_h);
  const Eigen::VectorXd a = ull.transpose() * fl;
  const Eigen::VectorXd b = uhl.transpose() * fh;
  return {a + b, (a - b).reverse()};
}

Theorem2Report verify_theorem2(const Graph& g, const Eigen::VectorXd& f) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::DimensionMismatch, "signal length does not match graph");
  }
  const BipartiteBasis bb = bipartite_basis(g);
  const SpectralBasis u0 = bb.ascending();
  const OperatorMatrix op = laplacian(g, OperatorKind::SymmetricNormalized);

  Theorem2Report r;
  r.basis_residual = (u0.vectors * u0.values.asDiagonal() * u0.vectors.transpose() - op.values)
                         .cwiseAbs()
                         .maxCoeff();

  const Eigen::MatrixXd u1 = std::numbers::sqrt2 * bb.ull;
  const Eigen::Index half = u1.rows();
  r.u1_orthogonality =
      (u1.transpose() * u1 - Eigen::MatrixXd::Identity(half, half)).cwiseAbs().maxCoeff();

  const Eigen::MatrixXd reduced = kron_reduce(op, bb.part.set_l);
  const Eigen::VectorXd expected =
      2.0 * bb.lambda_l - bb.lambda_l.cwiseProduct(bb.lambda_l);
  r.kron_residual =
      (u1.transpose() * reduced * u1 - Eigen::MatrixXd(expected.asDiagonal())).cwiseAbs().maxCoeff();

  r.spectral = u1 * spectral_downsample(gft(u0, f), Channel::Low);
  r.vertex = vertex_downsample(f, bb.part.set_l);
  r.max_deviation =
      half == 0 ? 0.0 : (r.spectral - std::numbers::sqrt2 * r.vertex).cwiseAbs().maxCoeff();
  return r;
}

Eigen::MatrixXd vertex_domain_transfer(const FilterBankSpec& spec, const SpectralBasis& basis,
                                       const VertexPartition& part) {
  const int n = basis.size();
  if (spec.size() != n || spec.h1.size() != n || spec.g0.size() != n || spec.g1.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "filter length does not match basis");
  }
  if (part.set_l.size() + part.set_h.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "partition does not cover the vertex set");
  }
  const auto& u = basis.vectors;
  auto filter = [&](const Eigen::VectorXd& gains) -> Eigen::MatrixXd {
    return u * gains.asDiagonal() * u.transpose();
  };
  // S_u S_d is the 0/1 diagonal projection onto the sampled vertices.
  Eigen::VectorXd keep_l = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd keep_h = Eigen::VectorXd::Zero(n);
  for (int v : part.set_l) keep_l[v] = 1.0;
  for (int v : part.set_h) keep_h[v] = 1.0;
  return filter(spec.g0) * keep_l.asDiagonal() * filter(spec.h0) +
         filter(spec.g1) * keep_h.asDiagonal() * filter(spec.h1);
}

Theorem3Report verify_theorem3(const Graph& g, const FilterBankSpec& spec) {
  const BipartiteBasis bb = bipartite_basis(g);
  const int n = bb.size();
  const SpectralBasis direct = eigendecompose(laplacian(g, OperatorKind::SymmetricNormalized));
  Theorem3Report r;
  for (int i = 0; i < n; ++i) {
    r.spectrum_symmetry = std::max(
        r.spectrum_symmetry, std::abs(direct.values[n - 1 - i] - (2.0 - direct.values[i])));
  }
  const Eigen::MatrixXd t = vertex_domain_transfer(spec, bb.ascending(), bb.part);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  r.pr_residual = (t - spec.c * spec.c * id).cwiseAbs().maxCoeff();
  r.scale = t.trace() / n;
  r.off_scale = (t - r.scale * id).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace sgfb
