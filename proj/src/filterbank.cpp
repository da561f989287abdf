#include "sgfb/filterbank.hpp"

#include <string>

#include "sgfb/error.hpp"
#include "sgfb/sampling.hpp"

namespace sgfb {
namespace {

void check_spec(const FilterBankSpec& spec, Eigen::Index n) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddLength, "filter bank needs even length, got " + std::to_string(n));
  }
  if (spec.size() != n || spec.h1.size() != n || spec.g0.size() != n || spec.g1.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "filter length " + std::to_string(spec.size()) + " != signal length " +
                    std::to_string(n));
  }
}

}  // namespace

TwoBand analyze_spectrum(const FilterBankSpec& spec, const Eigen::VectorXd& ftilde) {
  check_spec(spec, ftilde.size());
  return {spectral_downsample(spec.h0.cwiseProduct(ftilde), Channel::Low),
          spectral_downsample(spec.h1.cwiseProduct(ftilde), Channel::High)};
}

Eigen::VectorXd synthesize_spectrum(const FilterBankSpec& spec, const Eigen::VectorXd& low,
                                    const Eigen::VectorXd& high) {
  if (low.size() != high.size()) {
    throw Error(ErrorCode::DimensionMismatch, "subband lengths differ");
  }
  check_spec(spec, 2 * low.size());
  const Eigen::VectorXd y = spec.g0.cwiseProduct(spectral_upsample(low, Channel::Low)) +
                            spec.g1.cwiseProduct(spectral_upsample(high, Channel::High));
  return y / (spec.c * spec.c);
}

TwoBand analyze_one_level(const SpectralBasis& basis, const FilterBankSpec& spec,
                          const Eigen::VectorXd& f) {
  return analyze_spectrum(spec, gft(basis, f));
}

Eigen::VectorXd synthesize_one_level(const SpectralBasis& basis, const FilterBankSpec& spec,
                                     const Eigen::VectorXd& low, const Eigen::VectorXd& high) {
  if (2 * low.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch, "subband length does not match basis");
  }
  return igft(basis, synthesize_spectrum(spec, low, high));
}

Eigen::MatrixXd transfer_matrix(const FilterBankSpec& spec) {
  const int n = spec.size();
  check_spec(spec, n);
  // (I + J) for the low branch and (I - J) for the high branch, sandwiched
  // between the diagonal filters.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = n - 1 - i;
    t(i, i) += spec.g0[i] * spec.h0[i] + spec.g1[i] * spec.h1[i];
    t(i, j) += spec.g0[i] * spec.h0[j] - spec.g1[i] * spec.h1[j];
  }
  return t;
}

PolyphasePair polyphase_matrices(const FilterBankSpec& spec) {
  const int n = spec.size();
  check_spec(spec, n);
  const int m = n / 2;
  PolyphasePair p;
  p.hpoly = Eigen::MatrixXd::Zero(n, n);
  p.gpoly = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    const int r = n - 1 - i;  // reversed upper slot
    p.hpoly(i, i) = spec.h0[i];
    p.hpoly(i, m + i) = spec.h0[r];
    p.hpoly(m + i, i) = spec.h1[i];
    p.hpoly(m + i, m + i) = -spec.h1[r];

    p.gpoly(i, i) = spec.g0[i];
    p.gpoly(i, m + i) = spec.g1[i];
    p.gpoly(m + i, i) = spec.g0[r];
    p.gpoly(m + i, m + i) = -spec.g1[r];
  }
  return p;
}

Eigen::VectorXd polyphase_input(const Eigen::VectorXd& ftilde) {
  const Eigen::Index n = ftilde.size();
  if (n % 2 != 0) throw Error(ErrorCode::OddLength, "polyphase input needs even length");
  Eigen::VectorXd out(n);
  out.head(n / 2) = ftilde.head(n / 2);
  out.tail(n / 2) = ftilde.tail(n / 2).reverse();
  return out;
}

Eigen::MatrixXd analysis_matrix(const SpectralBasis& basis, const FilterBankSpec& spec) {
  const int n = basis.size();
  check_spec(spec, n);
  Eigen::MatrixXd folded(n, n);  // rows: [S_{d,0} H0; S_{d,1} H1]
  const auto poly = polyphase_matrices(spec);
  // hpoly acts on [I 0; 0 J] ftilde.
  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) {
    perm(i, i) = 1.0;
    perm(n / 2 + i, n - 1 - i) = 1.0;
  }
  folded = poly.hpoly * perm;
  return folded * basis.vectors.transpose();
}

Eigen::MatrixXd synthesis_matrix(const SpectralBasis& basis, const FilterBankSpec& spec) {
  const int n = basis.size();
  check_spec(spec, n);
  const auto poly = polyphase_matrices(spec);
  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) {
    perm(i, i) = 1.0;
    perm(n - 1 - i, n / 2 + i) = 1.0;
  }
  return basis.vectors * perm * poly.gpoly / (spec.c * spec.c);
}

}  // namespace sgfb
