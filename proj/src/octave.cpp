#include "sgfb/octave.hpp"

#include <string>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

std::string band_id(int depth, bool low) {
  return low ? std::string(depth, 'L') : std::string(depth - 1, 'L') + "H";
}

void check_specs(const std::vector<FilterBankSpec>& specs, int n, int levels) {
  check_depth(n, levels);
  if (static_cast<int>(specs.size()) < levels) {
    throw Error(ErrorCode::InvalidArgument,
                "need " + std::to_string(levels) + " level specs, got " +
                    std::to_string(specs.size()));
  }
  for (int k = 0; k < levels; ++k) {
    if (specs[k].size() != (n >> k)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "level " + std::to_string(k) + " spec has length " +
                      std::to_string(specs[k].size()) + ", expected " + std::to_string(n >> k));
    }
  }
}

}  // namespace

std::size_t SubbandPyramid::coefficient_count() const {
  std::size_t total = 0;
  for (const auto& b : bands) total += static_cast<std::size_t>(b.values.size());
  return total;
}

const Band& SubbandPyramid::band(const std::string& id) const {
  for (const auto& b : bands) {
    if (b.id == id) return b;
  }
  throw Error(ErrorCode::InvalidArgument, "no band '" + id + "'");
}

void check_depth(int n, int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "levels must be >= 1");
  int m = n;
  for (int k = 0; k < levels; ++k) {
    if (m < 2 || m % 2 != 0) {
      throw Error(ErrorCode::DepthTooLarge,
                  "length " + std::to_string(n) + " cannot be halved " + std::to_string(levels) +
                      " times (level " + std::to_string(k) + " has length " + std::to_string(m) +
                      ")");
    }
    m /= 2;
  }
}

std::vector<FilterBankSpec> design_cascade(Design design, int n, int levels) {
  check_depth(n, levels);
  std::vector<FilterBankSpec> specs;
  specs.reserve(levels);
  for (int k = 0; k < levels; ++k) specs.push_back(make_design(design, n >> k));
  return specs;
}

SubbandPyramid analyze_octave_spectrum(const std::vector<FilterBankSpec>& specs,
                                       const Eigen::VectorXd& ftilde, int levels) {
  const int n = static_cast<int>(ftilde.size());
  check_specs(specs, n, levels);
  SubbandPyramid p;
  p.n = n;
  p.levels = levels;
  std::vector<Band> highs;
  Eigen::VectorXd current = ftilde;
  for (int k = 0; k < levels; ++k) {
    TwoBand tb = analyze_spectrum(specs[k], current);
    highs.push_back({band_id(k + 1, false), k + 1, std::move(tb.high)});
    current = std::move(tb.low);
  }
  p.bands.push_back({band_id(levels, true), levels, std::move(current)});
  for (auto it = highs.rbegin(); it != highs.rend(); ++it) p.bands.push_back(std::move(*it));
  return p;
}

Eigen::VectorXd synthesize_octave_spectrum(const std::vector<FilterBankSpec>& specs,
                                           const SubbandPyramid& pyramid) {
  check_specs(specs, pyramid.n, pyramid.levels);
  if (static_cast<int>(pyramid.bands.size()) != pyramid.levels + 1) {
    throw Error(ErrorCode::InvalidArgument, "pyramid band count does not match its levels");
  }
  Eigen::VectorXd current = pyramid.band(band_id(pyramid.levels, true)).values;
  for (int k = pyramid.levels - 1; k >= 0; --k) {
    const Band& high = pyramid.band(band_id(k + 1, false));
    if (high.values.size() != current.size() || current.size() != (pyramid.n >> (k + 1))) {
      throw Error(ErrorCode::DimensionMismatch, "band '" + high.id + "' has wrong length");
    }
    current = synthesize_spectrum(specs[k], current, high.values);
  }
  return current;
}

SubbandPyramid analyze_octave(const SpectralBasis& basis, const std::vector<FilterBankSpec>& specs,
                              const Eigen::VectorXd& f, int levels) {
  return analyze_octave_spectrum(specs, gft(basis, f), levels);
}

Eigen::VectorXd synthesize_octave(const SpectralBasis& basis,
                                  const std::vector<FilterBankSpec>& specs,
                                  const SubbandPyramid& pyramid) {
  if (pyramid.n != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch, "pyramid size does not match basis");
  }
  return igft(basis, synthesize_octave_spectrum(specs, pyramid));
}

MergedBandOperator merge_octave(const std::vector<FilterBankSpec>& specs, int levels) {
  if (specs.empty()) throw Error(ErrorCode::InvalidArgument, "no level specs");
  const int n = specs.front().size();
  check_specs(specs, n, levels);

  // fold[k][j]: slot of input j after k foldings; flip[k][j]: whether the
  // k-th folding took j from the mirrored half.
  std::vector<std::vector<int>> fold(levels + 1, std::vector<int>(n));
  std::vector<std::vector<char>> flip(levels, std::vector<char>(n));
  for (int j = 0; j < n; ++j) fold[0][j] = j;
  for (int k = 0; k < levels; ++k) {
    const int m = n >> k;
    for (int j = 0; j < n; ++j) {
      const int idx = fold[k][j];
      flip[k][j] = idx >= m / 2;
      fold[k + 1][j] = flip[k][j] ? m - 1 - idx : idx;
    }
  }

  // Band at depth d takes low-pass stages 0..d-2 and then stage d-1 with
  // channel `last` (the residual low band uses low-pass at every stage).
  auto make_band = [&](int depth, bool low) {
    MergedBand b;
    b.id = band_id(depth, low);
    b.depth = depth;
    b.length = n >> depth;
    b.analysis_gain.resize(n);
    b.synthesis_gain.resize(n);
    b.sign.resize(n);
    b.target.resize(n);
    for (int j = 0; j < n; ++j) {
      double ga = 1.0;
      double gs = 1.0;
      double s = 1.0;
      for (int k = 0; k < depth; ++k) {
        const auto& spec = specs[k];
        const int idx = fold[k][j];
        const bool high_stage = !low && k == depth - 1;
        ga *= high_stage ? spec.h1[idx] : spec.h0[idx];
        gs *= (high_stage ? spec.g1[idx] : spec.g0[idx]) / (spec.c * spec.c);
        if (high_stage && flip[k][j]) s = -s;
      }
      b.analysis_gain[j] = ga;
      b.synthesis_gain[j] = gs;
      b.sign[j] = s;
      b.target[j] = fold[depth][j];
    }
    return b;
  };

  MergedBandOperator op;
  op.n = n;
  op.levels = levels;
  op.bands.push_back(make_band(levels, true));
  for (int d = levels; d >= 1; --d) op.bands.push_back(make_band(d, false));
  return op;
}

SubbandPyramid MergedBandOperator::analyze(const Eigen::VectorXd& ftilde) const {
  if (ftilde.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum length does not match merged operator");
  }
  SubbandPyramid p;
  p.n = n;
  p.levels = levels;
  for (const auto& b : bands) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(b.length);
    for (int j = 0; j < n; ++j) out[b.target[j]] += b.sign[j] * b.analysis_gain[j] * ftilde[j];
    p.bands.push_back({b.id, b.depth, std::move(out)});
  }
  return p;
}

Eigen::VectorXd MergedBandOperator::synthesize(const SubbandPyramid& pyramid) const {
  if (pyramid.n != n || pyramid.levels != levels) {
    throw Error(ErrorCode::DimensionMismatch, "pyramid shape does not match merged operator");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (const auto& b : bands) {
    const auto& coeffs = pyramid.band(b.id).values;
    if (coeffs.size() != b.length) {
      throw Error(ErrorCode::DimensionMismatch, "band '" + b.id + "' has wrong length");
    }
    for (int j = 0; j < n; ++j) out[j] += b.sign[j] * b.synthesis_gain[j] * coeffs[b.target[j]];
  }
  return out;
}

}  // namespace sgfb
