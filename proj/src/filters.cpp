#include "sgfb/filters.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <vector>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

void require_even(int n, const char* what) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                std::string(what) + " needs an even length >= 2, got " + std::to_string(n));
  }
}

// Cosine series a[0] + sum_k a[k] cos(k w).
using CosSeries = std::vector<double>;

CosSeries multiply(const CosSeries& a, const CosSeries& b) {
  CosSeries out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      // cos(iw) cos(jw) = (cos((i+j)w) + cos((i-j)w)) / 2
      const double p = 0.5 * a[i] * b[j];
      out[i + j] += p;
      out[i > j ? i - j : j - i] += p;
    }
  }
  return out;
}

CosSeries add_scaled(CosSeries a, const CosSeries& b, double s) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  return a;
}

// Polynomial sum_k coeffs[k] y^k in y = sin^2(w/2) = (1 - cos w) / 2.
CosSeries poly_in_sin2(const std::vector<double>& coeffs) {
  const CosSeries y{0.5, -0.5};
  CosSeries power{1.0};
  CosSeries out{0.0};
  for (double c : coeffs) {
    out = add_scaled(out, power, c);
    power = multiply(power, y);
  }
  return out;
}

Cdf97Taps derive_cdf97() {
  // Daubechies half-band factor P(y) = 1 + 4y + 10y^2 + 20y^3 satisfies
  // (1-y)^4 P(y) + y^4 P(1-y) = 1. Its single real root r splits it into
  // (1 - y/r) * q(y) with q quadratic.
  double r = -0.34;
  for (int it = 0; it < 100; ++it) {
    const double f = ((20 * r + 10) * r + 4) * r + 1;
    const double df = (60 * r + 20) * r + 4;
    const double step = f / df;
    r -= step;
    if (std::abs(step) < 1e-17) break;
  }
  // Synthetic division of P by (y - r): P = (y - r)(20y^2 + b1 y + b0).
  const double b1 = 10 + 20 * r;
  const double b0 = 4 + r * b1;
  // q = -r (20y^2 + b1 y + b0), so q(0) = -r b0 = 1.
  const std::vector<double> q{-r * b0, -r * b1, -r * 20};
  const std::vector<double> l{1.0, -1.0 / r};

  const CosSeries half_cos2{0.5, 0.5};  // cos^2(w/2)
  const CosSeries cos4 = multiply(half_cos2, half_cos2);
  const CosSeries analysis = multiply(cos4, poly_in_sin2(q));
  const CosSeries synthesis = multiply(cos4, poly_in_sin2(l));

  Cdf97Taps taps{};
  taps.analysis[0] = analysis[0];
  for (std::size_t k = 1; k < taps.analysis.size(); ++k) taps.analysis[k] = analysis[k] / 2;
  taps.synthesis[0] = synthesis[0];
  for (std::size_t k = 1; k < taps.synthesis.size(); ++k) taps.synthesis[k] = synthesis[k] / 2;
  return taps;
}

double nu(double x) { return x * x * x * x * (35 - 84 * x + 70 * x * x - 20 * x * x * x); }

}  // namespace

double index_frequency(int i, int n) {
  return std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
}

double meyer_prototype(double omega) {
  constexpr double pi = std::numbers::pi;
  if (omega <= pi / 3) return 1.0;
  if (omega >= 2 * pi / 3) return 0.0;
  return std::cos(pi / 2 * nu(3 * omega / pi - 1));
}

const Cdf97Taps& cdf97_taps() {
  static const Cdf97Taps taps = derive_cdf97();
  return taps;
}

FilterBankSpec ideal_design(int n) {
  require_even(n, "ideal design");
  FilterBankSpec s;
  s.design = Design::Ideal;
  s.h0 = Eigen::VectorXd::Zero(n);
  s.h0.head(n / 2).setOnes();
  s.h1 = Eigen::VectorXd::Ones(n) - s.h0;
  s.g0 = s.h0;
  s.g1 = s.h1;
  s.c = 1.0;
  return s;
}

FilterBankSpec meyer_orthogonal_design(int n) {
  require_even(n, "Meyer design");
  FilterBankSpec s;
  s.design = Design::MeyerOrtho;
  s.h0.resize(n);
  for (int i = 0; i < n; ++i) s.h0[i] = meyer_prototype(index_frequency(i, n));
  s.h1 = s.h0.reverse();
  s.g0 = s.h0;
  s.g1 = s.h1;
  s.c = 1.0;
  return s;
}

FilterBankSpec cdf97_biorthogonal_design(int n) {
  require_even(n, "CDF 9/7 design");
  const auto& taps = cdf97_taps();
  FilterBankSpec s;
  s.design = Design::Cdf97Bior;
  s.h0.resize(n);
  s.g0.resize(n);
  for (int i = 0; i < n; ++i) {
    const double w = index_frequency(i, n);
    s.h0[i] = zero_phase_response(taps.analysis, w);
    s.g0[i] = zero_phase_response(taps.synthesis, w);
  }
  s.h1 = s.g0.reverse();
  s.g1 = s.h0.reverse();
  // c^2 from the half-band identity, averaged over all index pairs.
  const Eigen::VectorXd p = s.h0.cwiseProduct(s.g0);
  s.c = std::sqrt((p + p.reverse()).mean());
  return s;
}

FilterBankSpec make_design(Design design, int n) {
  switch (design) {
    case Design::Ideal: return ideal_design(n);
    case Design::MeyerOrtho: return meyer_orthogonal_design(n);
    case Design::Cdf97Bior: return cdf97_biorthogonal_design(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown design");
}

PrReport verify_pr(const FilterBankSpec& spec) {
  const int n = spec.size();
  if (spec.h1.size() != n || spec.g0.size() != n || spec.g1.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "filter gain vectors differ in length");
  }
  PrReport r;
  const double c2 = spec.c * spec.c;
  for (int i = 0; i < n; ++i) {
    const int j = n - 1 - i;
    r.max_residual_identity = std::max(
        r.max_residual_identity,
        std::abs(spec.g0[i] * spec.h0[i] + spec.g1[i] * spec.h1[i] - c2));
    r.max_residual_alias = std::max(
        r.max_residual_alias, std::abs(spec.g0[i] * spec.h0[j] - spec.g1[i] * spec.h1[j]));
  }
  return r;
}

Eigen::VectorXd value_ideal_gains(const Eigen::VectorXd& lambdas) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(lambdas.size());
  if (lambdas.size() == 0) return g;
  const double cutoff = lambdas.maxCoeff() / 2;
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) g[i] = lambdas[i] < cutoff ? 1.0 : 0.0;
  return g;
}

std::string_view to_string(Design d) {
  switch (d) {
    case Design::Ideal: return "ideal";
    case Design::MeyerOrtho: return "meyer";
    case Design::Cdf97Bior: return "cdf97";
  }
  return "unknown";
}

Design parse_design(std::string_view name) {
  if (name == "ideal") return Design::Ideal;
  if (name == "meyer" || name == "orthogonal") return Design::MeyerOrtho;
  if (name == "cdf97" || name == "biorthogonal") return Design::Cdf97Bior;
  throw Error(ErrorCode::InvalidArgument, "unknown design '" + std::string(name) + "'");
}

}  // namespace sgfb
