#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "helpers.hpp"
#include "sgfb/generators.hpp"
#include "sgfb/spectral_basis.hpp"

using namespace sgfb;
using sgfb::test::error_code_of;
using sgfb::test::max_abs;

namespace {

// Characteristic polynomial coefficients c[0..n] (c[n] = 1) by Faddeev-LeVerrier.
std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Eigen::MatrixXd::Identity(n, n);
    c[n - k] = -(a * m).trace() / k;
  }
  return c;
}

}  // namespace

TEST_SUITE("spectral-basis") {
  TEST_CASE("decomposition invariants on a sensor graph") {
    const auto g = generate(GraphModel::RandomSensor, 64, {}, 2).graph;
    for (auto kind : {OperatorKind::Combinatorial, OperatorKind::SymmetricNormalized}) {
      const auto op = laplacian(g, kind);
      const auto b = eigendecompose(op);
      const int n = b.size();
      CHECK(max_abs(b.vectors.transpose() * b.vectors - Eigen::MatrixXd::Identity(n, n)) < 1e-12);
      CHECK(max_abs(b.vectors * b.values.asDiagonal() * b.vectors.transpose() - op.values) < 1e-11);
      for (int i = 1; i < n; ++i) CHECK(b.values[i] >= b.values[i - 1]);
      CHECK(std::abs(b.values[0]) < 1e-12);
      for (int j = 0; j < n; ++j) {
        Eigen::Index arg = 0;
        b.vectors.col(j).cwiseAbs().maxCoeff(&arg);
        CHECK(b.vectors(arg, j) > 0.0);
      }
    }
  }

  TEST_CASE("path and ring spectra match closed forms") {
    constexpr double pi = std::numbers::pi;
    for (int n : {5, 8, 13}) {
      const auto path = eigendecompose(
          laplacian(generate(GraphModel::Path, n, {}, 0).graph, OperatorKind::Combinatorial));
      const auto ring = eigendecompose(
          laplacian(generate(GraphModel::Ring, n, {}, 0).graph, OperatorKind::Combinatorial));
      std::vector<double> ring_expected;
      for (int k = 0; k < n; ++k) {
        CHECK(path.values[k] == doctest::Approx(2.0 - 2.0 * std::cos(pi * k / n)).epsilon(1e-12));
        ring_expected.push_back(2.0 - 2.0 * std::cos(2.0 * pi * k / n));
      }
      std::sort(ring_expected.begin(), ring_expected.end());
      for (int k = 0; k < n; ++k) {
        CHECK(ring.values[k] == doctest::Approx(ring_expected[k]).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("complete bipartite K22 eigenvalues are roots of its characteristic polynomial") {
    const Graph g = build_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
    const auto op = laplacian(g, OperatorKind::Combinatorial);
    const auto coeffs = characteristic_polynomial(op.values);
    // (x)(x-2)^2(x-4) = x^4 - 8x^3 + 20x^2 - 16x
    CHECK(coeffs[3] == doctest::Approx(-8.0));
    CHECK(coeffs[2] == doctest::Approx(20.0));
    CHECK(coeffs[1] == doctest::Approx(-16.0));
    CHECK(std::abs(coeffs[0]) < 1e-12);
    const auto b = eigendecompose(op);
    for (int i = 0; i < 4; ++i) {
      double p = 0.0;
      for (int k = 4; k >= 0; --k) p = p * b.values[i] + coeffs[k];
      CHECK(std::abs(p) < 1e-10);
    }
  }

  TEST_CASE("gft and igft") {
    const auto g = generate(GraphModel::Community, 80, {}, 4).graph;
    const auto b = eigendecompose(laplacian(g, OperatorKind::Combinatorial));
    const Eigen::VectorXd f = sgfb::test::random_vector(80, 1);
    const Eigen::VectorXd ft = gft(b, f);
    CHECK(ft.norm() == doctest::Approx(f.norm()).epsilon(1e-13));
    CHECK((igft(b, ft) - f).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(error_code_of([&] { gft(b, Eigen::VectorXd::Zero(79)); }) == ErrorCode::DimensionMismatch);
    CHECK(error_code_of([&] { igft(b, Eigen::VectorXd::Zero(81)); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("eigendecompose rejects non-symmetric input") {
    OperatorMatrix op;
    op.values = Eigen::MatrixXd::Identity(3, 3);
    op.values(0, 1) = 1.0;
    CHECK(error_code_of([&] { eigendecompose(op); }) == ErrorCode::InvalidArgument);
    op.values = Eigen::MatrixXd::Zero(2, 3);
    CHECK(error_code_of([&] { eigendecompose(op); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("sign normalisation is idempotent") {
    Eigen::MatrixXd v(2, 2);
    v << -0.6, 0.8, -0.8, -0.6;
    normalize_signs(v);
    CHECK(v(1, 0) == 0.8);
    CHECK(v(0, 1) == 0.8);
    CHECK(v(0, 0) == 0.6);
    const Eigen::MatrixXd once = v;
    normalize_signs(v);
    CHECK(v == once);
  }
}

TEST_SUITE("basis-cache") {
  TEST_CASE("cache returns identical bases and persists entries") {
    sgfb::test::TempDir dir("cache");
    const BasisCache cache(dir.path());
    const auto op = laplacian(generate(GraphModel::RandomSensor, 40, {}, 8).graph,
                              OperatorKind::SymmetricNormalized);
    const auto fresh = cache.get_or_compute(op);
    REQUIRE(std::filesystem::exists(cache.entry_path(op)));
    const auto cached = cache.get_or_compute(op);
    CHECK(cached.vectors == fresh.vectors);
    CHECK(cached.values == fresh.values);
    CHECK(cached.kind == OperatorKind::SymmetricNormalized);
    const auto direct = eigendecompose(op);
    CHECK(cached.values == direct.values);
  }

  TEST_CASE("content hash separates kinds and values") {
    const auto g = generate(GraphModel::Path, 6, {}, 0).graph;
    const auto c = laplacian(g, OperatorKind::Combinatorial);
    const auto n = laplacian(g, OperatorKind::SymmetricNormalized);
    CHECK(BasisCache::content_hash(c) != BasisCache::content_hash(n));
    auto perturbed = c;
    perturbed.values(0, 0) = std::nextafter(perturbed.values(0, 0), 10.0);
    CHECK(BasisCache::content_hash(c) != BasisCache::content_hash(perturbed));
    CHECK(BasisCache::content_hash(c) == BasisCache::content_hash(laplacian(g, OperatorKind::Combinatorial)));
  }

  TEST_CASE("corrupt entries are recomputed") {
    sgfb::test::TempDir dir("cache-corrupt");
    const BasisCache cache(dir.path());
    const auto op = laplacian(generate(GraphModel::Ring, 10, {}, 0).graph, OperatorKind::Combinatorial);
    {
      std::ofstream out(cache.entry_path(op));
      out << "{not json";
    }
    const auto b = cache.get_or_compute(op);
    CHECK(b.values == eigendecompose(op).values);
  }
}
