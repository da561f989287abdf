#include <doctest.h>

#include "helpers.hpp"
#include "sgfb/sampling.hpp"

using namespace sgfb;
using sgfb::test::error_code_of;
using sgfb::test::random_vector;

namespace {

// Explicit M/2 x M folding matrix [I  +-J].
Eigen::MatrixXd folding_matrix(int m, Channel ch) {
  const int h = m / 2;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(h, m);
  const double sign = ch == Channel::Low ? 1.0 : -1.0;
  for (int i = 0; i < h; ++i) {
    s(i, i) = 1.0;
    s(i, m - 1 - i) = sign;
  }
  return s;
}

}  // namespace

TEST_SUITE("sampling") {
  TEST_CASE("spectral folding matches the explicit matrix") {
    for (int m : {2, 4, 10, 64}) {
      for (auto ch : {Channel::Low, Channel::High}) {
        const Eigen::MatrixXd s = folding_matrix(m, ch);
        const Eigen::VectorXd x = random_vector(m, m);
        const Eigen::VectorXd y = random_vector(m / 2, m + 1);
        CHECK((spectral_downsample(x, ch) - s * x).cwiseAbs().maxCoeff() == 0.0);
        CHECK((spectral_upsample(y, ch) - s.transpose() * y).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }

  TEST_CASE("hand-computed folding") {
    Eigen::VectorXd x(4);
    x << 1, 2, 3, 4;
    Eigen::VectorXd low(2), high(2);
    low << 5, 5;
    high << -3, -1;
    CHECK(spectral_downsample(x, Channel::Low) == low);
    CHECK(spectral_downsample(x, Channel::High) == high);
    Eigen::VectorXd up(4);
    up << -3, -1, 1, 3;
    CHECK(spectral_upsample(high, Channel::High) == up);
  }

  TEST_CASE("down after up doubles") {
    const Eigen::VectorXd y = random_vector(16, 3);
    for (auto ch : {Channel::Low, Channel::High}) {
      CHECK((spectral_downsample(spectral_upsample(y, ch), ch) - 2.0 * y).cwiseAbs().maxCoeff() <
            1e-15);
    }
    // Low and high channels are orthogonal.
    CHECK(std::abs(spectral_upsample(y, Channel::Low).dot(spectral_upsample(y, Channel::High))) <
          1e-12);
  }

  TEST_CASE("odd spectra are rejected") {
    CHECK(error_code_of([] { spectral_downsample(Eigen::VectorXd::Zero(5), Channel::Low); }) ==
          ErrorCode::OddLength);
  }

  TEST_CASE("vertex sampling") {
    Eigen::VectorXd f(5);
    f << 10, 11, 12, 13, 14;
    const std::vector<int> keep{4, 1};
    Eigen::VectorXd down(2);
    down << 14, 11;
    CHECK(vertex_downsample(f, keep) == down);
    Eigen::VectorXd up(5);
    up << 0, 11, 0, 0, 14;
    CHECK(vertex_upsample(down, keep, 5) == up);

    const std::vector<int> bad{0, 5};
    CHECK(error_code_of([&] { vertex_downsample(f, bad); }) == ErrorCode::IndexOutOfRange);
    const std::vector<int> dup{1, 1};
    CHECK(error_code_of([&] { vertex_downsample(f, dup); }) == ErrorCode::InvalidArgument);
    CHECK(error_code_of([&] { vertex_upsample(f, keep, 5); }) == ErrorCode::LengthMismatch);
  }
}
