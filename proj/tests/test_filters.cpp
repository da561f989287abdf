#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "sgfb/filters.hpp"

using namespace sgfb;
using sgfb::test::error_code_of;

TEST_SUITE("filters") {
  TEST_CASE("ideal design") {
    const auto s = ideal_design(8);
    for (int i = 0; i < 8; ++i) {
      CHECK(s.h0[i] == (i < 4 ? 1.0 : 0.0));
      CHECK(s.h1[i] == (i < 4 ? 0.0 : 1.0));
    }
    CHECK(s.c == 1.0);
    const auto r = verify_pr(s);
    CHECK(r.max_residual_identity == 0.0);
    CHECK(r.max_residual_alias == 0.0);
  }

  TEST_CASE("PR residuals over all even lengths") {
    for (int n = 2; n <= 512; n += 2) {
      CAPTURE(n);
      CHECK(verify_pr(ideal_design(n)).max_residual_identity == 0.0);
      const auto m = verify_pr(meyer_orthogonal_design(n));
      CHECK(m.max_residual_identity <= 1e-12);
      CHECK(m.max_residual_alias <= 1e-12);
      const auto b = verify_pr(cdf97_biorthogonal_design(n));
      CHECK(b.max_residual_identity <= 1e-9);
      CHECK(b.max_residual_alias <= 1e-9);
    }
  }

  TEST_CASE("odd lengths are rejected") {
    for (auto d : {Design::Ideal, Design::MeyerOrtho, Design::Cdf97Bior}) {
      CHECK(error_code_of([&] { make_design(d, 7); }) == ErrorCode::OddLength);
      CHECK(error_code_of([&] { make_design(d, 0); }) == ErrorCode::OddLength);
    }
  }

  TEST_CASE("meyer prototype") {
    constexpr double pi = std::numbers::pi;
    CHECK(meyer_prototype(0.0) == 1.0);
    CHECK(meyer_prototype(pi / 3) == doctest::Approx(1.0));
    CHECK(meyer_prototype(2 * pi / 3) == doctest::Approx(0.0));
    CHECK(meyer_prototype(pi) == 0.0);
    CHECK(meyer_prototype(pi / 2) == doctest::Approx(std::sqrt(0.5)));
    for (int k = 0; k <= 100; ++k) {
      const double w = pi * k / 100;
      const double a = meyer_prototype(w);
      const double b = meyer_prototype(pi - w);
      CHECK(a * a + b * b == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("meyer design is orthogonal") {
    const auto s = meyer_orthogonal_design(32);
    CHECK(s.g0 == s.h0);
    CHECK(s.g1 == s.h1);
    for (int i = 0; i < 32; ++i) CHECK(s.h1[i] == doctest::Approx(s.h0[31 - i]));
  }

  TEST_CASE("index to frequency map") {
    CHECK(index_frequency(0, 10) == 0.0);
    CHECK(index_frequency(9, 10) == doctest::Approx(std::numbers::pi));
    CHECK(index_frequency(3, 10) + index_frequency(6, 10) == doctest::Approx(std::numbers::pi));
  }

  TEST_CASE("CDF 9/7 taps match published values") {
    const auto& t = cdf97_taps();
    const std::array<double, 5> analysis{0.6029490182363579, 0.2668641184428723,
                                         -0.07822326652898785, -0.01686411844287495,
                                         0.02674875741080976};
    const std::array<double, 4> synthesis_dc2{1.115087052456994, 0.5912717631142470,
                                              -0.05754352622849957, -0.09127176311424948};
    for (int k = 0; k < 5; ++k) CHECK(t.analysis[k] == doctest::Approx(analysis[k]).epsilon(1e-13));
    for (int k = 0; k < 4; ++k) {
      CHECK(2.0 * t.synthesis[k] == doctest::Approx(synthesis_dc2[k]).epsilon(1e-13));
    }
    CHECK(zero_phase_response(t.analysis, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(zero_phase_response(t.synthesis, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(zero_phase_response(t.analysis, std::numbers::pi)) < 1e-14);
    CHECK(std::abs(zero_phase_response(t.synthesis, std::numbers::pi)) < 1e-14);
  }

  TEST_CASE("CDF 9/7 product is half-band") {
    const auto& t = cdf97_taps();
    for (int k = 0; k <= 50; ++k) {
      const double w = std::numbers::pi * k / 50;
      const double p = zero_phase_response(t.analysis, w) * zero_phase_response(t.synthesis, w);
      const double q = zero_phase_response(t.analysis, std::numbers::pi - w) *
                       zero_phase_response(t.synthesis, std::numbers::pi - w);
      CHECK(p + q == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(cdf97_biorthogonal_design(64).c == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("value-based ideal gains") {
    Eigen::VectorXd lambda(5);
    lambda << 0.0, 1.0, 1.9, 2.0, 4.0;
    Eigen::VectorXd expected(5);
    expected << 1, 1, 1, 0, 0;
    CHECK(value_ideal_gains(lambda) == expected);
  }

  TEST_CASE("design names") {
    for (auto d : {Design::Ideal, Design::MeyerOrtho, Design::Cdf97Bior}) {
      CHECK(parse_design(to_string(d)) == d);
    }
    CHECK(error_code_of([] { parse_design("haar"); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("mismatched gain lengths") {
    auto s = ideal_design(8);
    s.g1 = Eigen::VectorXd::Zero(6);
    CHECK(error_code_of([&] { verify_pr(s); }) == ErrorCode::DimensionMismatch);
  }
}
