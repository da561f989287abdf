#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "sgfb/experiments.hpp"
#include "sgfb/generators.hpp"
#include "sgfb/signals.hpp"

using namespace sgfb;
using sgfb::test::error_code_of;
using sgfb::test::random_vector;

namespace {

struct Fixture {
  GeneratedGraph graph = generate(GraphModel::RandomSensor, 100, {}, 21);
  SpectralBasis basis = eigendecompose(laplacian(graph.graph, OperatorKind::Combinatorial));
};

}  // namespace

TEST_SUITE("signals") {
  TEST_CASE("smooth signal has an exponential spectrum") {
    Fixture fx;
    const Eigen::VectorXd f = gen_smooth_signal(fx.basis);
    const Eigen::VectorXd ft = gft(fx.basis, f);
    for (int i = 0; i < 100; ++i) {
      CHECK(ft[i] == doctest::Approx(std::exp(-fx.basis.values[i] / 4)).epsilon(1e-10));
    }
  }

  TEST_CASE("localized signal lives on its clusters") {
    const auto g = generate(GraphModel::Community, 400, {}, 2);
    const auto basis = eigendecompose(laplacian(g.graph, OperatorKind::Combinatorial));
    const auto ranges = default_localized_ranges(400);
    REQUIRE(ranges.size() == 4);
    CHECK(ranges[0].lo == 9);
    CHECK(ranges[3].hi == 319);
    const Eigen::VectorXd comp = localized_component(basis, g.labels, 2, ranges[2]);
    for (int i = 0; i < 400; ++i) {
      if (g.labels[i] != 2) CHECK(comp[i] == 0.0);
    }
    const Eigen::VectorXd f = gen_localized_signal(basis, g.labels, ranges);
    CHECK(f.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
    CHECK(f.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  }

  TEST_CASE("localized ranges scale with n") {
    const auto r = default_localized_ranges(100);
    CHECK(r[0].lo == 2);
    CHECK(r[1].hi == 20);
    CHECK(r[3].hi <= 99);
  }

  TEST_CASE("signal errors") {
    Fixture fx;
    std::vector<int> labels(100, 0);
    CHECK(error_code_of([&] { localized_component(fx.basis, labels, 3, {1, 5}); }) ==
          ErrorCode::EmptyCluster);
    CHECK(error_code_of([&] { localized_component(fx.basis, labels, 0, {5, 100}); }) ==
          ErrorCode::RangeOutOfSpectrum);
    CHECK(error_code_of([&] { snr_db(Eigen::VectorXd::Zero(3), Eigen::VectorXd::Ones(3)); }) ==
          ErrorCode::ZeroReference);
  }

  TEST_CASE("noise is seeded and scaled") {
    const Eigen::VectorXd f = Eigen::VectorXd::Zero(20000);
    const Eigen::VectorXd a = add_noise(f, 0.5, 9);
    CHECK(a == add_noise(f, 0.5, 9));
    CHECK(a != add_noise(f, 0.5, 10));
    CHECK(std::sqrt(a.squaredNorm() / a.size()) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(add_noise(random_vector(5, 1), 0.0, 3) == random_vector(5, 1));
  }

  TEST_CASE("snr") {
    const Eigen::VectorXd f = random_vector(10, 2);
    CHECK(std::isinf(snr_db(f, f)));
    CHECK(snr_db(f, 0.9 * f) == doctest::Approx(20.0));
  }
}

TEST_SUITE("experiments") {
  TEST_CASE("nla keeps the requested number of coefficients") {
    Fixture fx;
    const auto specs = design_cascade(Design::MeyerOrtho, 100, 2);
    const Eigen::VectorXd f = gen_smooth_signal(fx.basis);
    CHECK(nla(f, fx.basis, specs, 2, 1.0).snr_db > 250.0);
    double previous = -1e9;
    for (double fr : {0.05, 0.1, 0.2, 0.4}) {
      const auto r = nla(f, fx.basis, specs, 2, fr);
      CHECK(r.snr_db > previous);
      previous = r.snr_db;
      // Orthogonal transform: estimate energy equals the kept coefficient energy.
      auto p = analyze_octave(fx.basis, specs, r.estimate, 2);
      int nonzero = 0;
      for (const auto& b : p.bands) nonzero += static_cast<int>((b.values.array().abs() > 1e-9).count());
      CHECK(nonzero == static_cast<int>(std::ceil(fr * 100 - 1e-9)));
    }
    CHECK(error_code_of([&] { nla(f, fx.basis, specs, 2, 0.0); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("hard threshold spares the deepest low band") {
    SubbandPyramid p;
    p.n = 8;
    p.levels = 2;
    p.bands = {{"LL", 2, Eigen::Vector2d(0.1, -0.1)},
               {"LH", 2, Eigen::Vector2d(0.1, 5.0)},
               {"H", 1, Eigen::Vector4d(-0.2, 0.3, 2.0, -0.5)}};
    hard_threshold(p, 0.3);
    CHECK(p.band("LL").values == Eigen::Vector2d(0.1, -0.1));
    CHECK(p.band("LH").values == Eigen::Vector2d(0.0, 5.0));
    CHECK(p.band("H").values == Eigen::Vector4d(0.0, 0.0, 2.0, -0.5));
  }

  TEST_CASE("tiny threshold denoising is the identity") {
    Fixture fx;
    const auto specs = design_cascade(Design::Cdf97Bior, 100, 2);
    const Eigen::VectorXd f = random_vector(100, 4);
    CHECK((denoise(f, fx.basis, specs, 2, 1e-300) - f).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(error_code_of([&] { denoise(f, fx.basis, specs, 2, 0.0); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("passband distance matches a direct computation") {
    Fixture fx;
    const Eigen::VectorXd f = igft(fx.basis, noisy_exponential_spectrum(fx.basis, 0.05, 3));
    const auto results = passband_compare(fx.basis, f, {Design::Ideal, Design::Cdf97Bior});
    REQUIRE(results.size() == 2);
    const Eigen::VectorXd ft = gft(fx.basis, f);
    const double half = fx.basis.values.maxCoeff() / 2;
    for (const auto& r : results) {
      const auto spec = make_design(r.design, 100);
      double sum = 0.0;
      for (int i = 0; i < 100; ++i) {
        const double ideal = fx.basis.values[i] < half ? ft[i] : 0.0;
        sum += (ideal - spec.h0[i] * ft[i]) * (ideal - spec.h0[i] * ft[i]);
      }
      CHECK(r.distance == doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
    }
  }

  TEST_CASE("Monte Carlo is independent of the thread count") {
    ExperimentConfig c;
    c.n = 64;
    c.levels = 2;
    const auto a = monte_carlo(Protocol::Denoise, c, 8, 5, 1);
    const auto b = monte_carlo(Protocol::Denoise, c, 8, 5, 4);
    REQUIRE(a.runs.size() == 8);
    for (int r = 0; r < 8; ++r) {
      CHECK(a.runs[r].seed == 5u + static_cast<unsigned>(r));
      CHECK(a.runs[r].snr_db == b.runs[r].snr_db);
      CHECK(a.runs[r].baseline_snr_db == b.runs[r].baseline_snr_db);
    }
    CHECK(a.mean_snr_db == b.mean_snr_db);
    CHECK(a.method == "cdf97(C)");
  }

  TEST_CASE("(C) and (N) runs share the clean signal") {
    ExperimentConfig c;
    c.n = 64;
    const auto sc = make_setup(c, 3);
    c.kind = OperatorKind::SymmetricNormalized;
    const auto sn = make_setup(c, 3);
    CHECK(sc.signal == sn.signal);
    CHECK(sn.basis.kind == OperatorKind::SymmetricNormalized);
  }

  TEST_CASE("sensor-graph NLA favours the combinatorial Meyer bank") {
    ExperimentConfig c;
    c.design = Design::MeyerOrtho;
    c.fraction = 0.25;
    const auto comb = monte_carlo(Protocol::Nla, c, 100, 1);
    c.kind = OperatorKind::SymmetricNormalized;
    const auto norm = monte_carlo(Protocol::Nla, c, 100, 1);
    CHECK(comb.mean_snr_db > norm.mean_snr_db);
  }

  TEST_CASE("sensor-graph denoising at sigma 1/8 lands near 10.78 dB") {
    ExperimentConfig c;
    c.sigma = 0.125;
    const auto rep = monte_carlo(Protocol::Denoise, c, 100, 1);
    CHECK(std::abs(rep.mean_snr_db - 10.78) <= 2.0);
  }

  TEST_CASE("method tags") {
    CHECK(method_tag(Design::MeyerOrtho, OperatorKind::SymmetricNormalized) == "meyer(N)");
    CHECK(method_tag(Design::Ideal, OperatorKind::Combinatorial) == "ideal(C)");
  }
}
