#include "sgfb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

// splitmix64 finaliser; keeps the noise stream of run r independent of the
// graph stream that is seeded with the same run seed.
std::uint64_t noise_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

ApproxResult nla(const Eigen::VectorXd& f, const SpectralBasis& basis,
                 const std::vector<FilterBankSpec>& specs, int levels, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "fraction must lie in (0, 1]");
  }
  SubbandPyramid p = analyze_octave(basis, specs, f, levels);
  const int n = p.n;
  const auto keep = static_cast<std::size_t>(
      std::min<double>(n, std::ceil(fraction * n - 1e-9)));

  struct Slot {
    double mag;
    std::size_t band;
    Eigen::Index idx;
  };
  std::vector<Slot> slots;
  slots.reserve(n);
  for (std::size_t b = 0; b < p.bands.size(); ++b) {
    for (Eigen::Index i = 0; i < p.bands[b].values.size(); ++i) {
      slots.push_back({std::abs(p.bands[b].values[i]), b, i});
    }
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.mag > b.mag; });
  for (std::size_t s = keep; s < slots.size(); ++s) p.bands[slots[s].band].values[slots[s].idx] = 0;

  ApproxResult r;
  r.estimate = synthesize_octave(basis, specs, p);
  r.snr_db = snr_db(f, r.estimate);
  return r;
}

void hard_threshold(SubbandPyramid& pyramid, double threshold) {
  for (auto& band : pyramid.bands) {
    if (band.depth == pyramid.levels && band.id.back() == 'L') continue;
    for (Eigen::Index i = 0; i < band.values.size(); ++i) {
      if (std::abs(band.values[i]) <= threshold) band.values[i] = 0.0;
    }
  }
}

Eigen::VectorXd denoise(const Eigen::VectorXd& noisy, const SpectralBasis& basis,
                        const std::vector<FilterBankSpec>& specs, int levels, double sigma,
                        double multiplier) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  SubbandPyramid p = analyze_octave(basis, specs, noisy, levels);
  hard_threshold(p, multiplier * sigma);
  return synthesize_octave(basis, specs, p);
}

ApproxResult denoise_against(const Eigen::VectorXd& noisy, const Eigen::VectorXd& clean,
                             const SpectralBasis& basis, const std::vector<FilterBankSpec>& specs,
                             int levels, double sigma, double multiplier) {
  ApproxResult r;
  r.estimate = denoise(noisy, basis, specs, levels, sigma, multiplier);
  r.snr_db = snr_db(clean, r.estimate);
  return r;
}

std::vector<PassbandResult> passband_compare(const SpectralBasis& basis, const Eigen::VectorXd& f,
                                             const std::vector<Design>& designs) {
  const Eigen::VectorXd ft = gft(basis, f);
  const Eigen::VectorXd reference = value_ideal_gains(basis.values).cwiseProduct(ft);
  std::vector<PassbandResult> out;
  for (Design d : designs) {
    const FilterBankSpec spec = make_design(d, basis.size());
    PassbandResult r;
    r.design = d;
    const Eigen::VectorXd diff = reference - spec.h0.cwiseProduct(ft);
    r.squared_error = diff.cwiseProduct(diff);
    r.distance = diff.norm();
    out.push_back(std::move(r));
  }
  return out;
}

std::string method_tag(Design design, OperatorKind kind) {
  return std::string(to_string(design)) + (kind == OperatorKind::Combinatorial ? "(C)" : "(N)");
}

Eigen::VectorXd make_signal(SignalModel model, const SpectralBasis& basis,
                            const std::vector<int>& labels) {
  switch (model) {
    case SignalModel::SmoothExponential:
      return gen_smooth_signal(basis);
    case SignalModel::LocalizedMixture:
      return gen_localized_signal(basis, labels, default_localized_ranges(basis.size()));
    case SignalModel::MixedSpectral: {
      MixedParams p;
      p.labels = labels;
      p.cluster = 0;
      p.range = default_localized_ranges(basis.size())[1];
      return gen_mixed_signal(basis, p);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown signal model");
}

ExperimentSetup make_setup(const ExperimentConfig& config, std::uint64_t graph_seed) {
  ExperimentSetup s;
  s.graph = generate(config.graph, config.n, config.generator, graph_seed);
  s.basis = eigendecompose(laplacian(s.graph.graph, config.kind));
  if (config.signal_kind == config.kind) {
    s.signal = make_signal(config.signal, s.basis, s.graph.labels);
  } else {
    const auto signal_basis = eigendecompose(laplacian(s.graph.graph, config.signal_kind));
    s.signal = make_signal(config.signal, signal_basis, s.graph.labels);
  }
  return s;
}

ExperimentReport monte_carlo(Protocol protocol, const ExperimentConfig& config, int runs,
                             std::uint64_t base_seed, int threads) {
  if (runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  const auto specs = design_cascade(config.design, config.n, config.levels);

  ExperimentReport report;
  report.method = method_tag(config.design, config.kind);
  report.protocol = protocol;
  report.config = config;
  report.base_seed = base_seed;
  report.runs.resize(runs);

  std::optional<ExperimentSetup> shared;
  if (!config.vary_graph) shared = make_setup(config, base_seed);

  parallel_for(runs, threads, [&](int r) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
    std::optional<ExperimentSetup> own;
    if (config.vary_graph) own = make_setup(config, seed);
    const ExperimentSetup& s = config.vary_graph ? *own : *shared;

    RunRecord rec;
    rec.run = r;
    rec.seed = seed;
    if (protocol == Protocol::Denoise) {
      const Eigen::VectorXd noisy = add_noise(s.signal, config.sigma, noise_seed(seed));
      rec.baseline_snr_db = snr_db(s.signal, noisy);
      rec.snr_db =
          denoise_against(noisy, s.signal, s.basis, specs, config.levels, config.sigma).snr_db;
    } else {
      rec.snr_db = nla(s.signal, s.basis, specs, config.levels, config.fraction).snr_db;
      rec.baseline_snr_db = 0.0;
    }
    report.runs[r] = rec;
  });

  std::vector<double> snr, base;
  for (const auto& rec : report.runs) {
    snr.push_back(rec.snr_db);
    base.push_back(rec.baseline_snr_db);
  }
  report.mean_snr_db = mean(snr);
  report.mean_baseline_snr_db = mean(base);
  return report;
}

PassbandReport passband_monte_carlo(const PassbandConfig& config, int runs,
                                    std::uint64_t base_seed, int threads) {
  if (runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  PassbandReport report;
  report.config = config;
  report.base_seed = base_seed;
  report.distances.assign(runs, std::vector<double>(config.designs.size()));
  report.half_count.assign(runs, 0);

  parallel_for(runs, threads, [&](int r) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
    const auto g = generate(GraphModel::RandomSensor, config.n, config.generator, seed);
    const SpectralBasis basis = eigendecompose(laplacian(g.graph, config.kind));
    const Eigen::VectorXd f =
        igft(basis, noisy_exponential_spectrum(basis, config.sigma, noise_seed(seed)));
    const auto results = passband_compare(basis, f, config.designs);
    for (std::size_t d = 0; d < results.size(); ++d) report.distances[r][d] = results[d].distance;
    report.half_count[r] = static_cast<int>(value_ideal_gains(basis.values).sum());
  });

  report.mean_distance.assign(config.designs.size(), 0.0);
  for (std::size_t d = 0; d < config.designs.size(); ++d) {
    std::vector<double> col;
    for (const auto& row : report.distances) col.push_back(row[d]);
    report.mean_distance[d] = mean(col);
  }
  return report;
}

}  // namespace sgfb
