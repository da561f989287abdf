#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgfb/bipartite.hpp"
#include "sgfb/edge_list.hpp"
#include "sgfb/error.hpp"
#include "sgfb/experiments.hpp"
#include "sgfb/filters.hpp"
#include "sgfb/generators.hpp"
#include "sgfb/octave.hpp"
#include "sgfb/serialization.hpp"
#include "sgfb/signals.hpp"
#include "sgfb/spectral_basis.hpp"

namespace sgfb::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct GraphOptions {
  std::string graph = "sensor";
  int n = 100;
  int knn = 6;
  std::string sensor_rule = "radius";
  double concentrated = 0.0;
  int clusters = 4;
  std::string laplacian = "combinatorial";
  bool no_cache = false;
  std::string cache_dir;
};

struct LoadedGraph {
  Graph graph;
  std::vector<int> labels;  // empty for graphs read from file
};

OperatorKind parse_kind(const std::string& s) {
  if (s == "combinatorial" || s == "C") return OperatorKind::Combinatorial;
  if (s == "normalized" || s == "N") return OperatorKind::SymmetricNormalized;
  throw Error(ErrorCode::InvalidArgument, "unknown laplacian '" + s + "'");
}

SignalModel parse_signal(const std::string& s) {
  if (s == "smooth") return SignalModel::SmoothExponential;
  if (s == "localized") return SignalModel::LocalizedMixture;
  if (s == "mixed") return SignalModel::MixedSpectral;
  throw Error(ErrorCode::InvalidArgument, "unknown signal model '" + s + "'");
}

bool is_graph_file(const std::string& source) {
  std::error_code ec;
  return fs::is_regular_file(source, ec);
}

GeneratorParams generator_params(const GraphOptions& o) {
  GeneratorParams p;
  p.knn = o.knn;
  p.sensor_rule = parse_sensor_rule(o.sensor_rule);
  p.concentrated_fraction = o.concentrated;
  p.clusters = o.clusters;
  return p;
}

LoadedGraph load_graph(const GraphOptions& o, std::uint64_t seed) {
  if (is_graph_file(o.graph)) return {load_edge_list(o.graph), {}};
  auto g = generate(parse_graph_model(o.graph), o.n, generator_params(o), seed);
  return {std::move(g.graph), std::move(g.labels)};
}

SpectralBasis load_basis(const Graph& g, const GraphOptions& o) {
  const auto op = laplacian(g, parse_kind(o.laplacian));
  if (o.no_cache) return eigendecompose(op);
  const BasisCache cache(o.cache_dir.empty() ? BasisCache::default_dir() : fs::path(o.cache_dir));
  return cache.get_or_compute(op);
}

void add_graph_options(CLI::App* sub, GraphOptions& o) {
  sub->add_option("--graph", o.graph, "generator name or edge-list file")->capture_default_str();
  sub->add_option("--n", o.n, "vertex count for generated graphs")->capture_default_str();
  sub->add_option("--k", o.knn, "nearest neighbours for sensor/swissroll")->capture_default_str();
  sub->add_option("--sensor-rule", o.sensor_rule, "knn | radius")->capture_default_str();
  sub->add_option("--concentrated", o.concentrated,
                  "share of sensor points packed into one corner")
      ->capture_default_str();
  sub->add_option("--clusters", o.clusters, "community count")->capture_default_str();
  sub->add_option("--laplacian", o.laplacian, "combinatorial | normalized")
      ->capture_default_str();
  sub->add_flag("--no-cache", o.no_cache, "always recompute the eigendecomposition");
  sub->add_option("--cache-dir", o.cache_dir, "basis cache directory");
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  writer(out);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

bool wants_json(const std::string& path) { return fs::path(path).extension() == ".json"; }

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(6) << v;
  return ss.str();
}

void write_reports(const std::string& path, const std::vector<ExperimentReport>& reports) {
  if (path.empty()) return;
  if (wants_json(path)) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    write_file(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return;
  }
  write_file(path, [&](std::ostream& out) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::ostringstream ss;
      write_report_csv(ss, reports[i]);
      std::string text = ss.str();
      if (i > 0) text.erase(0, text.find('\n') + 1);
      out << text;
    }
  });
}

Eigen::VectorXd random_signal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) f[i] = dist(rng);
  return f;
}

struct ExperimentOptions {
  GraphOptions graph;
  std::string signal = "smooth";
  std::string design = "cdf97";
  int levels = 2;
  int runs = 100;
  int threads = 0;
  bool fixed_graph = false;
  std::string out;
};

void add_experiment_options(CLI::App* sub, ExperimentOptions& o) {
  add_graph_options(sub, o.graph);
  sub->add_option("--signal", o.signal, "smooth | localized | mixed")->capture_default_str();
  sub->add_option("--design", o.design, "ideal | meyer | cdf97")->capture_default_str();
  sub->add_option("--levels", o.levels, "octave depth")->capture_default_str();
  sub->add_option("--runs", o.runs, "Monte Carlo runs")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads (0 = all cores)")->capture_default_str();
  sub->add_flag("--fixed-graph", o.fixed_graph, "reuse the base-seed graph for every run");
  sub->add_option("--out", o.out, "report path (.json or .csv)");
}

ExperimentConfig experiment_config(const ExperimentOptions& o) {
  if (is_graph_file(o.graph.graph)) {
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo protocols need a graph generator");
  }
  ExperimentConfig c;
  c.graph = parse_graph_model(o.graph.graph);
  c.n = o.graph.n;
  c.generator = generator_params(o.graph);
  c.vary_graph = !o.fixed_graph;
  c.signal = parse_signal(o.signal);
  c.kind = parse_kind(o.graph.laplacian);
  c.design = parse_design(o.design);
  c.levels = o.levels;
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critically sampled graph filter banks with spectral-domain sampling", "sgfb"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "base seed for all randomness")->capture_default_str();

  std::map<CLI::App*, std::function<void()>> handlers;

  // gen-graph
  GraphOptions gg;
  std::string gg_out;
  auto* gen_graph = app.add_subcommand("gen-graph", "generate a graph and write it as an edge list");
  add_graph_options(gen_graph, gg);
  gen_graph->add_option("--out", gg_out, "edge-list path");
  gen_graph->add_option("--seed", seed, "base seed");
  handlers[gen_graph] = [&] {
    const auto g = load_graph(gg, seed);
    if (!gg_out.empty()) save_edge_list(gg_out, g.graph);
    out << "graph " << gg.graph << " n=" << g.graph.size() << " edges=" << g.graph.edges().size()
        << " connected=" << (g.graph.is_connected() ? "yes" : "no") << '\n';
  };

  // gen-signal
  GraphOptions gs;
  std::string gs_signal = "smooth", gs_out;
  double gs_noise = 0.0;
  auto* gen_signal = app.add_subcommand("gen-signal", "generate a graph signal");
  add_graph_options(gen_signal, gs);
  gen_signal->add_option("--signal", gs_signal, "smooth | localized | mixed")->capture_default_str();
  gen_signal->add_option("--noise", gs_noise, "standard deviation of added noise")
      ->capture_default_str();
  gen_signal->add_option("--out", gs_out, "signal CSV path");
  gen_signal->add_option("--seed", seed, "base seed");
  handlers[gen_signal] = [&] {
    const auto g = load_graph(gs, seed);
    const auto model = parse_signal(gs_signal);
    if (model != SignalModel::SmoothExponential && g.labels.empty()) {
      throw Error(ErrorCode::InvalidArgument, "signal '" + gs_signal + "' needs generator labels");
    }
    const auto basis = load_basis(g.graph, gs);
    Eigen::VectorXd f = make_signal(model, basis, g.labels);
    if (gs_noise > 0) f = add_noise(f, gs_noise, seed);
    if (!gs_out.empty()) save_signal(gs_out, f);
    out << "signal " << gs_signal << " n=" << f.size() << " norm=" << fmt(f.norm()) << '\n';
  };

  // decompose
  GraphOptions dc;
  std::string dc_in, dc_out, dc_spectrum, dc_design = "cdf97";
  int dc_levels = 1;
  auto* decompose = app.add_subcommand("decompose", "analyse a signal into a subband pyramid");
  add_graph_options(decompose, dc);
  decompose->add_option("--in", dc_in, "signal CSV")->required();
  decompose->add_option("--design", dc_design, "ideal | meyer | cdf97")->capture_default_str();
  decompose->add_option("--levels", dc_levels, "octave depth")->capture_default_str();
  decompose->add_option("--out", dc_out, "pyramid JSON path");
  decompose->add_option("--spectrum-out", dc_spectrum, "GFT dump (i,lambda,value)");
  decompose->add_option("--seed", seed, "base seed");
  handlers[decompose] = [&] {
    const auto g = load_graph(dc, seed);
    const auto f = load_signal(dc_in);
    const auto basis = load_basis(g.graph, dc);
    const auto specs = design_cascade(parse_design(dc_design), basis.size(), dc_levels);
    const auto pyramid = analyze_octave(basis, specs, f, dc_levels);
    if (!dc_out.empty()) save_pyramid(dc_out, pyramid);
    if (!dc_spectrum.empty()) {
      write_file(dc_spectrum,
                 [&](std::ostream& o) { write_spectrum_csv(o, basis.values, gft(basis, f)); });
    }
    out << "decompose n=" << pyramid.n << " levels=" << pyramid.levels
        << " bands=" << pyramid.bands.size() << " coefficients=" << pyramid.coefficient_count()
        << '\n';
  };

  // reconstruct
  GraphOptions rc;
  std::string rc_in, rc_out, rc_design = "cdf97";
  auto* reconstruct = app.add_subcommand("reconstruct", "synthesise a signal from a pyramid");
  add_graph_options(reconstruct, rc);
  reconstruct->add_option("--in", rc_in, "pyramid JSON")->required();
  reconstruct->add_option("--design", rc_design, "ideal | meyer | cdf97")->capture_default_str();
  reconstruct->add_option("--out", rc_out, "signal CSV path");
  reconstruct->add_option("--seed", seed, "base seed");
  handlers[reconstruct] = [&] {
    const auto g = load_graph(rc, seed);
    const auto pyramid = load_pyramid(rc_in);
    const auto basis = load_basis(g.graph, rc);
    if (pyramid.n != basis.size()) {
      throw Error(ErrorCode::DimensionMismatch, "pyramid length " + std::to_string(pyramid.n) +
                                                    " does not match graph size " +
                                                    std::to_string(basis.size()));
    }
    const auto specs = design_cascade(parse_design(rc_design), pyramid.n, pyramid.levels);
    const auto f = synthesize_octave(basis, specs, pyramid);
    if (!rc_out.empty()) save_signal(rc_out, f);
    out << "reconstruct n=" << f.size() << " norm=" << fmt(f.norm()) << '\n';
  };

  // nla
  ExperimentOptions nl;
  std::vector<double> fractions{0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
  auto* nla_cmd = app.add_subcommand("nla", "nonlinear approximation Monte Carlo");
  add_experiment_options(nla_cmd, nl);
  nla_cmd->add_option("--fractions", fractions, "kept coefficient fractions")
      ->delimiter(',')
      ->capture_default_str();
  nla_cmd->add_option("--seed", seed, "base seed");
  handlers[nla_cmd] = [&] {
    auto config = experiment_config(nl);
    std::vector<ExperimentReport> reports;
    out << "nla " << method_tag(config.design, config.kind);
    for (double fr : fractions) {
      config.fraction = fr;
      reports.push_back(monte_carlo(Protocol::Nla, config, nl.runs, seed, nl.threads));
      out << " f=" << fmt(fr) << ":" << fmt(reports.back().mean_snr_db) << "dB";
    }
    out << '\n';
    write_reports(nl.out, reports);
  };

  // denoise
  ExperimentOptions dn;
  std::vector<double> sigmas{0.25};
  auto* denoise_cmd = app.add_subcommand("denoise", "hard-thresholding denoising Monte Carlo");
  add_experiment_options(denoise_cmd, dn);
  denoise_cmd->add_option("--sigma", sigmas, "noise standard deviations")
      ->delimiter(',')
      ->capture_default_str();
  denoise_cmd->add_option("--seed", seed, "base seed");
  handlers[denoise_cmd] = [&] {
    auto config = experiment_config(dn);
    std::vector<ExperimentReport> reports;
    out << "denoise " << method_tag(config.design, config.kind);
    for (double s : sigmas) {
      config.sigma = s;
      reports.push_back(monte_carlo(Protocol::Denoise, config, dn.runs, seed, dn.threads));
      out << " sigma=" << fmt(s) << ": noisy " << fmt(reports.back().mean_baseline_snr_db)
          << "dB denoised " << fmt(reports.back().mean_snr_db) << "dB";
    }
    out << '\n';
    write_reports(dn.out, reports);
  };

  // verify-pr
  std::string vp_design = "meyer";
  int vp_n = 64;
  auto* verify_pr_cmd = app.add_subcommand("verify-pr", "check the perfect-reconstruction conditions");
  verify_pr_cmd->add_option("--design", vp_design, "ideal | meyer | cdf97")->capture_default_str();
  verify_pr_cmd->add_option("--n", vp_n, "spectrum length")->capture_default_str();
  handlers[verify_pr_cmd] = [&] {
    const auto spec = make_design(parse_design(vp_design), vp_n);
    const auto r = verify_pr(spec);
    out << json{{"design", std::string(to_string(spec.design))},
                {"n", vp_n},
                {"c", spec.c},
                {"identity_residual", r.max_residual_identity},
                {"alias_residual", r.max_residual_alias}}
               .dump()
        << '\n';
  };

  // verify-theorem2
  GraphOptions t2;
  t2.graph = "bipartite";
  t2.n = 20;
  auto* theorem2 = app.add_subcommand(
      "verify-theorem2", "compare spectral and vertex downsampling on a bipartite graph");
  add_graph_options(theorem2, t2);
  theorem2->add_option("--seed", seed, "base seed");
  handlers[theorem2] = [&] {
    const auto g = load_graph(t2, seed);
    const auto r = verify_theorem2(g.graph, random_signal(g.graph.size(), seed));
    out << json{{"n", g.graph.size()},
                {"max_deviation", r.max_deviation},
                {"kron_residual", r.kron_residual},
                {"u1_orthogonality", r.u1_orthogonality},
                {"basis_residual", r.basis_residual}}
               .dump()
        << '\n';
  };

  // verify-theorem3
  GraphOptions t3;
  t3.graph = "bipartite";
  t3.n = 20;
  std::string t3_design = "meyer";
  auto* theorem3 = app.add_subcommand(
      "verify-theorem3", "compare spectral and vertex sampling transfer on a bipartite graph");
  add_graph_options(theorem3, t3);
  theorem3->add_option("--design", t3_design, "ideal | meyer | cdf97")->capture_default_str();
  theorem3->add_option("--seed", seed, "base seed");
  handlers[theorem3] = [&] {
    const auto g = load_graph(t3, seed);
    const auto spec = make_design(parse_design(t3_design), g.graph.size());
    const auto r = verify_theorem3(g.graph, spec);
    out << json{{"n", g.graph.size()},
                {"design", std::string(to_string(spec.design))},
                {"spectrum_symmetry", r.spectrum_symmetry},
                {"pr_residual", r.pr_residual},
                {"scale", r.scale},
                {"off_scale", r.off_scale}}
               .dump()
        << '\n';
  };

  // filter-dump
  std::string fd_design = "cdf97", fd_out;
  int fd_n = 64;
  auto* filter_dump = app.add_subcommand("filter-dump", "write the four gain vectors as CSV");
  filter_dump->add_option("--design", fd_design, "ideal | meyer | cdf97")->capture_default_str();
  filter_dump->add_option("--n", fd_n, "spectrum length")->capture_default_str();
  filter_dump->add_option("--out", fd_out, "CSV path (stdout when omitted)");
  handlers[filter_dump] = [&] {
    const auto spec = make_design(parse_design(fd_design), fd_n);
    if (fd_out.empty()) {
      write_filter_csv(out, spec);
      return;
    }
    write_file(fd_out, [&](std::ostream& o) { write_filter_csv(o, spec); });
    out << "filter " << to_string(spec.design) << " n=" << fd_n << " c=" << fmt(spec.c) << '\n';
  };

  // passband-compare
  GraphOptions pb;
  double pb_sigma = 0.05;
  int pb_runs = 100, pb_threads = 0;
  std::vector<std::string> pb_designs{"ideal", "meyer", "cdf97"};
  std::string pb_out, pb_spectrum;
  auto* passband = app.add_subcommand(
      "passband-compare", "distance of each low-pass design from the value-based ideal");
  add_graph_options(passband, pb);
  passband->add_option("--sigma", pb_sigma, "spectral noise level")->capture_default_str();
  passband->add_option("--runs", pb_runs, "Monte Carlo runs")->capture_default_str();
  passband->add_option("--threads", pb_threads, "worker threads (0 = all cores)");
  passband->add_option("--designs", pb_designs, "designs to compare")
      ->delimiter(',')
      ->capture_default_str();
  passband->add_option("--out", pb_out, "report path (.json or .csv)");
  passband->add_option("--spectrum-out", pb_spectrum,
                       "first run's noisy spectrum dump (i,lambda,value)");
  passband->add_option("--seed", seed, "base seed");
  handlers[passband] = [&] {
    if (is_graph_file(pb.graph) || parse_graph_model(pb.graph) != GraphModel::RandomSensor) {
      throw Error(ErrorCode::InvalidArgument, "passband-compare uses the sensor generator");
    }
    PassbandConfig config;
    config.n = pb.n;
    config.generator = generator_params(pb);
    config.kind = parse_kind(pb.laplacian);
    config.sigma = pb_sigma;
    config.designs.clear();
    for (const auto& d : pb_designs) config.designs.push_back(parse_design(d));
    const auto report = passband_monte_carlo(config, pb_runs, seed, pb_threads);
    if (!pb_out.empty()) {
      write_file(pb_out, [&](std::ostream& o) {
        if (wants_json(pb_out)) {
          o << passband_to_json(report).dump(2) << '\n';
        } else {
          write_passband_csv(o, report);
        }
      });
    }
    if (!pb_spectrum.empty()) {
      const auto g = generate(GraphModel::RandomSensor, config.n, config.generator, seed);
      const auto basis = eigendecompose(laplacian(g.graph, config.kind));
      const auto spectrum = noisy_exponential_spectrum(basis, config.sigma, seed);
      write_file(pb_spectrum,
                 [&](std::ostream& o) { write_spectrum_csv(o, basis.values, spectrum); });
    }
    out << "passband";
    for (std::size_t d = 0; d < config.designs.size(); ++d) {
      out << ' ' << to_string(config.designs[d]) << '=' << fmt(report.mean_distance[d]);
    }
    out << '\n';
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    for (auto* sub : app.get_subcommands()) handlers.at(sub)();
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sgfb::cli
