#include "sgfb/serialization.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

nlohmann::json snr_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return ss.str();
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

const char* kind_name(OperatorKind k) {
  return k == OperatorKind::Combinatorial ? "combinatorial" : "normalized";
}

}  // namespace

nlohmann::json pyramid_to_json(const SubbandPyramid& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["levels"] = p.levels;
  j["bands"] = nlohmann::json::array();
  for (const auto& b : p.bands) {
    j["bands"].push_back({{"id", b.id}, {"values", to_std(b.values)}});
  }
  return j;
}

SubbandPyramid pyramid_from_json(const nlohmann::json& j) {
  try {
    SubbandPyramid p;
    p.n = j.at("n").get<int>();
    p.levels = j.at("levels").get<int>();
    check_depth(p.n, p.levels);
    for (const auto& jb : j.at("bands")) {
      Band b;
      b.id = jb.at("id").get<std::string>();
      const bool residual_low = b.id.find('H') == std::string::npos;
      b.depth = static_cast<int>(b.id.size());
      if (b.id.empty() || (residual_low && b.depth != p.levels) ||
          (!residual_low && (b.id.back() != 'H' || b.depth > p.levels))) {
        throw Error(ErrorCode::ParseError, "invalid band id '" + b.id + "'");
      }
      const auto values = jb.at("values").get<std::vector<double>>();
      if (values.size() != static_cast<std::size_t>(p.n >> b.depth)) {
        throw Error(ErrorCode::ParseError, "band '" + b.id + "' has wrong length");
      }
      b.values = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                   static_cast<Eigen::Index>(values.size()));
      p.bands.push_back(std::move(b));
    }
    if (p.coefficient_count() != static_cast<std::size_t>(p.n) ||
        static_cast<int>(p.bands.size()) != p.levels + 1) {
      throw Error(ErrorCode::ParseError, "pyramid is not critically sampled");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed pyramid: ") + e.what());
  }
}

void save_pyramid(const std::filesystem::path& path, const SubbandPyramid& p) {
  auto out = open_out(path);
  out << pyramid_to_json(p).dump() << '\n';
}

SubbandPyramid load_pyramid(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return pyramid_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed pyramid: ") + e.what());
  }
}

void write_signal_csv(std::ostream& out, const Eigen::VectorXd& f) {
  out << "# n=" << f.size() << '\n';
  for (Eigen::Index i = 0; i < f.size(); ++i) out << csv_number(f[i]) << '\n';
}

Eigen::VectorXd read_signal_csv(std::istream& in) {
  std::vector<double> values;
  long declared = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      const auto eq = line.find("n=");
      if (eq != std::string::npos) declared = std::stol(line.substr(eq + 2));
      continue;
    }
    std::istringstream ss(line);
    double v = 0;
    std::string rest;
    if (!(ss >> v) || (ss >> rest)) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected one number");
    }
    values.push_back(v);
  }
  if (declared >= 0 && static_cast<std::size_t>(declared) != values.size()) {
    throw Error(ErrorCode::ParseError, "header declares n=" + std::to_string(declared) +
                                           " but file has " + std::to_string(values.size()) +
                                           " values");
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void save_signal(const std::filesystem::path& path, const Eigen::VectorXd& f) {
  auto out = open_out(path);
  write_signal_csv(out, f);
}

Eigen::VectorXd load_signal(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_signal_csv(in);
}

void write_filter_csv(std::ostream& out, const FilterBankSpec& spec) {
  out << "i,h0,h1,g0,g1\n";
  for (int i = 0; i < spec.size(); ++i) {
    out << i << ',' << csv_number(spec.h0[i]) << ',' << csv_number(spec.h1[i]) << ','
        << csv_number(spec.g0[i]) << ',' << csv_number(spec.g1[i]) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const Eigen::VectorXd& lambda,
                        const Eigen::VectorXd& values) {
  if (lambda.size() != values.size()) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum and eigenvalues differ in length");
  }
  out << "i,lambda,value\n";
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    out << i << ',' << csv_number(lambda[i]) << ',' << csv_number(values[i]) << '\n';
  }
}

nlohmann::json report_to_json(const ExperimentReport& r) {
  const auto& c = r.config;
  nlohmann::json j;
  j["method"] = r.method;
  j["protocol"] = r.protocol == Protocol::Denoise ? "denoise" : "nla";
  j["graph"] = std::string(to_string(c.graph));
  j["n"] = c.n;
  j["vary_graph"] = c.vary_graph;
  j["laplacian"] = kind_name(c.kind);
  j["design"] = std::string(to_string(c.design));
  j["levels"] = c.levels;
  if (r.protocol == Protocol::Denoise) {
    j["sigma"] = c.sigma;
  } else {
    j["fraction"] = c.fraction;
  }
  j["base_seed"] = r.base_seed;
  j["mean_snr_db"] = snr_value(r.mean_snr_db);
  if (r.protocol == Protocol::Denoise) j["mean_noisy_snr_db"] = snr_value(r.mean_baseline_snr_db);
  j["runs"] = nlohmann::json::array();
  for (const auto& rec : r.runs) {
    nlohmann::json jr{{"run", rec.run}, {"seed", rec.seed}, {"snr_db", snr_value(rec.snr_db)}};
    if (r.protocol == Protocol::Denoise) jr["noisy_snr_db"] = snr_value(rec.baseline_snr_db);
    j["runs"].push_back(std::move(jr));
  }
  return j;
}

void write_report_csv(std::ostream& out, const ExperimentReport& r) {
  const bool denoise = r.protocol == Protocol::Denoise;
  const double param = denoise ? r.config.sigma : r.config.fraction;
  out << "method," << (denoise ? "sigma" : "fraction") << ",run,snr_db\n";
  for (const auto& rec : r.runs) {
    out << r.method << ',' << csv_number(param) << ',' << rec.run << ','
        << csv_number(rec.snr_db) << '\n';
  }
  out << r.method << ',' << csv_number(param) << ",mean," << csv_number(r.mean_snr_db) << '\n';
}

nlohmann::json passband_to_json(const PassbandReport& r) {
  nlohmann::json j;
  j["n"] = r.config.n;
  j["concentrated_fraction"] = r.config.generator.concentrated_fraction;
  j["laplacian"] = kind_name(r.config.kind);
  j["sigma"] = r.config.sigma;
  j["base_seed"] = r.base_seed;
  j["designs"] = nlohmann::json::array();
  for (std::size_t d = 0; d < r.config.designs.size(); ++d) {
    j["designs"].push_back({{"design", std::string(to_string(r.config.designs[d]))},
                            {"mean_distance", r.mean_distance[d]}});
  }
  j["runs"] = nlohmann::json::array();
  for (std::size_t run = 0; run < r.distances.size(); ++run) {
    j["runs"].push_back({{"run", run},
                         {"seed", r.base_seed + run},
                         {"below_half_max", r.half_count[run]},
                         {"distances", r.distances[run]}});
  }
  return j;
}

void write_passband_csv(std::ostream& out, const PassbandReport& r) {
  out << "run,design,distance\n";
  for (std::size_t run = 0; run < r.distances.size(); ++run) {
    for (std::size_t d = 0; d < r.config.designs.size(); ++d) {
      out << run << ',' << to_string(r.config.designs[d]) << ','
          << csv_number(r.distances[run][d]) << '\n';
    }
  }
}

}  // namespace sgfb
