#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sgfb/error.hpp"
#include "sgfb/spectral_basis.hpp"

namespace sgfb {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

std::string hex(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

const char* kind_name(OperatorKind k) {
  return k == OperatorKind::Combinatorial ? "combinatorial" : "normalized";
}

}  // namespace

BasisCache::BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::uint64_t BasisCache::content_hash(const OperatorMatrix& op) {
  std::uint64_t h = kFnvOffset;
  const std::int32_t kind = static_cast<std::int32_t>(op.kind);
  const std::int64_t n = op.values.rows();
  fnv_mix(h, &kind, sizeof kind);
  fnv_mix(h, &n, sizeof n);
  fnv_mix(h, op.values.data(), sizeof(double) * op.values.size());
  return h;
}

std::filesystem::path BasisCache::entry_path(const OperatorMatrix& op) const {
  return dir_ / ("basis-" + hex(content_hash(op)) + ".json");
}

std::filesystem::path BasisCache::default_dir() {
  if (const char* d = std::getenv("SGFB_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) {
    return std::filesystem::path(d) / "sgfb";
  }
  if (const char* d = std::getenv("HOME"); d && *d) {
    return std::filesystem::path(d) / ".cache" / "sgfb";
  }
  return std::filesystem::temp_directory_path() / "sgfb-cache";
}

SpectralBasis BasisCache::get_or_compute(const OperatorMatrix& op) const {
  const auto path = entry_path(op);
  const int n = op.size();
  if (std::ifstream in(path); in) {
    try {
      const auto j = nlohmann::json::parse(in);
      const auto lambda = j.at("lambda").get<std::vector<double>>();
      const auto u = j.at("U").get<std::vector<double>>();
      if (j.at("hash").get<std::string>() == hex(content_hash(op)) &&
          j.at("n").get<int>() == n && lambda.size() == static_cast<std::size_t>(n) &&
          u.size() == static_cast<std::size_t>(n) * n) {
        SpectralBasis b;
        b.kind = op.kind;
        b.values = Eigen::Map<const Eigen::VectorXd>(lambda.data(), n);
        b.vectors = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                   Eigen::RowMajor>>(u.data(), n, n);
        return b;
      }
    } catch (const nlohmann::json::exception&) {
      // Corrupt entry: recompute and overwrite below.
    }
  }

  SpectralBasis b = eigendecompose(op);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  nlohmann::json j;
  j["hash"] = hex(content_hash(op));
  j["kind"] = kind_name(op.kind);
  j["n"] = n;
  j["lambda"] = std::vector<double>(b.values.data(), b.values.data() + n);
  std::vector<double> u(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) u[static_cast<std::size_t>(r) * n + c] = b.vectors(r, c);
  }
  j["U"] = std::move(u);
  // A failed write only costs a recomputation next time.
  const auto tmp = path.string() + ".tmp";
  if (std::ofstream out(tmp); out) {
    out << j.dump();
    out.close();
    std::filesystem::rename(tmp, path, ec);
  }
  return b;
}

}  // namespace sgfb
