#include "sgfb/edge_list.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "sgfb/error.hpp"

namespace sgfb {
namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void fail(ErrorCode code, int line_no, const std::string& what) {
  throw Error(code, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    std::string rest;
    if (!(ss >> tag >> n) || tag != "n" || n < 0 || (ss >> rest)) {
      fail(ErrorCode::ParseError, line_no, "expected header 'n <count>'");
    }
    break;
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing header 'n <count>'");

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    long long u = 0;
    long long v = 0;
    double w = 0;
    std::string rest;
    if (!(ss >> u >> v >> w) || (ss >> rest)) {
      fail(ErrorCode::ParseError, line_no, "expected 'u v w'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::IndexOutOfRange, line_no, "vertex index out of range");
    }
    if (u == v) fail(ErrorCode::SelfLoop, line_no, "self-loop");
    if (!std::isfinite(w) || w < 0) {
      fail(ErrorCode::NegativeWeight, line_no, "weight must be finite and nonnegative");
    }
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) fail(ErrorCode::DuplicateEdge, line_no, "duplicate edge");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  return Graph::build(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.size() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace sgfb
