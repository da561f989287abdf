#pragma once

#include <filesystem>
#include <iosfwd>

#include "sgfb/graph.hpp"

namespace sgfb {

// Text format:
//   n <count>
//   u v w
//   ...
// Blank lines and lines starting with '#' are ignored. Violations are
// reported as Error with the offending line number in the message.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace sgfb
