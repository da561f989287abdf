#pragma once

#include <filesystem>
#include <iosfwd>

#include <Eigen/Dense>
#include <json.hpp>

#include "sgfb/experiments.hpp"
#include "sgfb/octave.hpp"

namespace sgfb {

// Pyramid: {"n": N, "levels": L, "bands": [{"id": "...", "values": [...]}]}.
// Doubles are written with round-trip precision, so load(save(p)) == p
// bit for bit.
nlohmann::json pyramid_to_json(const SubbandPyramid& p);
SubbandPyramid pyramid_from_json(const nlohmann::json& j);
void save_pyramid(const std::filesystem::path& path, const SubbandPyramid& p);
SubbandPyramid load_pyramid(const std::filesystem::path& path);

// Signal: one value per line, optional leading "# n=<N>" header.
void write_signal_csv(std::ostream& out, const Eigen::VectorXd& f);
Eigen::VectorXd read_signal_csv(std::istream& in);
void save_signal(const std::filesystem::path& path, const Eigen::VectorXd& f);
Eigen::VectorXd load_signal(const std::filesystem::path& path);

/// Columns i,h0,h1,g0,g1.
void write_filter_csv(std::ostream& out, const FilterBankSpec& spec);
/// Columns i,lambda,value.
void write_spectrum_csv(std::ostream& out, const Eigen::VectorXd& lambda,
                        const Eigen::VectorXd& values);

nlohmann::json report_to_json(const ExperimentReport& r);
/// Columns method,<sigma|fraction>,run,snr_db; one row per run then a "mean" row.
void write_report_csv(std::ostream& out, const ExperimentReport& r);

nlohmann::json passband_to_json(const PassbandReport& r);
/// Columns run,design,distance.
void write_passband_csv(std::ostream& out, const PassbandReport& r);

}  // namespace sgfb
