#pragma once

// Experiment configuration: JSON load/emit, defaults, and conversion to the
// core parameter types.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/levy.hpp"
#include "burgers/solver.hpp"

namespace burgers {

inline constexpr const char* kToolName = "burgers";
inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
  // process
  std::string family = "brownian";
  double sigma = 1.0;
  double alpha = 1.5;
  double beta = 0.0;
  double scale = 1.0;
  double rate = 1.0;
  std::string jump_law = "normal";  // constant | normal | laplace
  double jump_a = 0.0;
  double jump_b = 1.0;

  // grid and time
  double L = 16.0;
  std::size_t n = 8193;
  double h = 0.0;  // > 0 overrides n
  double t = 1.0;
  std::uint64_t seed = 0;
  double window_margin = 8.0;  // L / 2 unless given

  // replicated studies
  std::size_t n_rep = 200;
  std::vector<double> h_list = {1.0 / 64, 1.0 / 128, 1.0 / 256, 1.0 / 512};
  std::vector<double> stat_window = {1.0, 2.0};
  std::vector<double> eps_list = {0.1, 0.01, 0.001};
  double a = -1.0;
  double b = 1.0;
  std::size_t n_mc = 10000;
  double w = 0.5;
  std::size_t k_max = 0;
  std::size_t permutations = 999;

  // optional input path (fixtures); empty = sample from the family
  std::string path_file;
  std::string jumps_file;

  bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
// Unknown keys and wrongly typed values are config errors.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& file);

// FNV-1a of the compact effective-config JSON, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

LevyParams to_params(const ExperimentConfig& cfg);
GridSpec grid_of(const ExperimentConfig& cfg);
SolveOptions solve_options(const ExperimentConfig& cfg);

}  // namespace burgers
