#pragma once

// Subcommand driver: runs one experiment from a config and writes its report
// files into an output directory.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/config.hpp"
#include "burgers/errors.hpp"

namespace burgers {

enum class Subcommand { simulate, solve, shocks, regen, refine, integral };

Subcommand parse_subcommand(std::string_view word);
std::string to_string(Subcommand cmd);

// Process exit status for an error kind; 0 is success.
int exit_code_for(ErrorKind kind);

// "tool=burgers version=... config_hash=... seed=..."
std::string meta_line(const ExperimentConfig& cfg);

// Writes effective_config.json plus the subcommand's files and returns the
// names of the files written. Throws Error on failure.
std::vector<std::string> run_experiment(const ExperimentConfig& cfg, Subcommand cmd,
                                        const std::filesystem::path& out_dir);

// Machine-readable error report (written as error.json by the CLI).
std::string error_json(const Error& e);

}  // namespace burgers
