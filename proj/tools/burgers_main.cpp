// burgers <subcommand> [options]
//
// Subcommands: simulate, solve, shocks, regen, refine, integral.
// Flags override values read from --config.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "burgers/csv.hpp"
#include "burgers/experiment.hpp"

namespace {

using nlohmann::json;

json read_config_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) burgers::fail(burgers::ErrorKind::io, "cannot read config " + file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    burgers::fail(burgers::ErrorKind::config, file + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Cole solutions of inviscid Burgers with Levy initial potential"};
  std::string command;
  std::string config_file;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> reps, n;
  std::optional<std::string> family, path_file, jumps_file;
  std::optional<double> alpha, beta, sigma, scale, L, t;

  app.add_option("subcommand", command, "simulate | solve | shocks | regen | refine | integral")
      ->required()
      ->check(CLI::IsMember({"simulate", "solve", "shocks", "regen", "refine", "integral"}));
  app.add_option("--config", config_file, "JSON config file");
  app.add_option("--out-dir", out_dir, "output directory");
  app.add_option("--seed", seed);
  app.add_option("--reps", reps, "replicate count (n_rep)");
  app.add_option("--family", family, "brownian | stable | cauchy | compound_poisson");
  app.add_option("--alpha", alpha);
  app.add_option("--beta", beta);
  app.add_option("--sigma", sigma);
  app.add_option("--scale", scale);
  app.add_option("--L", L, "grid half-width");
  app.add_option("--n", n, "grid point count (odd)");
  app.add_option("--t", t, "solution time");
  app.add_option("--path", path_file, "path CSV to use instead of sampling");
  app.add_option("--jumps", jumps_file, "jumps CSV for --path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    try {
      json j = config_file.empty() ? json::object() : read_config_json(config_file);
      if (!j.is_object()) burgers::fail(burgers::ErrorKind::config, "config must be a JSON object");
      if (seed) j["seed"] = *seed;
      if (reps) j["n_rep"] = *reps;
      if (family) j["family"] = *family;
      if (alpha) j["alpha"] = *alpha;
      if (beta) j["beta"] = *beta;
      if (sigma) j["sigma"] = *sigma;
      if (scale) j["scale"] = *scale;
      if (L) j["L"] = *L;
      if (n) {
        j["n"] = *n;
        j["h"] = 0.0;
      }
      if (t) j["t"] = *t;
      if (path_file) j["path_file"] = *path_file;
      if (jumps_file) j["jumps_file"] = *jumps_file;

      const auto cfg = burgers::config_from_json(j);
      const auto files = burgers::run_experiment(cfg, burgers::parse_subcommand(command), out_dir);
      for (const auto& f : files) std::cout << (std::filesystem::path(out_dir) / f).string() << "\n";
      return 0;
    } catch (const burgers::Error& e) {
      std::cerr << e.what() << "\n";
      try {
        std::filesystem::create_directories(out_dir);
        burgers::io::write_text_file(std::filesystem::path(out_dir) / "error.json",
                                     burgers::error_json(e));
      } catch (...) {
      }
      return burgers::exit_code_for(e.kind());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
