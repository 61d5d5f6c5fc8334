#include "burgers/experiment.hpp"

#include <memory>

#include "burgers/csv.hpp"
#include "burgers/regen.hpp"
#include "burgers/shocks.hpp"
#include "burgers/solver.hpp"

namespace burgers {

using nlohmann::json;

Subcommand parse_subcommand(std::string_view word) {
  if (word == "simulate") return Subcommand::simulate;
  if (word == "solve") return Subcommand::solve;
  if (word == "shocks") return Subcommand::shocks;
  if (word == "regen") return Subcommand::regen;
  if (word == "refine") return Subcommand::refine;
  if (word == "integral") return Subcommand::integral;
  fail(ErrorKind::config, "unknown subcommand '" + std::string(word) + "'");
}

std::string to_string(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::simulate: return "simulate";
    case Subcommand::solve: return "solve";
    case Subcommand::shocks: return "shocks";
    case Subcommand::regen: return "regen";
    case Subcommand::refine: return "refine";
    case Subcommand::integral: return "integral";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
    case ErrorKind::parameter:
    case ErrorKind::grid:
    case ErrorKind::input: return 2;
    case ErrorKind::window_too_small: return 3;
    case ErrorKind::insufficient_data: return 4;
    case ErrorKind::out_of_domain: return 5;
    case ErrorKind::io: return 6;
  }
  return 1;
}

std::string meta_line(const ExperimentConfig& cfg) {
  return std::string("tool=") + kToolName + " version=" + kToolVersion +
         " config_hash=" + config_hash(cfg) + " seed=" + std::to_string(cfg.seed);
}

std::string error_json(const Error& e) {
  const json j{{"error", to_string(e.kind())},
               {"message", e.what()},
               {"exit_code", exit_code_for(e.kind())}};
  return j.dump(2) + "\n";
}

namespace {

std::shared_ptr<const LevyPath> input_path(const ExperimentConfig& cfg) {
  if (!cfg.path_file.empty()) {
    std::optional<std::filesystem::path> jumps;
    if (!cfg.jumps_file.empty()) jumps = cfg.jumps_file;
    return std::make_shared<const LevyPath>(io::read_path(cfg.path_file, jumps));
  }
  return std::make_shared<const LevyPath>(sample_path(to_params(cfg), grid_of(cfg), cfg.seed));
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json regen_json(const ExperimentConfig& cfg, const RegenReport& r,
                const std::optional<IndependenceResult>& ind) {
  json j;
  j["meta"] = {{"tool", kToolName},
               {"version", kToolVersion},
               {"config_hash", config_hash(cfg)},
               {"seed", cfg.seed}};
  j["path"] = {{"R", optional_number(r.R)},
               {"S", optional_number(r.S)},
               {"T_first", optional_number(r.T_first)},
               {"rk", r.rk},
               {"s_equals_t", r.s_equals_t},
               {"rk_converged", r.rk_converged},
               {"steps", r.steps}};
  if (ind) {
    j["independence"] = {
        {"p_value", ind->p_value},
        {"dcor", ind->dcor},
        {"dcov2", ind->dcov2},
        {"pearson", {{"mean_u", ind->pearson[0]}, {"min_u", ind->pearson[1]}, {"shock_count", ind->pearson[2]}}},
        {"permutations", ind->permutations},
        {"used", ind->used},
        {"dropped", ind->dropped},
        {"note",
         "compares low-dimensional features of u on either side of T; a large p-value fails to "
         "detect dependence and does not establish independence of the full processes"}};
  } else {
    j["independence"] = nullptr;
  }
  return j;
}

}  // namespace

std::vector<std::string> run_experiment(const ExperimentConfig& cfg, Subcommand cmd,
                                        const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::io, "cannot create output directory " + out_dir.string());

  const std::string meta = meta_line(cfg);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& text) {
    io::write_text_file(out_dir / name, text);
    written.push_back(name);
  };
  emit("effective_config.json", to_json(cfg).dump(2) + "\n");

  switch (cmd) {
    case Subcommand::simulate: {
      const auto path = input_path(cfg);
      emit("path.csv", io::path_csv(*path, meta));
      emit("jumps.csv", io::jumps_csv(*path, meta));
      break;
    }
    case Subcommand::solve: {
      const auto sol = solve(input_path(cfg), cfg.t, solve_options(cfg));
      emit("vertices.csv", io::vertices_csv(sol, meta));
      emit("eulerian.csv", io::eulerian_csv(sol, meta));
      break;
    }
    case Subcommand::shocks: {
      const auto sol = solve(input_path(cfg), cfg.t, solve_options(cfg));
      const auto report = extract_shocks(sol);
      emit("shocks.csv", io::shocks_csv(report, meta));
      emit("zero_set.csv", io::zero_set_csv(report, meta));
      emit("rarefactions.csv", io::rarefactions_csv(report, meta));
      break;
    }
    case Subcommand::regen: {
      const auto sol = solve(input_path(cfg), cfg.t, solve_options(cfg));
      const auto report = regen_report(sol, cfg.k_max);
      std::optional<IndependenceResult> ind;
      // The replicate study needs a process to sample from; a fixture path has none.
      if (cfg.path_file.empty()) {
        ind = independence_test(to_params(cfg), cfg.t, cfg.w, cfg.n_rep, cfg.seed, grid_of(cfg),
                                cfg.permutations);
      }
      emit("regen.json", regen_json(cfg, report, ind).dump(2) + "\n");
      emit("replicates.csv",
           io::replicates_csv(ind ? ind->table : std::vector<IndependenceReplicate>{}, meta));
      break;
    }
    case Subcommand::refine: {
      const auto rows = refinement_study(to_params(cfg), cfg.t, cfg.L, cfg.h_list, cfg.n_rep,
                                         cfg.seed, {cfg.stat_window[0], cfg.stat_window[1]});
      emit("refine.csv", io::refinement_csv(rows, meta));
      break;
    }
    case Subcommand::integral: {
      const auto rows = abruptness_integral_estimate(to_params(cfg), cfg.a, cfg.b, cfg.eps_list,
                                                     cfg.n_mc, cfg.seed);
      emit("integral.csv", io::integral_csv(rows, meta));
      break;
    }
  }
  return written;
}

}  // namespace burgers
