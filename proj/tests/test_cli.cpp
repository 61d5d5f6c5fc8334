#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sys/wait.h>

#include "burgers/csv.hpp"
#include "burgers/experiment.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace burgers;
namespace fs = std::filesystem;
using nlohmann::json;

const std::string kFixtures = BURGERS_FIXTURE_DIR;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("burgers_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BURGERS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ExperimentConfig fixture_config(const std::string& name) {
  ExperimentConfig c = config_from_json(json{{"L", 4.0}});
  c.path_file = kFixtures + "/" + name + "_path.csv";
  c.jumps_file = kFixtures + "/" + name + "_jumps.csv";
  return c;
}

// --- numbers and config -------------------------------------------------------

TEST(Csv, DoublesRoundTripExactly) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int i = 0; i < 10000; ++i) {
    double v;
    const std::uint64_t b = bits(rng);
    std::memcpy(&v, &b, sizeof v);
    if (!std::isfinite(v)) continue;
    ASSERT_EQ(io::parse_double(io::format_double(v)), v);
  }
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_TRUE(std::isinf(io::parse_double("inf")));
  EXPECT_THROW(io::parse_double("1.5x"), Error);
}

TEST(Csv, ParseSkipsMetadataAndChecksWidth) {
  const auto t = io::parse_csv("# tool=x\na,b\n1,2\n\n3,4\n");
  EXPECT_EQ(t.meta, "tool=x");
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_THROW(io::parse_csv("a,b\n1\n"), Error);
  EXPECT_THROW(t.column("c"), Error);
}

TEST(Config, RoundTripsThroughJson) {
  ExperimentConfig c;
  c.family = "stable";
  c.alpha = 0.75;
  c.seed = 0xFFFFFFFFFFFFFFFFULL;
  c.h_list = {0.1, 0.05};
  c.window_margin = 2.5;
  const auto back = config_from_json(json::parse(to_json(c).dump()));
  EXPECT_EQ(back, c);
  EXPECT_EQ(config_hash(back), config_hash(c));
}

TEST(Config, DefaultsAreExplicitAndMarginFollowsL) {
  const auto c = config_from_json(json{{"L", 6.0}});
  EXPECT_EQ(c.window_margin, 3.0);
  const auto j = to_json(c);
  for (const char* key : {"family", "sigma", "L", "n", "h", "t", "seed", "n_rep", "window_margin",
                          "h_list", "eps_list", "a", "b", "w", "n_mc", "permutations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Config, RejectsUnknownKeysAndWrongTypes) {
  auto kind = [](const json& j) {
    try {
      config_from_json(j);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::io;
  };
  EXPECT_EQ(kind(json{{"sigmaa", 1.0}}), ErrorKind::config);
  EXPECT_EQ(kind(json{{"sigma", "one"}}), ErrorKind::config);
  EXPECT_EQ(kind(json{{"n", -5}}), ErrorKind::config);
  EXPECT_EQ(kind(json{{"family", "gamma"}}), ErrorKind::config);
  EXPECT_EQ(kind(json::array()), ErrorKind::config);
}

TEST(Config, HashDependsOnContent) {
  ExperimentConfig a, b;
  b.seed = 1;
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
}

TEST(Config, ConvertsToParams) {
  ExperimentConfig c;
  c.family = "compound_poisson";
  c.jump_law = "laplace";
  c.rate = 2.0;
  const auto p = to_params(c);
  ASSERT_TRUE(std::holds_alternative<CompoundPoisson>(p));
  EXPECT_EQ(std::get<CompoundPoisson>(p).jumps.kind, JumpLaw::Kind::laplace);
  c.family = "brownian";
  c.sigma = -1.0;
  EXPECT_THROW(to_params(c), Error);
}

// --- experiments --------------------------------------------------------------

TEST(Experiment, EffectiveConfigReloadsToTheSameStructure) {
  const auto dir = scratch("effective");
  ExperimentConfig c;
  c.sigma = 0.0;
  c.n = 101;
  run_experiment(c, Subcommand::simulate, dir);
  EXPECT_EQ(load_config(dir / "effective_config.json"), c);
}

TEST(Experiment, ZeroVarianceSimulationWritesZeros) {
  const auto dir = scratch("zero_sim");
  ExperimentConfig c;
  c.sigma = 0.0;
  c.n = 257;
  run_experiment(c, Subcommand::simulate, dir);
  const auto t = io::read_csv(dir / "path.csv");
  ASSERT_EQ(t.rows.size(), 257u);
  for (const auto& r : t.rows) ASSERT_EQ(io::parse_double(r[1]), 0.0);
  EXPECT_NE(t.meta.find("config_hash=" + config_hash(c)), std::string::npos);
  EXPECT_NE(t.meta.find("seed=0"), std::string::npos);
}

TEST(Experiment, PathCsvRoundTrips) {
  const auto dir = scratch("path_rt");
  ExperimentConfig c;
  c.family = "stable";
  c.alpha = 0.75;
  c.n = 513;
  c.seed = 3;
  run_experiment(c, Subcommand::simulate, dir);
  const auto back = io::read_path(dir / "path.csv", dir / "jumps.csv");
  const auto orig = sample_path(to_params(c), grid_of(c), 3);
  EXPECT_EQ(back.grid(), orig.grid());
  EXPECT_TRUE(std::equal(back.values().begin(), back.values().end(), orig.values().begin()));
  EXPECT_EQ(back.tracked_jumps(), orig.tracked_jumps());
}

TEST(Experiment, ShockCsvRoundTrips) {
  const auto dir = scratch("shock_rt");
  ExperimentConfig c;
  c.family = "stable";
  c.alpha = 1.5;
  c.n = 2049;
  for (c.seed = 0;; ++c.seed) {
    try {
      run_experiment(c, Subcommand::shocks, dir);
      break;
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::window_too_small);
    }
  }
  const auto report = extract_shocks(solve(sample_path(to_params(c), grid_of(c), c.seed), c.t));
  const auto shocks = io::parse_shocks(io::read_csv(dir / "shocks.csv"));
  ASSERT_EQ(shocks.size(), report.shocks.size());
  for (std::size_t i = 0; i < shocks.size(); ++i) {
    EXPECT_EQ(shocks[i].x, report.shocks[i].x);
    EXPECT_EQ(shocks[i].a_minus, report.shocks[i].a_minus);
    EXPECT_EQ(shocks[i].velocity, report.shocks[i].velocity);
    EXPECT_EQ(shocks[i].boundary_affected, report.shocks[i].boundary_affected);
  }
  const auto rare = io::parse_rarefactions(io::read_csv(dir / "rarefactions.csv"));
  ASSERT_EQ(rare.size(), report.rarefactions.size());
  for (std::size_t i = 0; i < rare.size(); ++i) EXPECT_EQ(rare[i].length, report.rarefactions[i].length);
}

TEST(Experiment, TablesRoundTrip) {
  const std::vector<RefinementRow> rows = {{0.125, 3.5, 2.0, 0.01, 0.25, 10, 1}};
  const auto back = io::parse_refinement(io::parse_csv(io::refinement_csv(rows, "m")));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].median_contacts, 3.5);
  EXPECT_EQ(back[0].failures, 1u);
  const std::vector<IntegralRow> ints = {{0.1, 1.25}, {0.01, 2.0 / 3.0}};
  const auto ib = io::parse_integral(io::parse_csv(io::integral_csv(ints, "m")));
  EXPECT_EQ(ib[1].estimate, 2.0 / 3.0);
  IndependenceReplicate rep;
  rep.replicate = 4;
  rep.seed = 99;
  rep.T = 0.3;
  rep.pre = {0.1, -0.2, 3};
  const std::vector<IndependenceReplicate> reps = {rep};
  const auto rb = io::parse_replicates(io::parse_csv(io::replicates_csv(reps, "m")));
  EXPECT_EQ(rb[0].seed, 99u);
  EXPECT_EQ(rb[0].pre.min_u, -0.2);
  EXPECT_EQ(rb[0].drop_reason, "");
}

TEST(Experiment, JumpUpFixtureHasOneInteriorShock) {
  const auto dir = scratch("jump_up");
  run_experiment(fixture_config("jump_up"), Subcommand::shocks, dir);
  const auto shocks = io::parse_shocks(io::read_csv(dir / "shocks.csv"));
  std::size_t interior = 0;
  for (const auto& s : shocks) {
    if (s.boundary_affected) continue;
    ++interior;
    EXPECT_NEAR(s.velocity, -0.5, 1e-6);
  }
  EXPECT_EQ(interior, 1u);
}

TEST(Experiment, RegenOnFixtureSkipsTheReplicateStudy) {
  const auto dir = scratch("regen_fixture");
  run_experiment(fixture_config("jump_up_half"), Subcommand::regen, dir);
  const auto j = json::parse(io::read_text_file(dir / "regen.json"));
  EXPECT_EQ(j["path"]["S"], 0.5);
  EXPECT_EQ(j["path"]["T_first"], 0.5);
  EXPECT_TRUE(j["independence"].is_null());
  EXPECT_TRUE(io::read_csv(dir / "replicates.csv").rows.empty());
}

TEST(Experiment, IdenticalConfigsGiveIdenticalBytes) {
  ExperimentConfig c;
  c.family = "stable";
  c.alpha = 1.5;
  c.L = 16.0;
  c.window_margin = 8.0;
  c.n = 2049;
  c.n_rep = 100;
  c.permutations = 99;
  c.h_list = {1.0 / 16, 1.0 / 32};
  c.n_mc = 1000;
  c.eps_list = {0.1, 0.01};
  c.seed = 5;
  for (Subcommand cmd : {Subcommand::simulate, Subcommand::regen, Subcommand::refine, Subcommand::integral}) {
    const auto a = scratch("det_a_" + to_string(cmd));
    const auto b = scratch("det_b_" + to_string(cmd));
    const auto files = run_experiment(c, cmd, a);
    run_experiment(c, cmd, b);
    for (const auto& f : files) {
      EXPECT_EQ(io::read_text_file(a / f), io::read_text_file(b / f)) << to_string(cmd) << "/" << f;
    }
  }
}

// --- binary -------------------------------------------------------------------

TEST(Binary, ShocksOnFixture) {
  const auto dir = scratch("bin_shocks");
  ASSERT_EQ(run_cli("shocks --L 4 --path " + kFixtures + "/jump_up_path.csv --jumps " + kFixtures +
                    "/jump_up_jumps.csv --out-dir " + dir.string()),
            0);
  const auto shocks = io::parse_shocks(io::read_csv(dir / "shocks.csv"));
  ASSERT_EQ(shocks.size(), 1u);
  EXPECT_NEAR(shocks[0].velocity, -0.5, 1e-6);
  EXPECT_FALSE(shocks[0].boundary_affected);
}

TEST(Binary, ConfigFileWithFlagOverrides) {
  const auto dir = scratch("bin_config");
  io::write_text_file(dir / "cfg.json", R"({"family": "brownian", "sigma": 0.0, "n": 101})");
  ASSERT_EQ(run_cli("simulate --config " + (dir / "cfg.json").string() + " --seed 7 --n 51 --out-dir " +
                    (dir / "out").string()),
            0);
  const auto c = load_config(dir / "out" / "effective_config.json");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.n, 51u);
  EXPECT_EQ(c.sigma, 0.0);
  EXPECT_EQ(io::read_csv(dir / "out" / "path.csv").rows.size(), 51u);
}

TEST(Binary, ErrorsMapToDistinctExitCodesWithJson) {
  const auto dir = scratch("bin_errors");
  io::write_text_file(dir / "bad.json", R"({"sigmaa": 1})");
  EXPECT_EQ(run_cli("simulate --config " + (dir / "bad.json").string() + " --out-dir " + (dir / "c").string()),
            2);
  auto j = json::parse(io::read_text_file(dir / "c" / "error.json"));
  EXPECT_EQ(j["error"], "config");
  EXPECT_EQ(j["exit_code"], 2);

  // psi = 10 y: every maximizer runs off the grid
  std::string text = "y,psi\n";
  const GridSpec g(-4.0, 4.0, 81);
  for (std::size_t i = 0; i < g.size(); ++i) {
    text += io::format_double(g.point(i)) + "," + io::format_double(10 * g.point(i)) + "\n";
  }
  io::write_text_file(dir / "drift.csv", text);
  EXPECT_EQ(run_cli("solve --L 4 --path " + (dir / "drift.csv").string() + " --out-dir " + (dir / "w").string()), 3);
  j = json::parse(io::read_text_file(dir / "w" / "error.json"));
  EXPECT_EQ(j["error"], "window_too_small");

  io::write_text_file(dir / "wide.json", R"({"family": "stable", "n": 513, "w": 7.0, "n_rep": 100, "permutations": 9})");
  EXPECT_EQ(run_cli("regen --config " + (dir / "wide.json").string() + " --out-dir " + (dir / "i").string()), 4);
  j = json::parse(io::read_text_file(dir / "i" / "error.json"));
  EXPECT_EQ(j["error"], "insufficient_data");

  EXPECT_NE(run_cli("frobnicate"), 0);
}

}  // namespace
