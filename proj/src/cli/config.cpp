#include "burgers/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "burgers/errors.hpp"

namespace burgers {

using nlohmann::json;

json to_json(const ExperimentConfig& c) {
  return json{{"family", c.family},
              {"sigma", c.sigma},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"scale", c.scale},
              {"rate", c.rate},
              {"jump_law", c.jump_law},
              {"jump_a", c.jump_a},
              {"jump_b", c.jump_b},
              {"L", c.L},
              {"n", c.n},
              {"h", c.h},
              {"t", c.t},
              {"seed", c.seed},
              {"window_margin", c.window_margin},
              {"n_rep", c.n_rep},
              {"h_list", c.h_list},
              {"stat_window", c.stat_window},
              {"eps_list", c.eps_list},
              {"a", c.a},
              {"b", c.b},
              {"n_mc", c.n_mc},
              {"w", c.w},
              {"k_max", c.k_max},
              {"permutations", c.permutations},
              {"path_file", c.path_file},
              {"jumps_file", c.jumps_file}};
}

namespace {

template <class T>
void read_field(const json& j, const char* key, T& out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  try {
    if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw std::invalid_argument("expected a number");
    } else if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_unsigned()) throw std::invalid_argument("expected a non-negative integer");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) throw std::invalid_argument("expected a string");
    } else {
      if (!it->is_array()) throw std::invalid_argument("expected an array");
      for (const auto& v : *it) {
        if (!v.is_number()) throw std::invalid_argument("expected an array of numbers");
      }
    }
    out = it->get<T>();
  } catch (const std::exception& e) {
    fail(ErrorKind::config, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::config, "config must be a JSON object");
  const json known = to_json(ExperimentConfig{});
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) fail(ErrorKind::config, "unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  read_field(j, "family", c.family);
  read_field(j, "sigma", c.sigma);
  read_field(j, "alpha", c.alpha);
  read_field(j, "beta", c.beta);
  read_field(j, "scale", c.scale);
  read_field(j, "rate", c.rate);
  read_field(j, "jump_law", c.jump_law);
  read_field(j, "jump_a", c.jump_a);
  read_field(j, "jump_b", c.jump_b);
  read_field(j, "L", c.L);
  read_field(j, "n", c.n);
  read_field(j, "h", c.h);
  read_field(j, "t", c.t);
  read_field(j, "seed", c.seed);
  c.window_margin = c.L / 2.0;
  read_field(j, "window_margin", c.window_margin);
  read_field(j, "n_rep", c.n_rep);
  read_field(j, "h_list", c.h_list);
  read_field(j, "stat_window", c.stat_window);
  read_field(j, "eps_list", c.eps_list);
  read_field(j, "a", c.a);
  read_field(j, "b", c.b);
  read_field(j, "n_mc", c.n_mc);
  read_field(j, "w", c.w);
  read_field(j, "k_max", c.k_max);
  read_field(j, "permutations", c.permutations);
  read_field(j, "path_file", c.path_file);
  read_field(j, "jumps_file", c.jumps_file);

  static const std::set<std::string> families = {"brownian", "stable", "cauchy", "compound_poisson"};
  if (!families.count(c.family)) fail(ErrorKind::config, "unknown family '" + c.family + "'");
  static const std::set<std::string> laws = {"constant", "normal", "laplace"};
  if (!laws.count(c.jump_law)) fail(ErrorKind::config, "unknown jump_law '" + c.jump_law + "'");
  if (c.stat_window.size() != 2) fail(ErrorKind::config, "stat_window must have two entries");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::io, "cannot read config " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::config, file.string() + ": " + e.what());
  }
  return config_from_json(j);
}

std::string config_hash(const ExperimentConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(cfg).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LevyParams to_params(const ExperimentConfig& c) {
  LevyParams p;
  if (c.family == "brownian") {
    p = Brownian{c.sigma};
  } else if (c.family == "stable") {
    p = Stable{c.alpha, c.beta, c.scale};
  } else if (c.family == "cauchy") {
    p = Cauchy{c.scale};
  } else if (c.family == "compound_poisson") {
    JumpLaw law;
    law.kind = c.jump_law == "constant" ? JumpLaw::Kind::constant
               : c.jump_law == "laplace" ? JumpLaw::Kind::laplace
                                         : JumpLaw::Kind::normal;
    law.a = c.jump_a;
    law.b = c.jump_b;
    p = CompoundPoisson{c.rate, law};
  } else {
    fail(ErrorKind::config, "unknown family '" + c.family + "'");
  }
  validate(p);
  return p;
}

GridSpec grid_of(const ExperimentConfig& c) {
  if (!(c.L > 0.0)) fail(ErrorKind::grid, "L must be > 0");
  if (c.h > 0.0) return GridSpec::with_step(c.L, c.h);
  return GridSpec::symmetric(c.L, c.n);
}

SolveOptions solve_options(const ExperimentConfig& c) {
  SolveOptions o;
  o.window_margin = c.window_margin;
  return o;
}

}  // namespace burgers
