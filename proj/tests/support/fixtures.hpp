#pragma once

#include <memory>
#include <string>

#include "burgers/csv.hpp"

namespace burgers::testing {

// Fixture paths on [-4, 4] with h = 0.01 (801 points, zero at index 400).
inline std::shared_ptr<const LevyPath> fixture(const std::string& name) {
  const std::string dir = BURGERS_FIXTURE_DIR;
  return std::make_shared<const LevyPath>(
      io::read_path(dir + "/" + name + "_path.csv", dir + "/" + name + "_jumps.csv"));
}

inline constexpr double kFixtureStep = 0.01;
inline constexpr std::size_t kFixtureZero = 400;

}  // namespace burgers::testing
