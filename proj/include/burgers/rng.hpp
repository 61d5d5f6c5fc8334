#pragma once

#include <cstdint>
#include <random>

namespace burgers {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for an independent stream (replicate, path side, node...). Depends
// only on the pair, so Monte Carlo results do not depend on execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace burgers
