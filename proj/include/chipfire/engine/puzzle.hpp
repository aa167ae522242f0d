#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "chipfire/r10.hpp"

namespace chipfire::engine {

inline constexpr std::string_view kPuzzleRng = "mt19937_64";

/// A configuration reached from zero by random firings, so it is firing
/// equivalent to the all-zeros configuration.
struct Puzzle {
  r10::PentagonConfig config;
  std::uint64_t seed = 0;
  std::size_t moves_applied = 0;
};

/// Applies `difficulty` firings to the zero configuration, each drawn uniformly
/// from the 20 moves with std::mt19937_64 seeded by `seed` (rejection sampling
/// on the raw 64-bit output, so results do not depend on the standard library).
/// Throws ValidationError when difficulty is 0.
Puzzle generate_puzzle(std::uint64_t seed, std::size_t difficulty);

}  // namespace chipfire::engine
