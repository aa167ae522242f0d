#include "chipfire/engine/puzzle.hpp"

#include <limits>
#include <random>

#include "chipfire/errors.hpp"

namespace chipfire::engine {

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

Puzzle generate_puzzle(std::uint64_t seed, std::size_t difficulty) {
  if (difficulty == 0) throw ValidationError("difficulty must be at least 1");
  const auto moves = r10::all_moves();
  std::mt19937_64 rng(seed);

  Puzzle p;
  p.seed = seed;
  for (std::size_t i = 0; i < difficulty; ++i) {
    p.config = r10::apply_firing(p.config, moves[draw_below(rng, moves.size())]);
    ++p.moves_applied;
  }
  return p;
}

}  // namespace chipfire::engine
