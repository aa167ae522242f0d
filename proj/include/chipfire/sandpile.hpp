#pragma once

#include <optional>
#include <vector>

#include "chipfire/matrix.hpp"
#include "chipfire/regular_matroid.hpp"

namespace chipfire::sandpile {

/// One integer chip count per ground-set element.
using ChipConfig = IntVector;

/// Finite abelian group ℤ/a₁ ⊕ … ⊕ ℤ/a_k with aᵢ ≥ 2 and aᵢ | aᵢ₊₁.
struct SandpileGroup {
  std::vector<Int> invariant_factors;
  Int order;
};

/// Reads the group off the Smith normal form of combined_k(m).
SandpileGroup sandpile_group(const matroid::RegularMatroid& m);

struct Equivalence {
  bool equivalent = false;
  /// Set iff equivalent; satisfies K·witness = c1 − c2.
  std::optional<IntVector> witness;

  explicit operator bool() const { return equivalent; }
};

/// c1 and c2 differ by an integer combination of firing moves (rows of K).
Equivalence firing_equivalent(const matroid::RegularMatroid& m, const ChipConfig& c1,
                              const ChipConfig& c2);

/// The three-element matroid with A = [[1, 0, −1], [0, 1, −1]].
matroid::RegularMatroid example_matroid();

/// Reduces (a, b, c) on example_matroid() to its representative (t, 0, 0), t ∈ {0, 1, 2}:
/// fire (−1, −1, −1) ⌊(a+b+c)/3⌋ times, clear the second entry with (0, 1, −1),
/// then clear the third with (1, 0, −1).
ChipConfig reduce_example_matroid(const ChipConfig& c);

}  // namespace chipfire::sandpile
