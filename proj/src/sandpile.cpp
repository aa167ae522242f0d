#include "chipfire/sandpile.hpp"

#include "chipfire/exact_linalg.hpp"

namespace chipfire::sandpile {

SandpileGroup sandpile_group(const matroid::RegularMatroid& m) {
  const auto snf = linalg::smith_normal_form(matroid::combined_k(m));
  SandpileGroup group;
  group.order = 1;
  for (const Int& d : snf.diagonal()) {
    if (d == 0) throw InternalError("combined matrix of a regular matroid is singular");
    group.order *= d;
    if (d != 1) group.invariant_factors.push_back(d);
  }
  return group;
}

Equivalence firing_equivalent(const matroid::RegularMatroid& m, const ChipConfig& c1,
                              const ChipConfig& c2) {
  if (c1.size() != m.size() || c2.size() != m.size())
    throw DimensionError("chip configuration length must equal the ground set size");

  ChipConfig diff(c1.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = c1[i] - c2[i];

  const IntMatrix k = matroid::combined_k(m);
  auto y = linalg::solve_integer(k, diff);
  if (!y) return {};
  if (k * *y != diff) throw InternalError("firing witness failed verification");
  return {true, std::move(y)};
}

matroid::RegularMatroid example_matroid() {
  return matroid::RegularMatroid(IntMatrix{{-1}, {-1}});
}

ChipConfig reduce_example_matroid(const ChipConfig& c) {
  if (c.size() != 3) throw DimensionError("the example matroid has three elements");
  ChipConfig out = c;

  const Int fires = floor_div(Int(c[0] + c[1] + c[2]), Int(3));
  for (auto& x : out) x -= fires;

  // add −b·(0, 1, −1)
  const Int b = out[1];
  out[1] -= b;
  out[2] += b;

  // add c·(1, 0, −1)
  const Int rest = out[2];
  out[0] += rest;
  out[2] -= rest;
  return out;
}

}  // namespace chipfire::sandpile
