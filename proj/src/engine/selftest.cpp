#include "chipfire/engine/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "chipfire/exact_linalg.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire::engine {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

CheckResult run_check(std::string name, const Check& check) {
  CheckResult result{std::move(name), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = check();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string check_group(const r10::Constants& c) {
  IntVector nontrivial;
  Int order = 1;
  for (const Int& d : linalg::smith_normal_form(c.k_matrix).diagonal()) {
    order *= d;
    if (d != 1) nontrivial.push_back(d);
  }
  const IntVector expected{3, 3, 3, 6};
  if (nontrivial != expected || order != 162) return "invariant factors differ from 3,3,3,6";
  const auto group = sandpile::sandpile_group(r10::matroid());
  if (group.invariant_factors != expected || group.order != 162)
    return "sandpile_group(R10) differs from the direct SNF";
  return {};
}

std::string check_bases(const r10::Constants& c) {
  const auto bases = matroid::enumerate_bases(r10::matroid());
  const Int det = linalg::det(c.k_matrix);
  if (bases.size() != 162) return "found " + std::to_string(bases.size()) + " bases";
  if (abs(det) != 162) return "|det K| = " + show(abs(det));
  return {};
}

std::string check_inverse(const r10::Constants& c) {
  return r10::inverse_identity_holds(c) ? std::string{} : "K̄ · (6K̄⁻¹) != 6I";
}

std::string check_worked_example(const r10::Constants& c) {
  const r10::PentagonConfig input{{GaussInt(3, 1), GaussInt(4, -6), GaussInt(7, 1),
                                   GaussInt(-8, -8), GaussInt(3, 0)}};
  const auto trace = r10::canonicalize_traced(input);
  const std::array<Int, 5> real_only{10, -4, 22, -17, 10};
  if (trace.real_only != real_only) return "intermediate after imaginary elimination differs";
  const r10::CanonicalRep expected{{0, 1, 0, 0, 0}};
  if (trace.result != expected) return "canonical form " + show(trace.result);
  const auto cert = r10::solve_firings(input, trace.result.to_config(), c);
  const r10::Certificate expected_cert{
      {GaussInt(-5, -1), GaussInt(-4, 1), GaussInt(-4, 3), GaussInt(4, -1), GaussInt(-1, 0)}};
  if (!cert) return "no certificate";
  if (*cert != expected_cert) return "certificate differs";
  return {};
}

std::string check_representatives(const r10::Constants& c) {
  const auto reps = r10::all_representatives();
  if (reps.size() != r10::kRepresentativeCount) return "wrong representative count";
  for (const auto& r : reps)
    if (r10::canonicalize(r.to_config()) != r) return show(r) + " is not canonical";
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto from = reps[i].to_config();
    for (std::size_t j = i + 1; j < reps.size(); ++j, ++pairs) {
      if (r10::solve_firings(from, reps[j].to_config(), c))
        return show(reps[i]) + " ~ " + show(reps[j]);
    }
  }
  if (pairs != 13041) return "checked " + std::to_string(pairs) + " pairs";
  return {};
}

std::string check_example_matroid() {
  const auto m = sandpile::example_matroid();
  const auto group = sandpile::sandpile_group(m);
  if (group.invariant_factors != IntVector{3} || group.order != 3) return "group is not Z/3";
  const std::vector<sandpile::ChipConfig> reps{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (sandpile::firing_equivalent(m, reps[i], reps[j])) return "representatives collide";
  return {};
}

std::string check_order_two() {
  using r10::PentagonConfig;
  const r10::CanonicalRep h = r10::order_two_element();
  if (r10::canonicalize(PentagonConfig::real({1, 1, 1, 1, 1})) != h) return "all-ones is not H";
  if (r10::canonicalize(PentagonConfig::real({6, 0, 0, 0, 0})) != r10::CanonicalRep{})
    return "2H is not zero";
  const auto two = r10::recipe_add_two_everywhere();
  if (r10::apply_firings(PentagonConfig::zero(), two) != PentagonConfig::real({2, 2, 2, 2, 2}))
    return "add-two recipe";
  for (std::size_t k = 0; k < r10::kNodes; ++k) {
    std::array<long, 5> target{};
    target[k] = 6;
    if (r10::apply_firings(PentagonConfig::zero(), r10::recipe_add_six(k)) !=
        PentagonConfig::real(target))
      return "add-six recipe at node " + std::to_string(k);
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_selftest(const r10::Constants& constants) {
  std::vector<CheckResult> results;
  results.push_back(run_check("sandpile group of R10: invariant factors 3,3,3,6 (order 162)",
                              [&] { return check_group(constants); }));
  results.push_back(run_check("R10 has 162 bases = |det K|", [&] { return check_bases(constants); }));
  results.push_back(run_check("K̄ times stored 6K̄⁻¹ is 6I", [&] { return check_inverse(constants); }));
  results.push_back(run_check("worked example (3+i, 4-6i, 7+i, -8-8i, 3) -> (0,1,0,0,0)",
                              [&] { return check_worked_example(constants); }));
  results.push_back(run_check("162 representatives pairwise inequivalent",
                              [&] { return check_representatives(constants); }));
  results.push_back(run_check("three-element matroid has group Z/3", check_example_matroid));
  results.push_back(run_check("order-two element and firing recipes", check_order_two));
  return results;
}

std::vector<CheckResult> run_selftest() { return run_selftest(r10::constants()); }

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (";
    if (!r.detail.empty()) os << r.detail << ", ";
    os << std::fixed << std::setprecision(1) << r.millis << " ms)\n";
  }
}

}  // namespace chipfire::engine
