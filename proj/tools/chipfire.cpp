// chipfire: command-line front end of the R10 chip-firing engine.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "chipfire/engine/protocol.hpp"
#include "chipfire/engine/selftest.hpp"

namespace {

using chipfire::engine::json;

void print_config_line(const char* label, const json& config) {
  std::cout << label << ": (";
  for (std::size_t k = 0; k < config.size(); ++k) {
    const auto& z = config[k];
    if (z.is_array()) {
      const chipfire::GaussInt g(z[0].get<long>(), z[1].get<long>());
      std::cout << (k ? ", " : "") << g;
    } else {
      std::cout << (k ? ", " : "") << z.get<long>();
    }
  }
  std::cout << ")\n";
}

void print_human(const std::string& command, const json& result) {
  if (command == "canonicalize") {
    print_config_line("canonical", result["canonical"]);
    print_config_line("certificate", result["certificate"]);
    print_config_line("after imaginary elimination", result["trace"]["real_only"]);
  } else if (command == "equivalent") {
    std::cout << "equivalent: " << (result["equivalent"].get<bool>() ? "yes" : "no") << '\n';
    if (result.contains("certificate")) print_config_line("certificate", result["certificate"]);
  } else if (command == "group") {
    std::cout << "order: " << result["order"] << "\ninvariant factors:";
    for (const auto& f : result["invariant_factors"]) std::cout << ' ' << f;
    std::cout << '\n';
  } else if (command == "bases") {
    std::cout << "bases: " << result["count"] << '\n';
  } else if (command == "puzzle") {
    print_config_line("puzzle", result["config"]);
    std::cout << "seed: " << result["seed"] << " (" << result["rng"].get<std::string>()
              << "), moves applied: " << result["moves_applied"] << '\n';
  } else {
    std::cout << result.dump(2) << '\n';
  }
}

json matroid_params(const std::optional<std::string>& preset, const std::string& matrix) {
  if (preset) return {{"preset", *preset}};
  if (matrix.empty()) throw chipfire::ValidationError("give a matroid as JSON or use --preset r10");
  return {{"matroid", json::parse(matrix)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chip-firing engine for the regular matroid R10"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "Print machine-readable JSON");

  std::string config_a;
  std::string config_b;
  std::string matrix;
  std::optional<std::string> preset;
  std::uint64_t seed = 0;
  std::size_t difficulty = 10;
  bool list_bases = false;

  auto* canon = app.add_subcommand("canonicalize", "Canonical representative and certificate");
  canon->add_option("config", config_a, "Configuration as [[re,im],x5]")->required();

  auto* equiv = app.add_subcommand("equivalent", "Decide firing equivalence of two configurations");
  equiv->add_option("a", config_a, "First configuration")->required();
  equiv->add_option("b", config_b, "Second configuration")->required();

  auto* group = app.add_subcommand("group", "Sandpile group of a regular matroid");
  group->add_option("matroid", matrix, R"(Matroid as {"r":..,"n":..,"D":[[..]]})");
  group->add_option("--preset", preset, "Built-in matroid (r10)");

  auto* bases = app.add_subcommand("bases", "Count (or list) the bases of a regular matroid");
  bases->add_option("matroid", matrix, R"(Matroid as {"r":..,"n":..,"D":[[..]]})");
  bases->add_option("--preset", preset, "Built-in matroid (r10)");
  bases->add_flag("--list", list_bases, "List every basis");

  auto* puzzle = app.add_subcommand("puzzle", "Random configuration equivalent to zero");
  puzzle->add_option("--seed", seed, "PRNG seed");
  puzzle->add_option("--difficulty", difficulty, "Number of random firings (>= 1)");

  auto* serve = app.add_subcommand("serve", "JSON-lines request loop on stdin/stdout");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in R10 checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : chipfire::engine::kExitInput;
  }

  namespace engine = chipfire::engine;
  try {
    if (serve->parsed()) {
      engine::serve(std::cin, std::cout);
      return engine::kExitOk;
    }
    if (selftest->parsed()) {
      const auto results = engine::run_selftest();
      if (as_json) {
        std::cout << engine::encode_selftest(results).dump() << '\n';
      } else {
        engine::print_report(std::cout, results);
      }
      return engine::all_passed(results) ? engine::kExitOk : engine::kExitMath;
    }

    std::string name;
    json result;
    if (canon->parsed()) {
      name = "canonicalize";
      result = engine::cmd_canonicalize({{"config", json::parse(config_a)}});
    } else if (equiv->parsed()) {
      name = "equivalent";
      result = engine::cmd_equivalent({{"a", json::parse(config_a)}, {"b", json::parse(config_b)}});
    } else if (group->parsed()) {
      name = "group";
      result = engine::cmd_group(matroid_params(preset, matrix));
    } else if (bases->parsed()) {
      name = "bases";
      result = engine::cmd_bases(matroid_params(preset, matrix));
      if (!list_bases) result.erase("bases");
    } else if (puzzle->parsed()) {
      name = "puzzle";
      result = engine::cmd_puzzle({{"seed", seed}, {"difficulty", difficulty}});
    }

    if (as_json) {
      std::cout << result.dump() << '\n';
    } else {
      print_human(name, result);
      if (list_bases && result.contains("bases"))
        for (const auto& b : result["bases"]) std::cout << b.dump() << '\n';
    }
    return engine::kExitOk;
  } catch (...) {
    const auto err = engine::classify_current_exception();
    std::cerr << "error [" << err.code << "]: " << err.message << '\n';
    return engine::exit_code_for(err.code);
  }
}
