#include "chipfire/engine/protocol.hpp"

#include <functional>
#include <map>

#include "chipfire/engine/puzzle.hpp"
#include "chipfire/engine/selftest.hpp"
#include "chipfire/errors.hpp"

namespace chipfire::engine {

namespace {

inline constexpr std::size_t kMaxDifficulty = 1'000'000;

const json& field(const json& params, const char* name) {
  if (!params.is_object() || !params.contains(name))
    throw ValidationError(std::string("missing parameter \"") + name + "\"");
  return params.at(name);
}

matroid::RegularMatroid matroid_from_params(const json& params) {
  if (params.is_object() && params.contains("preset")) {
    const json& preset = params.at("preset");
    if (!preset.is_string() || preset.get<std::string>() != "r10")
      throw ValidationError("unknown preset; the only preset is \"r10\"");
    return r10::matroid();
  }
  return decode_matroid(field(params, "matroid"));
}

json trace_json(const r10::CanonicalTrace& t) {
  json real_only = json::array();
  for (const auto& x : t.real_only) real_only.push_back(encode_int(x));
  return {{"real_only", std::move(real_only)}, {"is_even", t.is_even}, {"added_three", t.added_three}};
}

using Handler = std::function<json(const json&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"canonicalize", cmd_canonicalize}, {"equivalent", cmd_equivalent},
      {"group", cmd_group},               {"bases", cmd_bases},
      {"puzzle", cmd_puzzle},             {"moves", cmd_moves},
      {"selftest", cmd_selftest},
  };
  return table;
}

json error_response(const json& id, const ErrorInfo& e) {
  return {{"id", id}, {"ok", false}, {"error", {{"code", e.code}, {"message", e.message}}}};
}

}  // namespace

ErrorInfo classify_current_exception() {
  try {
    throw;
  } catch (const json::parse_error& e) {
    return {std::string(codes::kParse), "malformed JSON at byte " + std::to_string(e.byte)};
  } catch (const json::exception& e) {
    return {std::string(codes::kValidation), e.what()};
  } catch (const ValidationError& e) {
    return {std::string(codes::kValidation), e.what()};
  } catch (const DimensionError& e) {
    return {std::string(codes::kValidation), e.what()};
  } catch (const NotTotallyUnimodularError& e) {
    return {std::string(codes::kNotUnimodular), e.what()};
  } catch (const UnsupportedSizeError& e) {
    return {std::string(codes::kUnsupportedSize), e.what()};
  } catch (const SingularMatrixError& e) {
    return {std::string(codes::kSingular), e.what()};
  } catch (const std::exception& e) {
    return {std::string(codes::kInternal), e.what()};
  } catch (...) {
    return {std::string(codes::kInternal), "unknown failure"};
  }
}

int exit_code_for(std::string_view code) {
  if (code == codes::kParse || code == codes::kValidation || code == codes::kUnknownOp ||
      code == codes::kUnsupportedSize)
    return kExitInput;
  if (code == codes::kNotUnimodular || code == codes::kSingular) return kExitMath;
  return kExitInternal;
}

json cmd_canonicalize(const json& params) {
  const auto config = decode_config(field(params, "config"));
  const auto trace = r10::canonicalize_traced(config);
  const auto cert = r10::solve_firings(config, trace.result.to_config());
  if (!cert) throw InternalError("canonical form is not firing equivalent to its input");
  return {{"canonical", encode_rep(trace.result)},
          {"certificate", encode_certificate(*cert)},
          {"trace", trace_json(trace)}};
}

json cmd_equivalent(const json& params) {
  const auto a = decode_config(field(params, "a"));
  const auto b = decode_config(field(params, "b"));
  const auto cert = r10::solve_firings(a, b);
  json out{{"equivalent", cert.has_value()}};
  if (cert) out["certificate"] = encode_certificate(*cert);
  return out;
}

json cmd_group(const json& params) {
  return encode_group(sandpile::sandpile_group(matroid_from_params(params)));
}

json cmd_bases(const json& params) {
  const auto bases = matroid::enumerate_bases(matroid_from_params(params));
  json list = json::array();
  for (const auto& b : bases) list.push_back(b.columns);
  return {{"count", bases.size()}, {"bases", std::move(list)}};
}

json cmd_puzzle(const json& params) {
  const json& seed = field(params, "seed");
  const json& difficulty = field(params, "difficulty");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
    throw ValidationError("seed must be a non-negative integer");
  if (!difficulty.is_number_integer()) throw ValidationError("difficulty must be an integer");
  const auto d = difficulty.get<std::int64_t>();
  if (d < 1 || static_cast<std::uint64_t>(d) > kMaxDifficulty)
    throw ValidationError("difficulty must be in 1..1000000");

  const auto puzzle = generate_puzzle(seed.get<std::uint64_t>(), static_cast<std::size_t>(d));
  return {{"config", encode_config(puzzle.config)},
          {"seed", puzzle.seed},
          {"difficulty", d},
          {"moves_applied", puzzle.moves_applied},
          {"rng", std::string(kPuzzleRng)}};
}

json cmd_moves(const json&) {
  json moves = json::array();
  for (const auto& m : r10::all_moves()) {
    json entry = encode_move(m);
    entry["delta"] = encode_config(r10::move_delta(m));
    moves.push_back(std::move(entry));
  }
  return {{"moves", std::move(moves)}};
}

json encode_selftest(const std::vector<CheckResult>& results) {
  json checks = json::array();
  for (const auto& r : results)
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return {{"passed", all_passed(results)}, {"checks", std::move(checks)}};
}

json cmd_selftest(const json&) { return encode_selftest(run_selftest()); }

json handle_request(const json& request) {
  json id = nullptr;
  try {
    if (!request.is_object()) throw ValidationError("request must be a JSON object");
    if (request.contains("id")) id = request.at("id");
    if (!request.contains("op") || !request.at("op").is_string())
      throw ValidationError("request needs a string \"op\"");
    const auto op = request.at("op").get<std::string>();
    const json params = request.contains("params") ? request.at("params") : json::object();
    if (!params.is_object()) throw ValidationError("\"params\" must be an object");

    const auto& table = handlers();
    const auto it = table.find(op);
    if (it == table.end())
      return error_response(id, {std::string(codes::kUnknownOp), "unknown op \"" + op + "\""});
    return {{"id", id}, {"ok", true}, {"result", it->second(params)}};
  } catch (...) {
    return error_response(id, classify_current_exception());
  }
}

std::string handle_line(std::string_view line) {
  json response;
  try {
    response = handle_request(json::parse(line));
  } catch (...) {
    response = error_response(nullptr, classify_current_exception());
  }
  return response.dump();
}

void serve(std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << handle_line(line) << '\n' << std::flush;
  }
}

}  // namespace chipfire::engine
