#pragma once

// Request/response protocol of the engine. One JSON object per line:
//
//   request : {"op": <name>, "params": {...}, "id": <any JSON value>}
//   response: {"id": <same>, "ok": true,  "result": {...}}
//           | {"id": <same>, "ok": false, "error": {"code": <string>, "message": <string>}}
//
// Ops and their params:
//   canonicalize {config}                  -> {canonical, certificate, trace}
//   equivalent   {a, b}                    -> {equivalent, certificate?}
//   group        {matroid} | {preset}      -> {invariant_factors, order}
//   bases        {matroid} | {preset}      -> {count, bases}
//   puzzle       {seed, difficulty}        -> {config, seed, difficulty, moves_applied, rng}
//   moves        {}                        -> {moves: [{node, kind, delta}, ×20]}
//   selftest     {}                        -> {passed, checks}
//
// Certificates always map the first (input) configuration to the second
// (canonical) one: K̄·certificate = second − first.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "chipfire/engine/json_codec.hpp"
#include "chipfire/engine/selftest.hpp"

namespace chipfire::engine {

/// Protocol error codes and the CLI exit status each one maps to.
namespace codes {
inline constexpr std::string_view kParse = "parse";
inline constexpr std::string_view kValidation = "validation";
inline constexpr std::string_view kUnknownOp = "unknown_op";
inline constexpr std::string_view kNotUnimodular = "not_totally_unimodular";
inline constexpr std::string_view kUnsupportedSize = "unsupported_size";
inline constexpr std::string_view kSingular = "singular";
inline constexpr std::string_view kInternal = "internal";
}  // namespace codes

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitMath = 2,
  kExitInternal = 3,
};

struct ErrorInfo {
  std::string code;
  std::string message;
};

/// Classifies the exception currently being handled. Call only inside a catch block.
ErrorInfo classify_current_exception();

int exit_code_for(std::string_view error_code);

json cmd_canonicalize(const json& params);
json cmd_equivalent(const json& params);
json cmd_group(const json& params);
json cmd_bases(const json& params);
json cmd_puzzle(const json& params);
json cmd_moves(const json& params);
json cmd_selftest(const json& params);

json encode_selftest(const std::vector<CheckResult>& results);

/// Dispatches one decoded request; never throws.
json handle_request(const json& request);

/// Parses and dispatches one request line; never throws.
std::string handle_line(std::string_view line);

/// Reads requests line by line until EOF, writing one response line per
/// non-blank request line, in order.
void serve(std::istream& in, std::ostream& out);

}  // namespace chipfire::engine
