#pragma once

// JSON encodings shared by the CLI and the serve protocol.
//
//   PentagonConfig / Certificate : [[re, im], ×5]
//   CanonicalRep                 : [n, ×5]
//   matroid                      : {"r": int, "n": int, "D": [[int, …], …]}   (D is r × (n−r))
//   FiringMove                   : {"node": 0..4, "kind": "A" | "B" | "-A" | "-B"}
//
// Every integer crossing the boundary must be a JSON integer with |x| ≤ 10⁹.

#include <cstdint>

#include "json.hpp"

#include "chipfire/r10.hpp"
#include "chipfire/regular_matroid.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire::engine {

using nlohmann::json;

inline constexpr std::int64_t kMaxInputMagnitude = 1'000'000'000;

/// Encodes an exact integer; throws InternalError if it does not fit in int64.
json encode_int(const Int& x);
/// Accepts only JSON integers within ±kMaxInputMagnitude.
Int decode_int(const json& j, const char* what);

json encode_config(const r10::PentagonConfig& c);
r10::PentagonConfig decode_config(const json& j);

json encode_rep(const r10::CanonicalRep& r);
r10::CanonicalRep decode_rep(const json& j);

json encode_certificate(const r10::Certificate& x);
r10::Certificate decode_certificate(const json& j);

json encode_move(const r10::FiringMove& m);
r10::FiringMove decode_move(const json& j);

json encode_matroid(const matroid::RegularMatroid& m);
/// Verifies total unimodularity unless `check_unimodular` is false.
matroid::RegularMatroid decode_matroid(const json& j, bool check_unimodular = true);

json encode_group(const sandpile::SandpileGroup& g);

}  // namespace chipfire::engine
