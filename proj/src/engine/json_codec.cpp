#include "chipfire/engine/json_codec.hpp"

#include <string>

namespace chipfire::engine {

namespace {

const json& require_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    throw ValidationError(std::string(what) + " must be an array of " + std::to_string(size));
  return j;
}

std::array<GaussInt, r10::kNodes> decode_gauss5(const json& j, const char* what) {
  require_array(j, r10::kNodes, what);
  std::array<GaussInt, r10::kNodes> out;
  for (std::size_t k = 0; k < r10::kNodes; ++k) {
    require_array(j[k], 2, "each node entry ([re, im])");
    out[k] = GaussInt(decode_int(j[k][0], "chip count"), decode_int(j[k][1], "chip count"));
  }
  return out;
}

json encode_gauss5(const std::array<GaussInt, r10::kNodes>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(json::array({encode_int(z.re), encode_int(z.im)}));
  return out;
}

}  // namespace

json encode_int(const Int& x) {
  if (!fits_int64(x)) throw InternalError("integer " + x.get_str() + " exceeds the protocol range");
  return to_int64(x);
}

Int decode_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  std::int64_t v = 0;
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(kMaxInputMagnitude))
      throw ValidationError(std::string(what) + " exceeds ±10^9");
    v = static_cast<std::int64_t>(u);
  } else {
    v = j.get<std::int64_t>();
  }
  if (v > kMaxInputMagnitude || v < -kMaxInputMagnitude)
    throw ValidationError(std::string(what) + " exceeds ±10^9");
  return from_int64(v);
}

json encode_config(const r10::PentagonConfig& c) { return encode_gauss5(c.nodes); }

r10::PentagonConfig decode_config(const json& j) { return {decode_gauss5(j, "configuration")}; }

json encode_rep(const r10::CanonicalRep& r) {
  json out = json::array();
  for (const auto& x : r.nodes) out.push_back(encode_int(x));
  return out;
}

r10::CanonicalRep decode_rep(const json& j) {
  require_array(j, r10::kNodes, "canonical representative");
  r10::CanonicalRep r;
  for (std::size_t k = 0; k < r10::kNodes; ++k) r.nodes[k] = decode_int(j[k], "chip count");
  return r;
}

json encode_certificate(const r10::Certificate& x) { return encode_gauss5(x.firings); }

r10::Certificate decode_certificate(const json& j) { return {decode_gauss5(j, "certificate")}; }

json encode_move(const r10::FiringMove& m) {
  return {{"node", m.node}, {"kind", std::string(r10::move_kind_name(m.kind))}};
}

r10::FiringMove decode_move(const json& j) {
  if (!j.is_object() || !j.contains("node") || !j.contains("kind"))
    throw ValidationError("move must be an object with \"node\" and \"kind\"");
  const Int node = decode_int(j["node"], "node");
  if (node < 0 || node >= static_cast<long>(r10::kNodes))
    throw ValidationError("node must be in 0..4");
  if (!j["kind"].is_string()) throw ValidationError("kind must be a string");
  const auto kind = r10::parse_move_kind(j["kind"].get<std::string>());
  if (!kind) throw ValidationError("kind must be one of A, B, -A, -B");
  return {static_cast<std::size_t>(node.get_si()), *kind};
}

json encode_matroid(const matroid::RegularMatroid& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.reduced().rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.reduced().row(i)) row.push_back(encode_int(x));
    rows.push_back(std::move(row));
  }
  return {{"r", m.rank()}, {"n", m.size()}, {"D", std::move(rows)}};
}

matroid::RegularMatroid decode_matroid(const json& j, bool check_unimodular) {
  if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("D"))
    throw ValidationError("matroid must be an object with \"r\", \"n\" and \"D\"");
  const Int r = decode_int(j["r"], "r");
  const Int n = decode_int(j["n"], "n");
  if (r < 1 || n <= r) throw ValidationError("matroid needs n > r >= 1");
  if (n > 64) throw UnsupportedSizeError("matroids are limited to 64 elements");

  const std::size_t rows = r.get_ui();
  const std::size_t cols = static_cast<std::size_t>(n.get_ui()) - rows;
  const json& d = j["D"];
  if (!d.is_array() || d.size() != rows)
    throw ValidationError("D must have r = " + std::to_string(rows) + " rows");

  IntMatrix reduced(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!d[i].is_array() || d[i].size() != cols)
      throw ValidationError("each row of D must have n - r = " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) reduced(i, c) = decode_int(d[i][c], "matrix entry");
  }
  return check_unimodular ? matroid::RegularMatroid(std::move(reduced))
                          : matroid::RegularMatroid::unchecked(std::move(reduced));
}

json encode_group(const sandpile::SandpileGroup& g) {
  json factors = json::array();
  for (const auto& f : g.invariant_factors) factors.push_back(encode_int(f));
  return {{"invariant_factors", std::move(factors)}, {"order", encode_int(g.order)}};
}

}  // namespace chipfire::engine
