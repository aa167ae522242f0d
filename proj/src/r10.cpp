#include "chipfire/r10.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "chipfire/errors.hpp"

namespace chipfire::r10 {

PentagonConfig PentagonConfig::real(const std::array<long, kNodes>& chips) {
  PentagonConfig c;
  for (std::size_t k = 0; k < kNodes; ++k) c[k] = GaussInt(chips[k]);
  return c;
}

PentagonConfig& PentagonConfig::operator+=(const PentagonConfig& o) {
  for (std::size_t k = 0; k < kNodes; ++k) nodes[k] += o.nodes[k];
  return *this;
}

PentagonConfig& PentagonConfig::operator-=(const PentagonConfig& o) {
  for (std::size_t k = 0; k < kNodes; ++k) nodes[k] -= o.nodes[k];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PentagonConfig& c) {
  os << '(';
  for (std::size_t k = 0; k < kNodes; ++k) os << (k ? ", " : "") << c[k];
  return os << ')';
}

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::A: return "A";
    case MoveKind::B: return "B";
    case MoveKind::NegA: return "-A";
    case MoveKind::NegB: return "-B";
  }
  return "?";
}

std::optional<MoveKind> parse_move_kind(std::string_view name) {
  for (MoveKind k : kMoveKinds)
    if (move_kind_name(k) == name) return k;
  if (name == "NegA") return MoveKind::NegA;
  if (name == "NegB") return MoveKind::NegB;
  return std::nullopt;
}

MoveKind inverse(MoveKind kind) {
  switch (kind) {
    case MoveKind::A: return MoveKind::NegA;
    case MoveKind::B: return MoveKind::NegB;
    case MoveKind::NegA: return MoveKind::A;
    case MoveKind::NegB: return MoveKind::B;
  }
  return kind;
}

std::vector<FiringMove> all_moves() {
  std::vector<FiringMove> moves;
  moves.reserve(kNodes * kMoveKinds.size());
  for (std::size_t k = 0; k < kNodes; ++k)
    for (MoveKind kind : kMoveKinds) moves.push_back({k, kind});
  return moves;
}

PentagonConfig move_delta(const FiringMove& move) {
  if (move.node >= kNodes) throw ValidationError("node index out of range");
  PentagonConfig d;
  d[move.node] = GaussInt(1, 1);
  d[(move.node + 1) % kNodes] = GaussInt(0, -1);
  d[(move.node + kNodes - 1) % kNodes] = GaussInt(0, -1);

  const bool rotate = move.kind == MoveKind::B || move.kind == MoveKind::NegB;
  const bool negate = move.kind == MoveKind::NegA || move.kind == MoveKind::NegB;
  for (auto& z : d.nodes) {
    if (rotate) z = z.times_i();
    if (negate) z = -z;
  }
  return d;
}

PentagonConfig apply_firing(const PentagonConfig& c, const FiringMove& move) {
  return c + move_delta(move);
}

PentagonConfig apply_firings(PentagonConfig c, std::span<const FiringMove> moves) {
  for (const auto& m : moves) c += move_delta(m);
  return c;
}

Int total_chips(const PentagonConfig& c) {
  Int total = 0;
  for (const auto& z : c.nodes) total += z.re + z.im;
  return total;
}

PentagonConfig CanonicalRep::to_config() const {
  PentagonConfig c;
  for (std::size_t k = 0; k < kNodes; ++k) c[k] = GaussInt(nodes[k]);
  return c;
}

std::strong_ordering operator<=>(const CanonicalRep& a, const CanonicalRep& b) {
  for (std::size_t k = 0; k < kNodes; ++k) {
    const int c = cmp(a.nodes[k], b.nodes[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const CanonicalRep& r) {
  os << '(';
  for (std::size_t k = 0; k < kNodes; ++k) os << (k ? ", " : "") << r.nodes[k];
  return os << ')';
}

std::vector<FiringMove> expand_certificate(const Certificate& x) {
  std::vector<FiringMove> moves;
  for (std::size_t k = 0; k < kNodes; ++k) {
    const GaussInt& z = x.firings[k];
    const MoveKind a = z.re >= 0 ? MoveKind::A : MoveKind::NegA;
    const MoveKind b = z.im >= 0 ? MoveKind::B : MoveKind::NegB;
    for (Int n = abs(z.re); n > 0; --n) moves.push_back({k, a});
    for (Int n = abs(z.im); n > 0; --n) moves.push_back({k, b});
  }
  return moves;
}

Constants make_constants() {
  Constants c;
  c.a_matrix = IntMatrix{
      {1, 0, 0, 0, 0, 1, -1, 0, 0, -1},
      {0, 1, 0, 0, 0, -1, 1, -1, 0, 0},
      {0, 0, 1, 0, 0, 0, -1, 1, -1, 0},
      {0, 0, 0, 1, 0, 0, 0, -1, 1, -1},
      {0, 0, 0, 0, 1, -1, 0, 0, -1, 1},
  };
  c.k_matrix = IntMatrix{
      {1, 0, 0, 0, 0, 1, -1, 0, 0, -1},
      {0, 1, 0, 0, 0, -1, 1, -1, 0, 0},
      {0, 0, 1, 0, 0, 0, -1, 1, -1, 0},
      {0, 0, 0, 1, 0, 0, 0, -1, 1, -1},
      {0, 0, 0, 0, 1, -1, 0, 0, -1, 1},
      {1, -1, 0, 0, -1, -1, 0, 0, 0, 0},
      {-1, 1, -1, 0, 0, 0, -1, 0, 0, 0},
      {0, -1, 1, -1, 0, 0, 0, -1, 0, 0},
      {0, 0, -1, 1, -1, 0, 0, 0, -1, 0},
      {-1, 0, 0, -1, 1, 0, 0, 0, 0, -1},
  };
  const GaussInt d{1, 1};   // 1+i
  const GaussInt n{0, -1};  // −i
  c.kbar = GaussMatrix{
      {d, n, 0, 0, n},
      {n, d, n, 0, 0},
      {0, n, d, n, 0},
      {0, 0, n, d, n},
      {n, 0, 0, n, d},
  };
  const GaussInt p{3, -1};   // 3−i
  const GaussInt q{1, 1};    // 1+i
  const GaussInt s{-1, 1};   // −1+i
  c.kbar_inv_times6 = GaussMatrix{
      {p, q, s, s, q},
      {q, p, q, s, s},
      {s, q, p, q, s},
      {s, s, q, p, q},
      {q, s, s, q, p},
  };
  return c;
}

bool inverse_identity_holds(const Constants& c) {
  if (c.kbar.rows() != kNodes || !c.kbar.is_square()) return false;
  if (c.kbar_inv_times6.rows() != kNodes || !c.kbar_inv_times6.is_square()) return false;
  return c.kbar * c.kbar_inv_times6 == GaussInt(6) * GaussMatrix::identity(kNodes);
}

const Constants& constants() {
  static const Constants k = [] {
    Constants c = make_constants();
    if (!inverse_identity_holds(c)) throw InternalError("R10 constants fail K̄·(6K̄⁻¹) = 6I");
    return c;
  }();
  return k;
}

matroid::RegularMatroid matroid() {
  IntMatrix reduced(kNodes, kNodes);
  for (std::size_t i = 0; i < kNodes; ++i)
    for (std::size_t j = 0; j < kNodes; ++j) reduced(i, j) = constants().a_matrix(i, kNodes + j);
  return matroid::RegularMatroid::unchecked(std::move(reduced));
}

CanonicalTrace canonicalize_traced(const PentagonConfig& c) {
  CanonicalTrace t;

  // Steps 1–3: trade imaginary chips for real ones with (−)B firings, node by node.
  for (std::size_t k = 0; k < kNodes; ++k) {
    const Int& here = c[k].im;
    const Int& next = c[(k + 1) % kNodes].im;
    const Int& prev = c[(k + kNodes - 1) % kNodes].im;
    t.real_only[k] = c[k].re + here - next - prev;
  }

  // Steps 4–5.
  Int total = 0;
  for (const Int& x : t.real_only) total += x;
  t.is_even = is_even(total);

  // Steps 6–7.
  const Int anchor = t.real_only[kDistinguishedNode];
  for (std::size_t k = 0; k < kNodes; ++k)
    t.reduced[k] = mod_euclid(Int(t.real_only[k] - anchor), Int(3));

  // Step 8.
  Int reduced_total = 0;
  for (const Int& x : t.reduced) reduced_total += x;
  t.result.nodes = t.reduced;
  t.added_three = is_even(reduced_total) != t.is_even;
  if (t.added_three) t.result.nodes[kDistinguishedNode] += 3;
  return t;
}

CanonicalRep canonicalize(const PentagonConfig& c) { return canonicalize_traced(c).result; }

std::optional<Certificate> solve_firings(const PentagonConfig& from, const PentagonConfig& to,
                                         const Constants& k) {
  const PentagonConfig diff = to - from;
  const GaussVec scaled =
      k.kbar_inv_times6 * GaussVec(diff.nodes.begin(), diff.nodes.end());

  const Int six = 6;
  Certificate x;
  for (std::size_t i = 0; i < kNodes; ++i) {
    if (!divides(six, scaled[i].re) || !divides(six, scaled[i].im)) return std::nullopt;
    x.firings[i] = GaussInt(Int(scaled[i].re / six), Int(scaled[i].im / six));
  }

  const GaussVec check = k.kbar * GaussVec(x.firings.begin(), x.firings.end());
  if (!std::equal(check.begin(), check.end(), diff.nodes.begin()))
    throw InternalError("firing certificate failed verification");
  return x;
}

std::optional<Certificate> solve_firings(const PentagonConfig& from, const PentagonConfig& to) {
  return solve_firings(from, to, constants());
}

std::vector<CanonicalRep> all_representatives() {
  std::vector<CanonicalRep> reps;
  reps.reserve(kRepresentativeCount);
  for (long first : {0L, 3L})
    for (long a = 0; a < 3; ++a)
      for (long b = 0; b < 3; ++b)
        for (long c = 0; c < 3; ++c)
          for (long d = 0; d < 3; ++d)
            reps.push_back(CanonicalRep{{Int(first), Int(a), Int(b), Int(c), Int(d)}});
  return reps;
}

CanonicalRep order_two_element() { return CanonicalRep{{Int(3), Int(0), Int(0), Int(0), Int(0)}}; }

std::vector<FiringMove> recipe_add_two_everywhere() {
  std::vector<FiringMove> moves;
  for (std::size_t k = 0; k < kNodes; ++k) {
    moves.push_back({k, MoveKind::A});
    moves.push_back({k, MoveKind::B});
  }
  return moves;
}

std::vector<FiringMove> recipe_add_six(std::size_t node) {
  if (node >= kNodes) throw ValidationError("node index out of range: " + std::to_string(node));
  std::vector<FiringMove> moves(3, FiringMove{node, MoveKind::A});
  moves.push_back({node, MoveKind::NegB});
  for (std::size_t k = 0; k < kNodes; ++k) {
    if (k == node) continue;
    if (adjacent(k, node)) {
      moves.push_back({k, MoveKind::A});
      moves.push_back({k, MoveKind::B});
    } else {
      moves.push_back({k, MoveKind::NegA});
      moves.push_back({k, MoveKind::B});
    }
  }
  return moves;
}

}  // namespace chipfire::r10
