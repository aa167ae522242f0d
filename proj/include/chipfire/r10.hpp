#pragma once

// Chip-firing on the regular matroid R10, modelled as Gaussian-integer chips on
// the five nodes of a pentagon. Node k neighbours nodes k−1 and k+1 (mod 5).
// Firing equivalence classes form a group of order 162, isomorphic to
// (ℤ/3)⁴ ⊕ ℤ/2.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "chipfire/gauss.hpp"
#include "chipfire/matrix.hpp"
#include "chipfire/regular_matroid.hpp"

namespace chipfire::r10 {

inline constexpr std::size_t kNodes = 5;
inline constexpr std::size_t kDistinguishedNode = 0;
inline constexpr std::size_t kRepresentativeCount = 162;

inline bool adjacent(std::size_t a, std::size_t b) {
  return (a + 1) % kNodes == b || (b + 1) % kNodes == a;
}

/// Real and imaginary chip counts on each node.
struct PentagonConfig {
  std::array<GaussInt, kNodes> nodes{};

  static PentagonConfig zero() { return {}; }
  static PentagonConfig real(const std::array<long, kNodes>& chips);

  GaussInt& operator[](std::size_t k) { return nodes[k]; }
  const GaussInt& operator[](std::size_t k) const { return nodes[k]; }

  PentagonConfig& operator+=(const PentagonConfig& o);
  PentagonConfig& operator-=(const PentagonConfig& o);
  friend PentagonConfig operator+(PentagonConfig a, const PentagonConfig& b) { return a += b; }
  friend PentagonConfig operator-(PentagonConfig a, const PentagonConfig& b) { return a -= b; }
  friend bool operator==(const PentagonConfig&, const PentagonConfig&) = default;
};

std::ostream& operator<<(std::ostream& os, const PentagonConfig& c);

enum class MoveKind { A, B, NegA, NegB };

inline constexpr std::array<MoveKind, 4> kMoveKinds = {MoveKind::A, MoveKind::B, MoveKind::NegA,
                                                       MoveKind::NegB};

std::string_view move_kind_name(MoveKind kind);
std::optional<MoveKind> parse_move_kind(std::string_view name);
MoveKind inverse(MoveKind kind);

struct FiringMove {
  std::size_t node = 0;
  MoveKind kind = MoveKind::A;
  friend bool operator==(const FiringMove&, const FiringMove&) = default;
};

/// All 20 moves, node-major, kinds in A, B, −A, −B order.
std::vector<FiringMove> all_moves();

/// Change in configuration caused by one firing:
///   A   : +(1+i) at the node, −i at each neighbour   (column k of K̄)
///   B   : i · A
///   −A, −B : negations.
PentagonConfig move_delta(const FiringMove& move);

PentagonConfig apply_firing(const PentagonConfig& c, const FiringMove& move);
PentagonConfig apply_firings(PentagonConfig c, std::span<const FiringMove> moves);

/// Sum of real plus imaginary chips over all nodes.
Int total_chips(const PentagonConfig& c);

/// Representative with no imaginary chips, 0 or 3 chips on node 0 and 0–2 on
/// every other node. Ordered lexicographically.
struct CanonicalRep {
  std::array<Int, kNodes> nodes{};

  PentagonConfig to_config() const;
  friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
  friend std::strong_ordering operator<=>(const CanonicalRep& a, const CanonicalRep& b);
};

std::ostream& operator<<(std::ostream& os, const CanonicalRep& r);

/// Net firing counts: re(x_k) A-firings and im(x_k) B-firings at node k
/// (negative counts mean −A / −B). A certificate for (from, to) satisfies
/// K̄·x = to − from.
struct Certificate {
  std::array<GaussInt, kNodes> firings{};
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// One firing per unit of each certificate entry; applying them to `from`
/// reaches `to`.
std::vector<FiringMove> expand_certificate(const Certificate& x);

struct Constants {
  IntMatrix a_matrix;          // 5×10, [I₅ | D]
  IntMatrix k_matrix;          // 10×10, [[I, D], [D, −I]]
  GaussMatrix kbar;            // I₅ + D·i
  GaussMatrix kbar_inv_times6; // 6·K̄⁻¹
};

/// The literal matrices for R10.
Constants make_constants();

/// K̄ · (6K̄⁻¹) = 6·I₅.
bool inverse_identity_holds(const Constants& c);

/// Process-wide constants; verified on first use (throws InternalError on failure).
const Constants& constants();

/// R10 as a RegularMatroid (trusted, unchecked construction).
matroid::RegularMatroid matroid();

/// Intermediate states of canonicalize().
struct CanonicalTrace {
  /// After moving imaginary chips to real ones and dropping them (steps 1–3).
  std::array<Int, kNodes> real_only{};
  /// Parity of the total chip count after step 3.
  bool is_even = true;
  /// After subtracting node 0 from every node and reducing mod 3 (steps 6–7).
  std::array<Int, kNodes> reduced{};
  /// Whether 3 chips were added to node 0 to restore parity (step 8).
  bool added_three = false;
  CanonicalRep result;
};

CanonicalTrace canonicalize_traced(const PentagonConfig& c);
CanonicalRep canonicalize(const PentagonConfig& c);

/// x = (6K̄⁻¹)(to − from) / 6 when every entry is divisible by 6, else std::nullopt.
std::optional<Certificate> solve_firings(const PentagonConfig& from, const PentagonConfig& to);
std::optional<Certificate> solve_firings(const PentagonConfig& from, const PentagonConfig& to,
                                         const Constants& k);

/// {0, 3} × {0, 1, 2}⁴ in lexicographic order.
std::vector<CanonicalRep> all_representatives();

/// Three chips on node 0: the unique element of order 2.
CanonicalRep order_two_element();

/// An A and a B firing at every node: adds 2 real chips everywhere.
std::vector<FiringMove> recipe_add_two_everywhere();

/// Adds 6 real chips at `node` only: 3·A and −B at the node, A and B at each
/// neighbour, −A and B at each of the two other nodes. Throws ValidationError
/// for node ≥ 5.
std::vector<FiringMove> recipe_add_six(std::size_t node);

}  // namespace chipfire::r10
