#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chipfire/matrix.hpp"

namespace chipfire::matroid {

/// Largest row or column count accepted by the exhaustive minor check. The check
/// visits C(rows + cols, rows) − 1 square submatrices.
inline constexpr std::size_t kMaxUnimodularCheckDim = 12;

/// Largest ground set accepted by enumerate_bases (C(n, r) determinants).
inline constexpr std::size_t kMaxBasisEnumerationSize = 16;

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Int determinant;
};

/// First square submatrix (by size, then lexicographically) whose determinant
/// lies outside {−1, 0, 1}. Throws UnsupportedSizeError past the size limit.
std::optional<Minor> find_non_unimodular_minor(const IntMatrix& m);

bool verify_totally_unimodular(const IntMatrix& m);

/// A regular matroid on n elements given by the standard-form representation
/// A = [I_r | D] with A totally unimodular.
class RegularMatroid {
 public:
  /// Validates n > r ≥ 1 and total unimodularity (which for [I | D] is that of D).
  /// Throws ValidationError or NotTotallyUnimodularError.
  explicit RegularMatroid(IntMatrix reduced);

  /// Skips the total unimodularity check. Shape is still validated.
  static RegularMatroid unchecked(IntMatrix reduced);

  std::size_t rank() const { return reduced_.rows(); }
  std::size_t size() const { return reduced_.rows() + reduced_.cols(); }

  /// The r × (n−r) block D.
  const IntMatrix& reduced() const { return reduced_; }

  /// A = [I_r | D]
  IntMatrix representation() const;

 private:
  struct Unchecked {};
  RegularMatroid(IntMatrix reduced, Unchecked);

  IntMatrix reduced_;
};

/// Â = [Dᵗ | −I_{n−r}]
IntMatrix dual_matrix(const RegularMatroid& m);

/// K = [A ; Â] = [[I, D], [Dᵗ, −I]], always symmetric.
IntMatrix combined_k(const RegularMatroid& m);

struct Basis {
  std::vector<std::size_t> columns;
  friend bool operator==(const Basis&, const Basis&) = default;
};

/// All r-subsets of columns of A with nonzero determinant, in lexicographic order.
std::vector<Basis> enumerate_bases(const RegularMatroid& m);

}  // namespace chipfire::matroid
