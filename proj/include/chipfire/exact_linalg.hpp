#pragma once

#include <optional>
#include <vector>

#include "chipfire/gauss.hpp"
#include "chipfire/int.hpp"
#include "chipfire/matrix.hpp"

namespace chipfire::linalg {

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
/// Throws DimensionError for non-square input.
Int det(const IntMatrix& m);

/// U·M·V = D with U, V unimodular and D diagonal with d₁ | d₂ | … and dᵢ ≥ 0.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of D.
  IntVector diagonal() const;
};

/// Smith normal form by repeated gcd reduction. The working pivot is always the
/// nonzero entry of least absolute value in the remaining submatrix (first in
/// row-major order on ties); diagonal signs are normalised by negating rows.
SnfResult smith_normal_form(const IntMatrix& m);

/// Integer solution of M·x = b, or std::nullopt when only rational solutions
/// exist. Throws SingularMatrixError if det M = 0 and DimensionError on shape
/// mismatch.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Real form of a Gaussian matrix P + Qi: the 2n×2n block matrix [[P, Q], [Q, −P]].
/// With x = a − c·i it satisfies real_embedding(M)·(a; c) = (Re Mx; Im Mx).
IntMatrix real_embedding(const GaussMatrix& m);

/// Solves M·x = b over ℤ[i] by passing to real_embedding(M) and solve_integer.
std::optional<GaussVec> gauss_solve_via_real(const GaussMatrix& m, const GaussVec& b);

}  // namespace chipfire::linalg
