#include "chipfire/exact_linalg.hpp"

#include <utility>

namespace chipfire::linalg {

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);

  IntMatrix a = m;
  Int prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Sylvester's identity guarantees exact division.
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  Int result = a(n - 1, n - 1);
  if (sign < 0) result = -result;
  return result;
}

IntVector SnfResult::diagonal() const {
  IntVector diag;
  const std::size_t k = std::min(d.rows(), d.cols());
  diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) diag.push_back(d(i, i));
  return diag;
}

namespace {

// Row operations act on D and U, column operations on D and V, so U·M·V = D
// holds after every step.
class SnfWorkspace {
 public:
  explicit SnfWorkspace(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t s = 0; s < steps; ++s) {
      if (!reduce_at(s)) break;
      if (d_(s, s) < 0) negate_row(s);
    }
    return {std::move(u_), std::move(d_), std::move(v_)};
  }

 private:
  // Returns false when the working submatrix is entirely zero.
  bool reduce_at(std::size_t s) {
    for (;;) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!find_pivot(s, pr, pc)) return false;
      swap_rows(s, pr);
      swap_cols(s, pc);

      bool clean = true;
      for (std::size_t i = s + 1; i < d_.rows(); ++i) {
        if (d_(i, s) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d_(i, s).get_mpz_t(), d_(s, s).get_mpz_t());
        add_row_multiple(i, s, Int(-q));
        if (d_(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < d_.cols(); ++j) {
        if (d_(s, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d_(s, j).get_mpz_t(), d_(s, s).get_mpz_t());
        add_col_multiple(j, s, Int(-q));
        if (d_(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole remaining block before it is final.
      bool divisible = true;
      for (std::size_t i = s + 1; i < d_.rows() && divisible; ++i) {
        for (std::size_t j = s + 1; j < d_.cols(); ++j) {
          if (!divides(d_(s, s), d_(i, j))) {
            add_row_multiple(s, i, Int(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return true;
    }
  }

  bool find_pivot(std::size_t s, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < d_.rows(); ++i) {
      for (std::size_t j = s; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        Int mag = abs(d_(i, j));
        if (!found || mag < best) {
          found = true;
          best = std::move(mag);
          pr = i;
          pc = j;
        }
      }
    }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(target, j) += factor * d_(source, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(target, j) += factor * u_(source, j);
  }

  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, target) += factor * d_(i, source);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, target) += factor * v_(i, source);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) { return SnfWorkspace(m).run(); }

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (!m.is_square()) throw DimensionError("solve_integer needs a square matrix");
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");

  const SnfResult snf = smith_normal_form(m);
  const IntVector diag = snf.diagonal();
  for (const Int& d : diag)
    if (d == 0) throw SingularMatrixError("solve_integer on a singular matrix");

  // M = U⁻¹·D·V⁻¹, so M·x = b  ⇔  D·y = U·b with x = V·y.
  IntVector rhs = snf.u * b;
  IntVector y(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (!divides(diag[i], rhs[i])) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), rhs[i].get_mpz_t(), diag[i].get_mpz_t());
  }
  IntVector x = snf.v * y;
  if (m * x != b) throw InternalError("solve_integer produced a non-solution");
  return x;
}

IntMatrix real_embedding(const GaussMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix e(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const GaussInt& z = m(i, j);
      e(i, j) = z.re;
      e(i, c + j) = z.im;
      e(r + i, j) = z.im;
      e(r + i, c + j) = -z.re;
    }
  }
  return e;
}

std::optional<GaussVec> gauss_solve_via_real(const GaussMatrix& m, const GaussVec& b) {
  if (!m.is_square()) throw DimensionError("gauss_solve_via_real needs a square matrix");
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");

  const std::size_t n = m.rows();
  IntVector rhs(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = b[i].re;
    rhs[n + i] = b[i].im;
  }
  auto real = solve_integer(real_embedding(m), rhs);
  if (!real) return std::nullopt;

  GaussVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = GaussInt((*real)[i], Int(-(*real)[n + i]));
  return x;
}

}  // namespace chipfire::linalg
