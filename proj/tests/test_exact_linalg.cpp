#include "doctest.h"

#include "chipfire/exact_linalg.hpp"
#include "chipfire/r10.hpp"
#include "oracles.hpp"

using namespace chipfire;
using linalg::det;
using linalg::smith_normal_form;
using linalg::solve_integer;

namespace {

void check_snf_invariants(const IntMatrix& m, const linalg::SnfResult& snf) {
  REQUIRE(snf.u.rows() == m.rows());
  REQUIRE(snf.v.rows() == m.cols());
  CHECK(snf.u * m * snf.v == snf.d);
  CHECK(abs(det(snf.u)) == 1);
  CHECK(abs(det(snf.v)) == 1);
  for (std::size_t i = 0; i < snf.d.rows(); ++i)
    for (std::size_t j = 0; j < snf.d.cols(); ++j)
      if (i != j) CHECK(snf.d(i, j) == 0);
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) CHECK(divides(diag[i], diag[i + 1]));
  }
}

}  // namespace

TEST_CASE("det of small fixed matrices") {
  CHECK(det(IntMatrix::identity(10)) == 1);
  CHECK(det(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det(IntMatrix(0, 0)) == 1);
  // zero leading pivot forces a row swap
  CHECK(det(IntMatrix{{0, 2, 1}, {3, 1, 0}, {1, 0, 4}}) == oracle::laplace_det({{0, 2, 1}, {3, 1, 0}, {1, 0, 4}}));
}

TEST_CASE("det of the R10 combined matrix is -162") {
  CHECK(det(r10::constants().k_matrix) == -162);
}

TEST_CASE("det rejects non-square input") {
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("det agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = oracle::random_matrix(rng, n, n, trial % 3 == 0 ? -1 : -5, trial % 3 == 0 ? 1 : 5);
    CHECK(det(m) == oracle::laplace_det(m));
  }
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  const IntMatrix m{{2, 0}, {0, 3}};
  const auto snf = smith_normal_form(m);
  check_snf_invariants(m, snf);
  CHECK(snf.diagonal() == IntVector{1, 6});
}

TEST_CASE("smith normal form of the R10 combined matrix") {
  const IntMatrix& k = r10::constants().k_matrix;
  const auto snf = smith_normal_form(k);
  check_snf_invariants(k, snf);
  CHECK(snf.diagonal() == IntVector{1, 1, 1, 1, 1, 1, 3, 3, 3, 6});
}

TEST_CASE("smith normal form of a zero matrix leaves U and V alone") {
  const IntMatrix z(2, 2);
  const auto snf = smith_normal_form(z);
  CHECK(snf.d == z);
  CHECK(snf.u == IntMatrix::identity(2));
  CHECK(snf.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form handles rectangular and rank-deficient input") {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}};
  const auto snf = smith_normal_form(m);
  check_snf_invariants(m, snf);
  CHECK(snf.diagonal() == oracle::determinantal_snf(m));

  const IntMatrix low_rank{{1, 2}, {2, 4}, {3, 6}};
  const auto snf2 = smith_normal_form(low_rank);
  check_snf_invariants(low_rank, snf2);
  CHECK(snf2.diagonal() == IntVector{1, 0});
}

TEST_CASE("property: smith normal form round trip on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 6;
    const std::size_t cols = 1 + (trial / 6) % 6;
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, -5, 5);
    const auto snf = smith_normal_form(m);
    check_snf_invariants(m, snf);
    if (rows <= 4 && cols <= 4) CHECK(snf.diagonal() == oracle::determinantal_snf(m));
    if (rows == cols) {
      Int product = 1;
      for (const auto& d : snf.diagonal()) product *= d;
      CHECK(product == abs(det(m)));
    }
  }
}

TEST_CASE("solve_integer basic cases") {
  const IntVector b{7, -3, 2};
  CHECK(solve_integer(IntMatrix::identity(3), b) == b);
  CHECK(solve_integer(IntMatrix{{2, 0}, {0, 3}}, IntVector{2, 3}) == IntVector{1, 1});
  CHECK_FALSE(solve_integer(IntMatrix{{2, 0}, {0, 3}}, IntVector{1, 0}).has_value());
}

TEST_CASE("solve_integer distinguishes singular from unsolvable") {
  CHECK_THROWS_AS(solve_integer(IntMatrix{{1, 2}, {2, 4}}, IntVector{1, 2}), SingularMatrixError);
  CHECK_THROWS_AS(solve_integer(IntMatrix(2, 3), IntVector{1, 2}), DimensionError);
  CHECK_THROWS_AS(solve_integer(IntMatrix::identity(2), IntVector{1}), DimensionError);
}

TEST_CASE("property: solve_integer is sound and complete on constructed systems") {
  std::mt19937_64 rng(99);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = oracle::random_matrix(rng, n, n, -5, 5);
    if (oracle::laplace_det(m) == 0) continue;
    const IntVector x = oracle::random_vector(rng, n, -9, 9);
    const IntVector b = m * x;
    const auto got = solve_integer(m, b);
    REQUIRE(got.has_value());
    CHECK(m * *got == b);
    ++solved;

    // An arbitrary right-hand side: whatever comes back must be a solution.
    const IntVector c = oracle::random_vector(rng, n, -9, 9);
    if (const auto y = solve_integer(m, c)) CHECK(m * *y == c);
  }
  CHECK(solved > 200);
}

TEST_CASE("real embedding of the R10 Gaussian matrix is the combined matrix") {
  CHECK(linalg::real_embedding(r10::constants().kbar) == r10::constants().k_matrix);
}

TEST_CASE("gauss_solve_via_real fixed cases") {
  const GaussVec b{GaussInt(1, 2), GaussInt(-3, 0), GaussInt(0, 5), GaussInt(4, -4), GaussInt(0, 0)};
  CHECK(linalg::gauss_solve_via_real(GaussMatrix::identity(5), b) == b);

  const auto& kbar = r10::constants().kbar;
  const GaussVec diff{GaussInt(-3, -1), GaussInt(-3, 6), GaussInt(-7, -1), GaussInt(8, 8),
                      GaussInt(-3, 0)};
  const GaussVec expected{GaussInt(-5, -1), GaussInt(-4, 1), GaussInt(-4, 3), GaussInt(4, -1),
                          GaussInt(-1, 0)};
  CHECK(linalg::gauss_solve_via_real(kbar, diff) == expected);

  CHECK_FALSE(linalg::gauss_solve_via_real(kbar, GaussVec{1, 0, 0, 0, 0}).has_value());
}

TEST_CASE("property: gauss_solve_via_real matches elimination over Q(i)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(-3, 3);
  int nonsingular = 0;
  int integral = 0;
  for (int trial = 0; trial < 400; ++trial) {
    GaussMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = GaussInt(small(rng), small(rng));
    GaussVec b(3);
    if (trial % 2 == 0) {
      GaussVec x(3);
      for (auto& z : x) z = GaussInt(small(rng), small(rng));
      b = m * x;
    } else {
      for (auto& z : b) z = GaussInt(small(rng), small(rng));
    }

    bool singular = false;
    const auto expected = oracle::rational_gauss_solve(m, b, &singular);
    if (singular) {
      CHECK_THROWS_AS(linalg::gauss_solve_via_real(m, b), SingularMatrixError);
      continue;
    }
    ++nonsingular;
    const auto got = linalg::gauss_solve_via_real(m, b);
    CHECK(got.has_value() == expected.has_value());
    if (got && expected) {
      CHECK(*got == *expected);
      ++integral;
    }
  }
  CHECK(nonsingular > 300);
  CHECK(integral > 150);
}

TEST_CASE("Gaussian integer arithmetic") {
  const GaussInt a(2, 3);
  const GaussInt b(-1, 4);
  CHECK(a * b == GaussInt(-14, 5));
  CHECK(a + b == GaussInt(1, 7));
  CHECK(a - b == GaussInt(3, -1));
  CHECK(a.norm() == 13);
  CHECK(GaussInt(0, 0).norm() == 0);
  CHECK(GaussInt(1, 1).times_i() == GaussInt(-1, 1));
  CHECK(a * a.conj() == GaussInt(a.norm()));
}
