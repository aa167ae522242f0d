#include "doctest.h"

#include "chipfire/exact_linalg.hpp"
#include "chipfire/r10.hpp"
#include "chipfire/regular_matroid.hpp"
#include "chipfire/sandpile.hpp"
#include "oracles.hpp"

using namespace chipfire;
using matroid::RegularMatroid;

TEST_CASE("total unimodularity of small matrices") {
  CHECK(matroid::verify_totally_unimodular(IntMatrix::identity(5)));
  CHECK(matroid::verify_totally_unimodular(r10::constants().a_matrix));
  CHECK_FALSE(matroid::verify_totally_unimodular(IntMatrix{{1, 1}, {-1, 1}}));
  CHECK_FALSE(matroid::verify_totally_unimodular(IntMatrix{{2}}));
}

TEST_CASE("violating minor is reported") {
  const auto minor = matroid::find_non_unimodular_minor(IntMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  REQUIRE(minor.has_value());
  CHECK(minor->determinant == -2);
  CHECK(minor->rows == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("total unimodularity check refuses oversized input") {
  CHECK_THROWS_AS(matroid::verify_totally_unimodular(IntMatrix(3, 13)), UnsupportedSizeError);
}

TEST_CASE("RegularMatroid construction validates its input") {
  CHECK_THROWS_AS(RegularMatroid(IntMatrix(2, 0)), ValidationError);
  CHECK_THROWS_AS(RegularMatroid(IntMatrix(0, 2)), ValidationError);
  try {
    RegularMatroid bad(IntMatrix{{1, 1}, {-1, 1}});
    FAIL("expected NotTotallyUnimodularError");
  } catch (const NotTotallyUnimodularError& e) {
    // Columns refer to A = [I₂ | D].
    CHECK(e.cols() == std::vector<std::size_t>{2, 3});
    CHECK(e.determinant() == "2");
  }
  const auto unchecked = RegularMatroid::unchecked(IntMatrix{{2}});
  CHECK(unchecked.size() == 2);
}

TEST_CASE("dual matrix") {
  CHECK(matroid::dual_matrix(sandpile::example_matroid()) == IntMatrix{{-1, -1, -1}});
  CHECK(matroid::dual_matrix(RegularMatroid(IntMatrix{{1}})) == IntMatrix{{1, -1}});

  const auto r10m = r10::matroid();
  const IntMatrix expected = hstack(r10m.reduced(), -IntMatrix::identity(5));
  CHECK(matroid::dual_matrix(r10m) == expected);
  CHECK(r10m.reduced() == r10m.reduced().transpose());
}

TEST_CASE("combined matrix") {
  CHECK(matroid::combined_k(sandpile::example_matroid()) ==
        IntMatrix{{1, 0, -1}, {0, 1, -1}, {-1, -1, -1}});
  CHECK(matroid::combined_k(RegularMatroid(IntMatrix{{1}})) == IntMatrix{{1, 1}, {1, -1}});
  CHECK(matroid::combined_k(r10::matroid()) == r10::constants().k_matrix);
  CHECK(r10::matroid().representation() == r10::constants().a_matrix);
}

TEST_CASE("R10 passes the checked constructor") {
  CHECK_NOTHROW(RegularMatroid(r10::matroid().reduced()));
}

TEST_CASE("enumerate bases") {
  const auto example = matroid::enumerate_bases(sandpile::example_matroid());
  REQUIRE(example.size() == 3);
  CHECK(example[0].columns == std::vector<std::size_t>{0, 1});
  CHECK(example[1].columns == std::vector<std::size_t>{0, 2});
  CHECK(example[2].columns == std::vector<std::size_t>{1, 2});

  CHECK(matroid::enumerate_bases(RegularMatroid(IntMatrix{{1}})).size() == 2);

  const auto r10_bases = matroid::enumerate_bases(r10::matroid());
  CHECK(r10_bases.size() == 162);
  CHECK(Int(static_cast<unsigned long>(r10_bases.size())) == abs(linalg::det(r10::constants().k_matrix)));

  const auto a = r10::constants().a_matrix;
  std::vector<std::size_t> rows{0, 1, 2, 3, 4};
  for (const auto& b : r10_bases) CHECK(abs(linalg::det(a.submatrix(rows, b.columns))) == 1);
}

TEST_CASE("enumerate bases refuses oversized matroids") {
  CHECK_THROWS_AS(matroid::enumerate_bases(RegularMatroid::unchecked(IntMatrix(8, 9))),
                  UnsupportedSizeError);
}

namespace {

// Interval (consecutive-ones) matrices are totally unimodular.
IntMatrix random_interval_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
  IntMatrix d(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t lo = pick(rng);
    std::size_t hi = pick(rng);
    if (lo > hi) std::swap(lo, hi);
    for (std::size_t r = lo; r <= hi; ++r) d(r, c) = 1;
  }
  return d;
}

}  // namespace

TEST_CASE("property: kernel of A equals image of the dual transpose") {
  std::mt19937_64 rng(17);
  std::vector<RegularMatroid> matroids{sandpile::example_matroid(), r10::matroid()};
  for (int t = 0; t < 10; ++t)
    matroids.emplace_back(random_interval_matrix(rng, 1 + t % 4, 1 + (t * 7) % 5));

  for (const auto& m : matroids) {
    const IntMatrix a = m.representation();
    const IntMatrix dual_t = matroid::dual_matrix(m).transpose();
    const std::size_t corank = m.size() - m.rank();

    CHECK(a * dual_t == IntMatrix(m.rank(), corank));
    for (int trial = 0; trial < 20; ++trial) {
      const IntVector x = oracle::random_vector(rng, corank, -7, 7);
      CHECK(a * (dual_t * x) == IntVector(m.rank()));
    }

    // Kernel basis of [I | D]: (−D e_j ; e_j). Each is Âᵗ·x for x = −e_j.
    for (std::size_t j = 0; j < corank; ++j) {
      IntVector v(m.size());
      for (std::size_t i = 0; i < m.rank(); ++i) v[i] = -m.reduced()(i, j);
      v[m.rank() + j] = 1;
      CHECK(a * v == IntVector(m.rank()));
      IntVector x(corank);
      x[j] = -1;
      CHECK(dual_t * x == v);
    }
  }
}

TEST_CASE("property: combined matrix is symmetric and basis count matches |det K|") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    const RegularMatroid m(random_interval_matrix(rng, 1 + t % 5, 1 + (t * 3) % 6));
    const IntMatrix k = matroid::combined_k(m);
    CHECK(k == k.transpose());
    CHECK(Int(static_cast<unsigned long>(matroid::enumerate_bases(m).size())) == abs(linalg::det(k)));
  }
}
