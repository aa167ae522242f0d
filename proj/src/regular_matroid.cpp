#include "chipfire/regular_matroid.hpp"

#include <string>

#include "chipfire/combinations.hpp"
#include "chipfire/exact_linalg.hpp"

namespace chipfire::matroid {

std::optional<Minor> find_non_unimodular_minor(const IntMatrix& m) {
  if (m.rows() > kMaxUnimodularCheckDim || m.cols() > kMaxUnimodularCheckDim) {
    throw UnsupportedSizeError("total unimodularity check is limited to " +
                               std::to_string(kMaxUnimodularCheckDim) + " rows and columns");
  }
  const std::size_t max_k = std::min(m.rows(), m.cols());
  std::optional<Minor> found;
  for (std::size_t k = 1; k <= max_k && !found; ++k) {
    detail::for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Int d = linalg::det(m.submatrix(rows, cols));
        if (d >= -1 && d <= 1) return true;
        found = Minor{rows, cols, std::move(d)};
        return false;
      });
      return !found;
    });
  }
  return found;
}

bool verify_totally_unimodular(const IntMatrix& m) { return !find_non_unimodular_minor(m); }

RegularMatroid::RegularMatroid(IntMatrix reduced, Unchecked) : reduced_(std::move(reduced)) {
  if (reduced_.rows() == 0) throw ValidationError("matroid rank must be at least 1");
  if (reduced_.cols() == 0) throw ValidationError("standard form needs n > r");
}

RegularMatroid::RegularMatroid(IntMatrix reduced) : RegularMatroid(std::move(reduced), Unchecked{}) {
  if (auto minor = find_non_unimodular_minor(reduced_)) {
    // Re-index D's columns into A = [I | D].
    for (auto& c : minor->cols) c += rank();
    throw NotTotallyUnimodularError(std::move(minor->rows), std::move(minor->cols),
                                    minor->determinant.get_str());
  }
}

RegularMatroid RegularMatroid::unchecked(IntMatrix reduced) {
  return RegularMatroid(std::move(reduced), Unchecked{});
}

IntMatrix RegularMatroid::representation() const {
  return hstack(IntMatrix::identity(rank()), reduced_);
}

IntMatrix dual_matrix(const RegularMatroid& m) {
  const std::size_t corank = m.size() - m.rank();
  return hstack(m.reduced().transpose(), -IntMatrix::identity(corank));
}

IntMatrix combined_k(const RegularMatroid& m) { return vstack(m.representation(), dual_matrix(m)); }

std::vector<Basis> enumerate_bases(const RegularMatroid& m) {
  if (m.size() > kMaxBasisEnumerationSize) {
    throw UnsupportedSizeError("basis enumeration is limited to " +
                               std::to_string(kMaxBasisEnumerationSize) + " elements");
  }
  const IntMatrix a = m.representation();
  std::vector<std::size_t> all_rows(m.rank());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;

  std::vector<Basis> bases;
  detail::for_each_combination(m.size(), m.rank(), [&](const std::vector<std::size_t>& cols) {
    if (linalg::det(a.submatrix(all_rows, cols)) != 0) bases.push_back(Basis{cols});
    return true;
  });
  return bases;
}

}  // namespace chipfire::matroid
