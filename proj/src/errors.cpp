#include "chipfire/errors.hpp"

#include <sstream>

namespace chipfire {

namespace {

std::string describe_minor(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols, const std::string& det) {
  std::ostringstream os;
  os << "not totally unimodular: minor with rows {";
  for (std::size_t k = 0; k < rows.size(); ++k) os << (k ? "," : "") << rows[k];
  os << "} and columns {";
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << "} has determinant " << det;
  return os.str();
}

}  // namespace

NotTotallyUnimodularError::NotTotallyUnimodularError(std::vector<std::size_t> rows,
                                                     std::vector<std::size_t> cols,
                                                     std::string determinant)
    : Error(describe_minor(rows, cols, determinant)),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      determinant_(std::move(determinant)) {}

}  // namespace chipfire
