#include "chipfire/gauss.hpp"

namespace chipfire {

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
  if (z.im == 0) return os << z.re;
  if (z.re != 0) os << z.re << (z.im > 0 ? "+" : "-");
  else if (z.im < 0) os << '-';
  Int mag = abs(z.im);
  if (mag != 1) os << mag;
  return os << 'i';
}

}  // namespace chipfire
