#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace chipfire {

/// Exact integer scalar. All matrix entries and chip counts use this type.
using Int = mpz_class;

/// Quotient rounded toward negative infinity. `divisor` must be nonzero.
inline Int floor_div(const Int& value, const Int& divisor) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

/// Remainder in [0, |divisor|).
inline Int mod_euclid(const Int& value, const Int& divisor) {
  Int r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return r;
}

inline bool divides(const Int& divisor, const Int& value) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

inline bool is_even(const Int& value) { return mpz_even_p(value.get_mpz_t()) != 0; }

inline bool fits_int64(const Int& value) {
  static const Int kMin{"-9223372036854775808"};
  static const Int kMax{"9223372036854775807"};
  return value >= kMin && value <= kMax;
}

/// Narrowing conversion; the caller must have checked fits_int64().
inline std::int64_t to_int64(const Int& value) {
  if (value.fits_slong_p()) return value.get_si();
  return static_cast<std::int64_t>(std::stoll(value.get_str()));
}

inline Int from_int64(std::int64_t value) {
  if (value >= LONG_MIN && value <= LONG_MAX) return Int(static_cast<long>(value));
  return Int(std::to_string(value));
}

}  // namespace chipfire
