#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace medq {

using Integer = mpz_class;

// Throws std::overflow_error if the value does not fit.
std::int64_t to_i64(const Integer& x);

inline Integer to_integer(std::int64_t x) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(x));
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

// Residue in [0, m) for machine integers; m > 0.
inline std::int64_t mod_i64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 p = static_cast<__int128>(a) * b;
  p %= m;
  if (p < 0) p += m;
  return static_cast<std::int64_t>(p);
}

}  // namespace medq
