#include "medq/integer.hpp"

#include <stdexcept>

namespace medq {

std::int64_t to_i64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) {
    throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  }
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace medq
