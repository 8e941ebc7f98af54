#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medq/integer.hpp"
#include "medq/matrix.hpp"

namespace medq {

// Exact element of Z[t, t^-1].
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& c, std::int64_t exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly t_inv() { return monomial(1, -1); }
  // Parses e.g. "1 - 3*t + 3*t^2 - t^3" or "t^-1 - 1".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::int64_t exponent) const;
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly pow(unsigned k) const;
  bool operator==(const LaurentPoly& o) const = default;

  std::string to_string() const;

 private:
  void add_term(std::int64_t e, const Integer& c);
  Terms terms_;
};

enum class LpOp { add, sub, mul };
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp which);

// a(1).
Integer augment(const LaurentPoly& a);

// True iff a = +-t^k.
bool lp_is_unit(const LaurentPoly& a);

// Residue (polynomial) of a ScalarRing; coefficient k multiplies x^k.
struct RingElem {
  IntVector value;
  bool operator==(const RingElem& o) const = default;
};

// Z/m (m = 0 meaning Z), optionally with a monic polynomial modulus f, and an
// image u of t.
class ScalarRing {
 public:
  ScalarRing(const Integer& modulus, const Integer& t_image);
  // f monic, coefficients low to high; u given as residue coefficients.
  ScalarRing(const Integer& modulus, IntVector f, IntVector t_image);
  // "m:u" with integers m >= 0 and u.
  static ScalarRing parse(std::string_view text);

  const Integer& modulus() const { return modulus_; }
  std::size_t degree() const { return degree_; }
  bool has_poly_modulus() const { return !f_.empty(); }
  const IntVector& poly_modulus() const { return f_; }
  const RingElem& t_image() const { return u_; }
  bool is_finite() const { return modulus_ != 0; }
  std::string label() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_integer(const Integer& c) const;
  RingElem reduce(IntVector coeffs) const;
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  std::optional<RingElem> inverse(const RingElem& a) const;
  // Throws NonUnitT if u is not invertible.
  RingElem t_inverse() const;
  // Matrix of multiplication by a in the basis 1, x, ..., x^{d-1}; entries reduced.
  IntMatrix mult_matrix(const RingElem& a) const;

  bool operator==(const ScalarRing& o) const {
    return modulus_ == o.modulus_ && f_ == o.f_ && u_ == o.u_;
  }

 private:
  Integer modulus_;
  IntVector f_;
  std::size_t degree_ = 1;
  RingElem u_;
};

// Evaluation t -> u in R. Throws NonUnitT when negative powers are needed and u
// is not a unit (checked unconditionally, since Z[t^-1] requires it).
RingElem lp_specialize(const LaurentPoly& a, const ScalarRing& r);

std::string ring_elem_to_string(const RingElem& a, const ScalarRing& r);

}  // namespace medq
