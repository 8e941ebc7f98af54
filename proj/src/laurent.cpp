#include "medq/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "medq/error.hpp"

namespace medq {

namespace {

constexpr std::int64_t kExponentBound = std::int64_t{1} << 32;

void check_exponent(std::int64_t e) {
  if (e <= -kExponentBound || e >= kExponentBound)
    throw std::overflow_error("Laurent exponent out of range");
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t exponent) {
  check_exponent(exponent);
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

void LaurentPoly::add_term(std::int64_t e, const Integer& c) {
  if (c == 0) return;
  check_exponent(e);
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = !s.empty();
      continue;
    }
    // Whitespace may not split a number or join two factors.
    if (gap && std::isalnum(static_cast<unsigned char>(ch)) &&
        std::isalnum(static_cast<unsigned char>(s.back())))
      throw ParseError("Laurent polynomial '" + std::string(text) + "': missing operator");
    gap = false;
    s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty Laurent polynomial");

  std::size_t p = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("Laurent polynomial '" + std::string(text) + "': " + what + " at offset " +
                     std::to_string(p));
  };
  auto read_digits = [&]() {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };

  LaurentPoly result;
  bool first = true;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = Integer(digits);
      have_coeff = true;
    }
    std::int64_t exponent = 0;
    bool have_t = false;
    if (p < s.size() && s[p] == '*') {
      if (!have_coeff) fail("'*' without coefficient");
      ++p;
      if (p >= s.size() || s[p] != 't') fail("expected 't' after '*'");
    }
    if (p < s.size() && s[p] == 't') {
      have_t = true;
      exponent = 1;
      ++p;
      if (p < s.size() && s[p] == '^') {
        ++p;
        bool paren = p < s.size() && s[p] == '(';
        if (paren) ++p;
        int esign = 1;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) {
          esign = s[p] == '-' ? -1 : 1;
          ++p;
        }
        std::string edigits = read_digits();
        if (edigits.empty()) fail("missing exponent");
        if (edigits.size() > 12) fail("exponent too large");
        exponent = esign * std::stoll(edigits);
        if (paren) {
          if (p >= s.size() || s[p] != ')') fail("expected ')'");
          ++p;
        }
      }
    }
    if (!have_coeff && !have_t) fail("expected a term");
    result.add_term(exponent, sign * coeff);
  }
  return result;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp which) {
  switch (which) {
    case LpOp::add:
      return a + b;
    case LpOp::sub:
      return a - b;
    case LpOp::mul:
      return a * b;
  }
  throw std::logic_error("unknown LpOp");
}

Integer augment(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& [e, c] : a.terms()) s += c;
  return s;
}

bool lp_is_unit(const LaurentPoly& a) {
  return a.terms().size() == 1 && abs(a.terms().begin()->second) == 1;
}

ScalarRing::ScalarRing(const Integer& modulus, const Integer& t_image) : modulus_(modulus) {
  if (modulus < 0) throw std::invalid_argument("ring modulus must be nonnegative");
  u_ = from_integer(t_image);
}

ScalarRing::ScalarRing(const Integer& modulus, IntVector f, IntVector t_image)
    : modulus_(modulus), f_(std::move(f)) {
  if (modulus < 0) throw std::invalid_argument("ring modulus must be nonnegative");
  if (f_.size() < 2 || f_.back() != 1)
    throw std::invalid_argument("polynomial modulus must be monic of degree >= 1");
  degree_ = f_.size() - 1;
  u_ = reduce(std::move(t_image));
}

ScalarRing ScalarRing::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("ring must be given as m:u");
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) throw ParseError("bad integer in ring '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParseError("bad integer in ring '" + std::string(text) + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  Integer m = parse_int(text.substr(0, colon));
  Integer u = parse_int(text.substr(colon + 1));
  if (m < 0) throw ParseError("ring modulus must be nonnegative");
  return ScalarRing(m, u);
}

std::string ScalarRing::label() const {
  if (!has_poly_modulus()) return modulus_.get_str() + ":" + u_.value[0].get_str();
  auto poly = [](const IntVector& c) {
    LaurentPoly p;
    for (std::size_t k = 0; k < c.size(); ++k) p += LaurentPoly::monomial(c[k], static_cast<std::int64_t>(k));
    return p.to_string();
  };
  return modulus_.get_str() + ":" + poly(u_.value) + " mod " + poly(f_);
}

RingElem ScalarRing::zero() const { return RingElem{IntVector(degree_)}; }

RingElem ScalarRing::one() const { return from_integer(1); }

RingElem ScalarRing::from_integer(const Integer& c) const {
  IntVector v(degree_);
  v[0] = c;
  return reduce(std::move(v));
}

RingElem ScalarRing::reduce(IntVector coeffs) const {
  if (has_poly_modulus()) {
    for (std::size_t k = coeffs.size(); k-- > degree_;) {
      Integer lead = coeffs[k];
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= degree_; ++j) coeffs[k - degree_ + j] -= lead * f_[j];
    }
  }
  coeffs.resize(degree_);
  if (modulus_ != 0)
    for (auto& c : coeffs) c = mod_floor(c, modulus_);
  return RingElem{std::move(coeffs)};
}

RingElem ScalarRing::add(const RingElem& a, const RingElem& b) const {
  IntVector v(degree_);
  for (std::size_t k = 0; k < degree_; ++k) v[k] = a.value[k] + b.value[k];
  return reduce(std::move(v));
}

RingElem ScalarRing::sub(const RingElem& a, const RingElem& b) const {
  IntVector v(degree_);
  for (std::size_t k = 0; k < degree_; ++k) v[k] = a.value[k] - b.value[k];
  return reduce(std::move(v));
}

RingElem ScalarRing::neg(const RingElem& a) const {
  IntVector v(degree_);
  for (std::size_t k = 0; k < degree_; ++k) v[k] = -a.value[k];
  return reduce(std::move(v));
}

RingElem ScalarRing::mul(const RingElem& a, const RingElem& b) const {
  IntVector v(2 * degree_ - 1);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a.value[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) v[i + j] += a.value[i] * b.value[j];
  }
  return reduce(std::move(v));
}

bool ScalarRing::is_zero(const RingElem& a) const {
  for (const auto& c : a.value)
    if (c != 0) return false;
  return true;
}

IntMatrix ScalarRing::mult_matrix(const RingElem& a) const {
  IntMatrix m(degree_, degree_);
  for (std::size_t k = 0; k < degree_; ++k) {
    IntVector basis(degree_);
    basis[k] = 1;
    RingElem col = mul(a, reduce(std::move(basis)));
    for (std::size_t i = 0; i < degree_; ++i) m(i, k) = col.value[i];
  }
  return m;
}

bool ScalarRing::is_unit(const RingElem& a) const { return inverse(a).has_value(); }

std::optional<RingElem> ScalarRing::inverse(const RingElem& a) const {
  if (!has_poly_modulus()) {
    const Integer& x = a.value[0];
    if (modulus_ == 0) {
      if (x == 1 || x == -1) return RingElem{{x}};
      return std::nullopt;
    }
    if (modulus_ == 1) return zero();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t()) == 0) return std::nullopt;
    return from_integer(inv);
  }
  IntMatrix m = mult_matrix(a);
  Integer det = determinant(m);
  Integer det_inv;
  if (modulus_ == 0) {
    if (det != 1 && det != -1) return std::nullopt;
    det_inv = det;
  } else {
    if (modulus_ == 1) return zero();
    if (mpz_invert(det_inv.get_mpz_t(), det.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      return std::nullopt;
  }
  // The inverse is M^{-1} applied to the element 1.
  IntMatrix adj = adjugate(m);
  IntVector v(degree_);
  for (std::size_t i = 0; i < degree_; ++i) v[i] = adj(i, 0) * det_inv;
  return reduce(std::move(v));
}

RingElem ScalarRing::t_inverse() const {
  auto inv = inverse(u_);
  if (!inv) throw NonUnitT("t image " + label() + " is not a unit");
  return *inv;
}

RingElem lp_specialize(const LaurentPoly& a, const ScalarRing& r) {
  RingElem u = r.t_image();
  RingElem u_inv = r.t_inverse();
  RingElem acc = r.zero();
  if (a.is_zero()) return acc;
  // Walk exponents upward from the lowest, multiplying by u between terms.
  std::int64_t lo = a.min_exponent();
  RingElem power = r.one();
  if (lo < 0) {
    for (std::int64_t k = 0; k < -lo; ++k) power = r.mul(power, u_inv);
  } else {
    for (std::int64_t k = 0; k < lo; ++k) power = r.mul(power, u);
  }
  std::int64_t current = lo;
  for (const auto& [e, c] : a.terms()) {
    for (; current < e; ++current) power = r.mul(power, u);
    acc = r.add(acc, r.mul(r.from_integer(c), power));
  }
  return acc;
}

std::string ring_elem_to_string(const RingElem& a, const ScalarRing& r) {
  if (!r.has_poly_modulus()) return a.value[0].get_str();
  LaurentPoly p;
  for (std::size_t k = 0; k < a.value.size(); ++k)
    p += LaurentPoly::monomial(a.value[k], static_cast<std::int64_t>(k));
  return p.to_string();
}

}  // namespace medq
