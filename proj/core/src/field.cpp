#include "kcomm/field.hpp"

#include <ostream>

namespace kcomm {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) {
    throw FieldError("prime field characteristic must be below 2^63");
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw FieldError(std::to_string(p) + " is not prime");
  }
  return Field(FieldKind::PrimeField, p);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (is_rationals()) return FieldElement(*this, mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(characteristic_);
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElement(*this, static_cast<std::uint64_t>(r));
}

FieldElement Field::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return FieldElement(*this, mpq_class(v));
  return FieldElement(*this, reduce_mpz(v, characteristic_));
}

FieldElement Field::from_mpq(const mpq_class& v) const {
  if (is_rationals()) {
    mpq_class q(v);
    q.canonicalize();
    return FieldElement(*this, std::move(q));
  }
  const FieldElement den = from_mpz(v.get_den());
  if (den.is_zero()) {
    throw FieldError("denominator " + v.get_den().get_str() + " vanishes in " + name());
  }
  return from_mpz(v.get_num()) / den;
}

FieldElement Field::parse_scalar(std::string_view text) const {
  auto parse_int = [&](std::string_view s) {
    mpz_class z;
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    if (str.empty() || z.set_str(str, 10) != 0) {
      throw FieldError("malformed scalar '" + std::string(text) + "'");
    }
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_int(text));
  const mpz_class num = parse_int(text.substr(0, slash));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw FieldError("division by zero in scalar '" + std::string(text) + "'");
  return from_mpq(mpq_class(num, den));
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "F " + std::to_string(characteristic_);
}

bool FieldElement::is_zero() const {
  if (field_.is_rationals()) return rational() == 0;
  return residue() == 0;
}

bool FieldElement::is_one() const {
  if (field_.is_rationals()) return rational() == 1;
  return residue() == 1;
}

bool FieldElement::is_negative() const {
  return field_.is_rationals() && rational() < 0;
}

void FieldElement::require_same_field(const FieldElement& other, const char* op) const {
  if (field_ != other.field_) {
    throw FieldError(std::string("mixed-field ") + op + ": " + field_.name() + " vs " +
                     other.field_.name());
  }
}

FieldElement FieldElement::operator-() const {
  if (field_.is_rationals()) return FieldElement(field_, mpq_class(-rational()));
  const std::uint64_t r = residue();
  return FieldElement(field_, r == 0 ? 0 : field_.characteristic() - r);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw FieldError("division by zero");
  if (field_.is_rationals()) return FieldElement(field_, mpq_class(1 / rational()));
  // a^(p-2) by Fermat
  return pow(field_.characteristic() - 2);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this;
  FieldElement acc = field_.one();
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs, "addition");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) += rhs.rational();
  } else {
    const std::uint64_t p = field_.characteristic();
    std::uint64_t s = residue() + rhs.residue();
    if (s >= p) s -= p;
    value_ = s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs, "subtraction");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) -= rhs.rational();
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t a = residue();
    const std::uint64_t b = rhs.residue();
    value_ = a >= b ? a - b : a + (p - b);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs, "multiplication");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) *= rhs.rational();
  } else {
    value_ = mulmod(residue(), rhs.residue(), field_.characteristic());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs, "division");
  return *this *= rhs.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (auto c = a.field_ <=> b.field_; c != 0) return c;
  if (a.field_.is_rationals()) {
    const int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.residue() <=> b.residue();
}

std::string FieldElement::to_string() const {
  if (field_.is_rationals()) return rational().get_str();
  return std::to_string(residue());
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace kcomm
