#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace kcomm {

/// Raised for arithmetic that leaves the field: division by zero, mixing
/// elements of different fields, or constructing F_p with composite p.
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FieldElement;

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// The coefficient field: either Q or F_p with p prime and p < 2^63.
///
/// Both choices are perfect fields, which the radical computation in
/// endomod depends on.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  /// Fails over F_p when the denominator is divisible by p.
  FieldElement from_mpq(const mpq_class& v) const;

  /// Parses an integer or `a/b`; over F_p the value is reduced mod p.
  FieldElement parse_scalar(std::string_view text) const;

  /// "Q" or "F <p>", the same spelling the input grammar accepts.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
  friend auto operator<=>(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_;
  std::uint64_t characteristic_;
};

/// An exact scalar in canonical form: a reduced fraction with positive
/// denominator over Q, the least nonnegative residue over F_p.
class FieldElement {
 public:
  FieldElement() : FieldElement(Field::rationals().zero()) {}

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only valid over F_p.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical total order: by residue over F_p, numerically over Q.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// True for a negative rational; never over F_p.
  bool is_negative() const;

  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(Field f, std::uint64_t r) : field_(f), value_(r) {}
  FieldElement(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  void require_same_field(const FieldElement& other, const char* op) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace kcomm
