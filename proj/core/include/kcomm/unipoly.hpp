#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcomm/field.hpp"

namespace kcomm {

class PolyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial, coefficients stored low to high with no
/// trailing zeros. The zero polynomial has degree -1.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(field) {}
  UniPoly(Field field, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  /// c * t^n
  static UniPoly monomial(const FieldElement& c, int n);
  static UniPoly from_ints(Field field, const std::vector<long long>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;
  /// Fails on the zero polynomial.
  const FieldElement& leading() const;
  FieldElement constant_term() const { return coeff(0); }

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement operator()(const FieldElement& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const FieldElement& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const FieldElement& s) { return a *= s; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly pow(unsigned e) const;

  /// Canonical order: degree first, then coefficients from the leading
  /// one downward.
  friend std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b);

  /// Human-readable rendering in `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  void require_same_field(const UniPoly& other) const;

  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder with f = q*g + r, deg r < deg g.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly operator%(const UniPoly& f, const UniPoly& g);
UniPoly operator/(const UniPoly& f, const UniPoly& g);

/// Monic gcd; gcd(f, 0) = monic(f). Both zero is an error.
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly lcm(const UniPoly& f, const UniPoly& g);

struct ExtendedGcd {
  UniPoly gcd;
  UniPoly s;
  UniPoly t;
};
/// s*f + t*g = gcd with gcd monic.
ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g);

/// base^e mod m, with e given as a GMP integer so q^d exponents fit.
UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& m);

/// q(t) -> (-1)^deg q * t^deg q * q(-1/t). Requires q monic.
UniPoly signed_reversal(const UniPoly& q);
/// Inverse of signed_reversal on inputs with constant term 1: returns the
/// monic polynomial of the same degree.
UniPoly signed_reversal_inverse(const UniPoly& r);

}  // namespace kcomm
