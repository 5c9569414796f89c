#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kcomm/field.hpp"
#include "kcomm/unipoly.hpp"

namespace kcomm {

/// Exponent vector of t1..tn. Ordered graded-lexicographically with
/// t1 > t2 > ... > tn, the single monomial order used everywhere.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  /// "1", "t", "t1^2*t3", ...
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Name of variable i (0-based) in an n-variable ring: `t` when n = 1,
/// otherwise `t1`..`tn`.
std::string variable_name(std::size_t nvars, std::size_t i);

/// Sparse polynomial in k[t1..tn]. Terms are kept in descending monomial
/// order with no zero coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, FieldElement, std::greater<>>;

  MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(Field field, std::size_t nvars, const FieldElement& c);
  static MultiPoly term(const FieldElement& c, const Monomial& m);
  static MultiPoly variable(Field field, std::size_t nvars, std::size_t i);
  static MultiPoly from_unipoly(const UniPoly& p);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Leading term in the monomial order. Fails on zero.
  const Monomial& leading_monomial() const;
  const FieldElement& leading_coefficient() const;
  FieldElement coeff(const Monomial& m) const;
  std::uint64_t total_degree() const;

  MultiPoly monic() const;
  /// The same polynomial in k[t], when only t1 occurs (nvars must be 1).
  UniPoly to_unipoly() const;

  void add_term(const FieldElement& c, const Monomial& m);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const FieldElement& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElement& s) { return a *= s; }

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Canonical rendering, e.g. "t1^2 + 2*t1*t2 - 1/2".
  std::string to_string() const;

 private:
  void require_compatible(const MultiPoly& other) const;

  Field field_;
  std::size_t nvars_;
  Terms terms_;
};

/// Remainder of p under multivariate division by `basis` in the monomial
/// order: no term of the result is divisible by a basis leading monomial.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

}  // namespace kcomm
