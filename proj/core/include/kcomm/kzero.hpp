#pragma once

#include <map>
#include <string>
#include <utility>

#include "kcomm/endomod.hpp"

namespace kcomm {

/// An element of the free abelian group on maximal ideals of k[t1..tn]:
/// a finitely supported map key -> nonzero integer.
class GrothendieckClass {
 public:
  using Support = std::map<MaximalIdealKey, long long>;

  GrothendieckClass(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  long long multiplicity(const MaximalIdealKey& key) const;

  /// Adds `mult` copies of [k[T]/key]; zero entries are pruned.
  void add(const MaximalIdealKey& key, long long mult);

  /// sum of multiplicity * residue degree; equals dim V for the class of V.
  long long total_dimension() const;
  /// True when every multiplicity is positive.
  bool is_effective() const;

  GrothendieckClass& operator+=(const GrothendieckClass& rhs);
  GrothendieckClass& operator-=(const GrothendieckClass& rhs);
  friend GrothendieckClass operator+(GrothendieckClass a, const GrothendieckClass& b) { return a += b; }
  friend GrothendieckClass operator-(GrothendieckClass a, const GrothendieckClass& b) { return a -= b; }
  friend bool operator==(const GrothendieckClass&, const GrothendieckClass&) = default;

  /// One "mult * [generators]" line per key in canonical order.
  std::string to_string() const;

 private:
  void require_compatible(const GrothendieckClass& other) const;

  Field field_;
  std::size_t nvars_;
  Support support_;
};

/// A reduced fraction num/den of polynomials with constant term 1: an
/// element of the multiplicative group of such rational functions.
class TildeClass {
 public:
  /// The identity 1/1.
  explicit TildeClass(Field field);
  /// Reduces num/den; both must have nonzero constant term. The fraction is
  /// rescaled so both constant terms are 1.
  TildeClass(UniPoly num, UniPoly den);
  static TildeClass from_polynomial(UniPoly num);

  const Field& field() const { return num_.field(); }
  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  TildeClass inverse() const;
  friend TildeClass operator*(const TildeClass& a, const TildeClass& b);
  friend bool operator==(const TildeClass&, const TildeClass&) = default;

  /// "1 + t" style text in ascending powers, "(num) / (den)" for proper fractions.
  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// Polynomial in `t` written in ascending powers: "1 + 2*t + t^2".
std::string ascending_string(const UniPoly& p);

/// The class of the module: sum over primary components W with key M of
/// (dim W / residue degree of M) copies of [M].
GrothendieckClass k0_class(const CommutingTuple& t, Rng& rng);
GrothendieckClass k0_class(const CommutingTuple& t);

/// det(1 + t f), i.e. the signed reversal of the characteristic polynomial.
UniPoly lambda_t(const Matrix& f);

struct KelleySpanierSplit {
  long long rank;
  TildeClass tilde;

  friend bool operator==(const KelleySpanierSplit&, const KelleySpanierSplit&) = default;
};

/// (dim V, lambda_t(f)/1) for a one-variable tuple.
KelleySpanierSplit kelley_spanier_split(const CommutingTuple& t);

/// Factors numerator and denominator; each factor r becomes the key of the
/// monic q with signed_reversal(q) = r. Never produces the key (t).
GrothendieckClass tilde_to_free_abelian(const TildeClass& a, Rng& rng);
GrothendieckClass tilde_to_free_abelian(const TildeClass& a);

/// Inverse of tilde_to_free_abelian. Requires one variable, principal keys
/// and (t) absent from the support.
TildeClass free_abelian_to_tilde(const GrothendieckClass& v);

/// Image of a one-variable class under [(t)] -> (1, 1), [M] -> (deg M, rev M).
KelleySpanierSplit comparison_image(const GrothendieckClass& c);

/// True iff kelley_spanier_split(t) equals comparison_image(k0_class(t)).
bool compare_splittings(const CommutingTuple& t, Rng& rng);
bool compare_splittings(const CommutingTuple& t);

/// True iff [V] = [S] + [V/S].
bool verify_additivity(const CommutingTuple& t, const InvariantSubmodule& s, Rng& rng);
bool verify_additivity(const CommutingTuple& t, const InvariantSubmodule& s);

}  // namespace kcomm
