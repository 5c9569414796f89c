#pragma once

#include <string>
#include <vector>

#include "kcomm/multipoly.hpp"

namespace kcomm {

/// A zero-dimensional ideal of k[t1..tn] held as its reduced Groebner
/// basis in the global monomial order, together with the standard
/// monomials that form a basis of the quotient algebra.
///
/// Generators are monic and sorted by descending leading monomial; two
/// ideals are equal exactly when their generator lists are.
class Ideal {
 public:
  /// The unit ideal (1), whose quotient is zero.
  static Ideal unit(Field field, std::size_t nvars);

  /// Validates that `gens` is a reduced Groebner basis of a zero-dimensional
  /// ideal (after making each generator monic and sorting) and enumerates
  /// the standard monomials. Throws PolyError otherwise.
  static Ideal from_reduced_basis(Field field, std::size_t nvars, std::vector<MultiPoly> gens);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  /// Ascending in the monomial order; starts with 1 unless the ideal is the unit ideal.
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  std::size_t quotient_dimension() const { return standard_.size(); }
  bool is_unit() const { return standard_.empty(); }

  MultiPoly reduce(const MultiPoly& p) const { return normal_form(p, gens_); }
  bool contains(const MultiPoly& p) const { return reduce(p).is_zero(); }

  /// Canonical generator renderings, in order.
  std::vector<std::string> generator_strings() const;
  /// "t1, t2" style comma-separated generators.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.field_ == b.field_ && a.gens_ == b.gens_; }

 private:
  Ideal(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  Field field_;
  std::size_t nvars_;
  std::vector<MultiPoly> gens_;
  std::vector<Monomial> standard_;
};

/// A maximal ideal M, identified by its reduced Groebner basis, with the
/// degree of its residue field k[T]/M over k.
class MaximalIdealKey {
 public:
  /// Trusts that `ideal` is maximal; production code only builds keys from
  /// annihilators of semisimple local modules.
  explicit MaximalIdealKey(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  std::size_t residue_degree() const { return ideal_.quotient_dimension(); }
  /// "[t1, t2]"
  std::string to_string() const;

  friend bool operator==(const MaximalIdealKey& a, const MaximalIdealKey& b) { return a.ideal_ == b.ideal_; }
  /// Canonical order: residue degree, then generator renderings lexicographically.
  friend std::strong_ordering operator<=>(const MaximalIdealKey& a, const MaximalIdealKey& b);

 private:
  Ideal ideal_;
  std::vector<std::string> rendered_;
};

}  // namespace kcomm
