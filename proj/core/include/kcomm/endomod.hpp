#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcomm/factor.hpp"
#include "kcomm/ideal.hpp"
#include "kcomm/linalg.hpp"

namespace kcomm {

/// Raised by make_tuple when two of the matrices do not commute.
class CommutationError : public std::invalid_argument {
 public:
  CommutationError(std::size_t i, std::size_t j)
      : std::invalid_argument("matrices " + std::to_string(i) + " and " + std::to_string(j) + " do not commute"),
        first(i),
        second(j) {}

  std::size_t first;
  std::size_t second;
};

class NotInvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotLocalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite-dimensional k-vector space with n pairwise commuting
/// endomorphisms, i.e. a k[t1..tn]-module of finite k-dimension.
class CommutingTuple {
 public:
  /// Checks shapes, fields and pairwise commutation.
  static CommutingTuple make(Field field, std::size_t nvars, std::size_t dim, std::vector<Matrix> mats);
  /// Zero-dimensional module.
  static CommutingTuple zero(Field field, std::size_t nvars);
  static CommutingTuple block_diagonal(const CommutingTuple& a, const CommutingTuple& b);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return mats_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& mats() const { return mats_; }
  const Matrix& mat(std::size_t i) const { return mats_.at(i); }

  friend bool operator==(const CommutingTuple&, const CommutingTuple&) = default;

 private:
  CommutingTuple(Field field, std::size_t dim, std::vector<Matrix> mats)
      : field_(field), dim_(dim), mats_(std::move(mats)) {}

  Field field_;
  std::size_t dim_;
  std::vector<Matrix> mats_;
};

/// A subspace of the tuple's space that every matrix maps into itself.
class InvariantSubmodule {
 public:
  /// Throws NotInvariantError unless every matrix preserves `space`.
  static InvariantSubmodule make(const CommutingTuple& t, Subspace space);

  std::size_t parent_dim() const { return space_.ambient_dim(); }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }

  friend bool operator==(const InvariantSubmodule&, const InvariantSubmodule&) = default;

 private:
  explicit InvariantSubmodule(Subspace space) : space_(std::move(space)) {}

  Subspace space_;
};

/// Smallest invariant subspace containing `vectors`.
InvariantSubmodule generated_submodule(const CommutingTuple& t, const std::vector<Vector>& vectors);

/// Induced action on the submodule, in the coordinates of its echelon basis.
CommutingTuple restrict_to(const CommutingTuple& t, const InvariantSubmodule& s);
/// Induced action on V/S, using the non-pivot unit vectors of S's echelon
/// basis as the complement.
CommutingTuple quotient_by(const CommutingTuple& t, const InvariantSubmodule& s);

/// Kernel of the evaluation map k[T] -> k[f1..fn], found by walking the
/// monomials in increasing order and recording the first linear relation
/// each non-standard monomial satisfies.
Ideal annihilator_ideal(const CommutingTuple& t);

/// Jac(R) * V for R = k[T]/Ann(V), computed as the sum of the images of
/// s_i(f_i) with s_i the squarefree part of the minimal polynomial of f_i.
InvariantSubmodule radical_submodule(const CommutingTuple& t);

/// The semisimple layers rad^j V / rad^(j+1) V, top layer first.
std::vector<CommutingTuple> radical_filtration(const CommutingTuple& t);

/// Key of the unique maximal ideal containing Ann(V) for a local tuple.
/// Throws NotLocalError for a tuple supported at more than one maximal ideal.
MaximalIdealKey maximal_ideal_key(const CommutingTuple& t, Rng& rng);
MaximalIdealKey maximal_ideal_key(const CommutingTuple& t);

struct PrimaryComponent {
  InvariantSubmodule submodule;
  CommutingTuple action;
  MaximalIdealKey key;
};

/// V = W_1 + ... + W_r with each W_j supported at a single maximal ideal.
/// Components are sorted by key.
std::vector<PrimaryComponent> primary_decomposition(const CommutingTuple& t, Rng& rng);
std::vector<PrimaryComponent> primary_decomposition(const CommutingTuple& t);

namespace detail {

/// For the semisimple tuple `ss` with annihilator `ann`, returns a
/// polynomial whose action on ss has at least two distinct irreducible
/// factors in its minimal polynomial, or nullopt when k[T]/ann is a field.
std::optional<MultiPoly> splitting_element(const CommutingTuple& ss, const Ideal& ann, Rng& rng);

}  // namespace detail

}  // namespace kcomm
