#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcomm/field.hpp"
#include "kcomm/multipoly.hpp"
#include "kcomm/unipoly.hpp"

namespace kcomm {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& k, std::size_t n);
Vector unit_vector(const Field& k, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  /// Companion matrix of a monic q: ones on the subdiagonal, -q_i in the
  /// last column. Its characteristic and minimal polynomial are q.
  static Matrix companion(const UniPoly& q);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);
  /// Matrix with the given vectors as columns.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  /// Row-major entries, used to treat a matrix as a vector of length rows*cols.
  const std::vector<FieldElement>& entries() const { return data_; }

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix pow(unsigned e) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const FieldElement& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const FieldElement& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// "[[a,b];[c,d]]"; the 0x0 matrix renders as "[[]]".
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// A subspace of k^n stored by its unique reduced echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(Field field, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the basis; zero iff v is in the subspace.
  /// The result vanishes at every pivot coordinate.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
  /// Coordinates of a member vector in the echelon basis.
  Vector coordinates(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Field field_;
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Right null space.
Subspace kernel_basis(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);

/// det(xI - m) via reduction to Hessenberg form.
UniPoly charpoly(const Matrix& m);
FieldElement determinant(const Matrix& m);
/// Least-degree monic q with q(m) = 0, as the lcm of Krylov annihilators.
UniPoly minimal_polynomial(const Matrix& m);

Matrix eval_poly_at_matrix(const UniPoly& q, const Matrix& m);
/// q(m_1, ..., m_n); the matrices must commute for this to be a ring map.
Matrix eval_poly_at_matrix(const MultiPoly& q, std::span<const Matrix> ms);

/// Incremental echelon basis that remembers how each stored row was built
/// from the inserted vectors, so dependencies come out as explicit
/// linear combinations.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t length) : field_(field), length_(length) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t length() const { return length_; }

  /// If v is a combination of the vectors inserted so far, returns the
  /// coefficients c with v = sum c_j inserted_j and leaves the basis
  /// unchanged. Otherwise inserts v and returns nullopt.
  std::optional<Vector> insert_or_express(const Vector& v);
  std::optional<Vector> express(const Vector& v) const;

 private:
  // Reduced vector and the combination of inserted vectors it equals,
  // negated relative to v.
  std::pair<Vector, Vector> reduce(const Vector& v) const;

  Field field_;
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kcomm
