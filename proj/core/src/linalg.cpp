#include "kcomm/linalg.hpp"

#include <map>
#include <sstream>

namespace kcomm {

Vector zero_vector(const Field& k, std::size_t n) { return Vector(n, k.zero()); }

Vector unit_vector(const Field& k, std::size_t n, std::size_t i) {
  Vector v = zero_vector(k, n);
  v.at(i) = k.one();
  return v;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::companion(const UniPoly& q) {
  if (!q.is_monic() || q.degree() < 1) throw PolyError("companion matrix needs a monic polynomial of degree >= 1");
  const auto d = static_cast<std::size_t>(q.degree());
  Matrix m(q.field(), d, d);
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = q.field().one();
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -q.coeff(static_cast<int>(i));
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldError("mixed-field block diagonal");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool Matrix::is_zero() const { return is_zero_vector(data_); }

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::pow(unsigned e) const {
  if (!is_square()) throw DimensionError("power of a non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return acc;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const FieldElement& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldError("mixed-field matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  if (rows_ == 0) return "[[]]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) os << ';';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    }
    const FieldElement inv = r(row, col).inv();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const FieldElement f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel_basis(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  const Field& k = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(k, m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(k, m.cols(), vecs);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  Matrix m(field, vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  auto [r, pivots] = rref(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(r.row(i));
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) e.push_back(unit_vector(field, ambient_dim, i));
  return span(field, ambient_dim, e);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector length does not match ambient dimension");
  Vector w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) w[j] -= c * basis_[i][j];
  }
  return w;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DimensionError("vector is not in the subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_dim_, all);
}

// ---------------------------------------------------------------------------
// EchelonBasis

std::pair<Vector, Vector> EchelonBasis::reduce(const Vector& v) const {
  if (v.size() != length_) throw DimensionError("vector length does not match echelon basis");
  Vector w = v;
  Vector expr = zero_vector(field_, rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const FieldElement c = w[pivots_[j]];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < length_; ++i) w[i] -= c * rows_[j][i];
    for (std::size_t i = 0; i < combos_[j].size(); ++i) expr[i] += c * combos_[j][i];
  }
  return {std::move(w), std::move(expr)};
}

std::optional<Vector> EchelonBasis::express(const Vector& v) const {
  auto [w, expr] = reduce(v);
  if (!is_zero_vector(w)) return std::nullopt;
  return expr;
}

std::optional<Vector> EchelonBasis::insert_or_express(const Vector& v) {
  auto [w, expr] = reduce(v);
  if (is_zero_vector(w)) return expr;
  std::size_t piv = 0;
  while (w[piv].is_zero()) ++piv;
  const FieldElement inv = w[piv].inv();
  for (auto& x : w) x *= inv;
  // w_before_scaling = v - sum expr_k inserted_k, with v the new inserted vector.
  Vector combo = zero_vector(field_, rows_.size() + 1);
  for (std::size_t i = 0; i < expr.size(); ++i) combo[i] = -expr[i] * inv;
  combo.back() = inv;
  rows_.push_back(std::move(w));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polynomials of matrices

UniPoly charpoly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const Field& k = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t sel = piv_row;
    while (sel < n && h(sel, col).is_zero()) ++sel;
    if (sel == n) continue;
    if (sel != piv_row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(piv_row, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, piv_row));
    }
    const FieldElement inv = h(piv_row, col).inv();
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const FieldElement u = h(r, col) * inv;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(piv_row, j);
      for (std::size_t i = 0; i < n; ++i) h(i, piv_row) += u * h(i, r);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}  (1-based)
  const UniPoly x = UniPoly::monomial(k.one(), 1);
  std::vector<UniPoly> p{UniPoly::constant(k.one())};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    UniPoly next = (x - UniPoly::constant(h(mm - 1, mm - 1))) * p[mm - 1];
    FieldElement t = k.one();
    for (std::size_t i = mm - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t.is_zero()) break;
      next -= p[i - 1] * (h(i - 1, mm - 1) * t);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

FieldElement determinant(const Matrix& m) {
  const UniPoly c = charpoly(m);
  // det(m) = (-1)^n c(0)
  const FieldElement c0 = c.constant_term();
  return m.rows() % 2 == 0 ? c0 : -c0;
}

UniPoly minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  const Field& k = m.field();
  const std::size_t n = m.rows();
  UniPoly acc = UniPoly::constant(k.one());
  for (std::size_t i = 0; i < n; ++i) {
    EchelonBasis krylov(k, n);
    Vector v = unit_vector(k, n, i);
    for (;;) {
      auto dep = krylov.insert_or_express(v);
      if (dep) {
        // A^j e_i = sum c_l A^l e_i
        std::vector<FieldElement> coeffs(dep->size() + 1, k.zero());
        for (std::size_t l = 0; l < dep->size(); ++l) coeffs[l] = -(*dep)[l];
        coeffs.back() = k.one();
        acc = lcm(acc, UniPoly(k, std::move(coeffs)));
        break;
      }
      v = m.apply(v);
    }
  }
  return acc;
}

Matrix eval_poly_at_matrix(const UniPoly& q, const Matrix& m) {
  if (!m.is_square()) throw DimensionError("polynomial evaluated at a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (int i = q.degree(); i >= 0; --i) acc = acc * m + id * q.coeff(i);
  return acc;
}

Matrix eval_poly_at_matrix(const MultiPoly& q, std::span<const Matrix> ms) {
  if (ms.size() != q.nvars()) throw DimensionError("need one matrix per variable");
  const Field& k = q.field();
  std::size_t d = 0;
  if (!ms.empty()) {
    d = ms.front().rows();
    for (const auto& m : ms) {
      if (!m.is_square() || m.rows() != d) throw DimensionError("matrices must be square of equal size");
      if (m.field() != k) throw FieldError("matrix and polynomial fields differ");
    }
  }
  std::vector<std::map<std::uint32_t, Matrix>> powers(ms.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Matrix& {
    auto it = powers[var].find(e);
    if (it == powers[var].end()) it = powers[var].emplace(e, ms[var].pow(e)).first;
    return it->second;
  };
  Matrix acc(k, d, d);
  for (const auto& [mono, c] : q.terms()) {
    Matrix term = Matrix::identity(k, d) * c;
    for (std::size_t v = 0; v < mono.nvars(); ++v) {
      if (mono[v] != 0) term = term * power(v, mono[v]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace kcomm
