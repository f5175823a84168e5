#pragma once

// Exact vectors and matrices over a FieldSpec, with reduced row echelon
// form, kernels, relation spaces, inversion and determinants. All values
// are immutable after construction and every operation is a pure function.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permext/error.hpp"
#include "permext/field.hpp"

namespace permext {

class Vector {
 public:
  Vector(FieldSpec field, std::vector<Scalar> coords)
      : field_(field), coords_(std::move(coords)) {
    for (const Scalar& c : coords_)
      if (c.field() != field_)
        throw FieldMismatchError("vector coordinate over " + c.field().to_string() +
                                 " in vector over " + field_.to_string());
  }

  static Vector zero(FieldSpec f, std::size_t n) {
    return Vector(f, std::vector<Scalar>(n, Scalar::zero(f)));
  }

  /// Standard basis vector e_i.
  static Vector unit(FieldSpec f, std::size_t n, std::size_t i) {
    if (i >= n) throw DimensionError("unit vector index out of range");
    std::vector<Scalar> c(n, Scalar::zero(f));
    c[i] = Scalar::one(f);
    return Vector(f, std::move(c));
  }

  /// Convenience: build from small integers.
  static Vector from_ints(FieldSpec f, const std::vector<long>& values) {
    std::vector<Scalar> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(f, v);
    return Vector(f, std::move(c));
  }

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const {
    for (const Scalar& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  Vector operator+(const Vector& o) const {
    require_compatible(o);
    std::vector<Scalar> c;
    c.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) c.push_back(coords_[i] + o.coords_[i]);
    return Vector(field_, std::move(c));
  }

  Vector operator-(const Vector& o) const {
    require_compatible(o);
    std::vector<Scalar> c;
    c.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) c.push_back(coords_[i] - o.coords_[i]);
    return Vector(field_, std::move(c));
  }

  Vector operator-() const {
    std::vector<Scalar> c;
    c.reserve(size());
    for (const Scalar& x : coords_) c.push_back(-x);
    return Vector(field_, std::move(c));
  }

  friend Vector operator*(const Scalar& a, const Vector& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const Scalar& x : v.coords_) c.push_back(a * x);
    return Vector(v.field_, std::move(c));
  }

  bool operator==(const Vector& o) const {
    return field_ == o.field_ && coords_ == o.coords_;
  }
  bool operator!=(const Vector& o) const { return !(*this == o); }

  static int compare(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = Scalar::compare(a[i], b[i]); c != 0) return c;
    return 0;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].to_string();
    }
    return s + ")";
  }

 private:
  void require_compatible(const Vector& o) const {
    if (field_ != o.field_) throw FieldMismatchError("vector fields differ");
    if (size() != o.size()) throw DimensionError("vector lengths differ");
  }

  FieldSpec field_;
  std::vector<Scalar> coords_;
};

/// Dense row-major matrix; rectangular shapes are allowed, the square
/// invariant is enforced only by the operations that need it.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        entries_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(FieldSpec f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
  }

  static Matrix from_rows(FieldSpec f, const std::vector<Vector>& rows) {
    if (rows.empty()) throw DimensionError("from_rows: no rows");
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static Matrix from_columns(FieldSpec f, const std::vector<Vector>& cols) {
    if (cols.empty()) throw DimensionError("from_columns: no columns");
    Matrix m(f, cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionError("from_columns: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
  }

  static Matrix from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows) {
    std::vector<Vector> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) vs.push_back(Vector::from_ints(f, r));
    return from_rows(f, vs);
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) {
    if (v.field() != field_) throw FieldMismatchError("matrix entry field differs");
    entries_[i * cols_ + j] = std::move(v);
  }

  Vector row(std::size_t i) const {
    std::vector<Scalar> c(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return Vector(field_, std::move(c));
  }

  Vector column(std::size_t j) const {
    std::vector<Scalar> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return Vector(field_, std::move(c));
  }

  Matrix operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError("matrix product fields differ");
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
        r.set(i, j, std::move(acc));
      }
    return r;
  }

  Vector operator*(const Vector& v) const {
    if (field_ != v.field()) throw FieldMismatchError("matrix-vector fields differ");
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * v[k];
      c.push_back(std::move(acc));
    }
    return Vector(field_, std::move(c));
  }

  friend Matrix operator*(const Scalar& a, const Matrix& m) {
    Matrix r(m.field_, m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) r.set(i, j, a * m.at(i, j));
    return r;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  static int compare(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (int c = Scalar::compare(a.entries_[i], b.entries_[i]); c != 0) return c;
    return 0;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      s += row(i).to_string();
    }
    return s + "]";
  }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const {
    return Matrix::compare(a, b) < 0;
  }
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Pivoting scans top-to-bottom within a column,
/// columns left-to-right; exact arithmetic needs no magnitude strategy.
inline RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  RrefResult out{a, 0, {}};
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
      }
    const Scalar inv = a.at(r, col).inverse();
    for (std::size_t j = col; j < cols; ++j) a.set(r, j, inv * a.at(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      const Scalar factor = a.at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        a.set(i, j, a.at(i, j) - factor * a.at(r, j));
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(a);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of {c : m c = 0}; empty iff the columns are independent.
/// One basis vector per free column, free columns in ascending order.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> c(cols, Scalar::zero(m.field()));
    c[f] = Scalar::one(m.field());
    for (std::size_t t = 0; t < rr.pivot_columns.size(); ++t)
      c[rr.pivot_columns[t]] = -rr.reduced.at(t, f);
    basis.emplace_back(m.field(), std::move(c));
  }
  return basis;
}

/// Basis of the relation space {c : sum_i c_i xs_i = 0}.
inline std::vector<Vector> relation_space(const std::vector<Vector>& xs) {
  if (xs.empty()) throw DimensionError("relation_space: empty input");
  return kernel_basis(Matrix::from_columns(xs[0].field(), xs));
}

/// One exact solution of a x = b if the system is consistent (free
/// variables are set to zero), otherwise nullopt.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.field() != b.field()) throw FieldMismatchError("solve: fields differ");
  if (a.rows() != b.size()) throw DimensionError("solve: shape mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  const RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_columns)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t t = 0; t < rr.pivot_columns.size(); ++t)
    x[rr.pivot_columns[t]] = rr.reduced.at(t, a.cols());
  return Vector(a.field(), std::move(x));
}

/// Exact inverse, or nullopt when singular.
inline std::optional<Matrix> invert(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("invert: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, Scalar::one(m.field()));
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.reduced.at(i, n + j));
  return inv;
}

inline Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar tmp = a.at(col, j);
        a.set(col, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
      }
      det = -det;
    }
    det = det * a.at(col, col);
    const Scalar inv = a.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Scalar factor = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        a.set(i, j, a.at(i, j) - factor * a.at(col, j));
    }
  }
  return det;
}

/// Rank of the span of `vectors` (empty span has rank 0).
inline std::size_t span_rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(vectors[0].field(), vectors));
}

}  // namespace permext
