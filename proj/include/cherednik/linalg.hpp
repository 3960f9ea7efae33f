#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cherednik/scalar.hpp"

namespace cherednik {

using Vec = std::vector<Scalar>;
/// Sparse vector keyed by basis index; no explicit zeros.
using SparseVec = std::map<std::size_t, Scalar>;

bool is_zero(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t dim);
SparseVec to_sparse(const Vec& v);
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

/// Dense matrix over Scalar, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& other) const = default;
  bool operator<(const Matrix& other) const;

  Scalar trace() const;
  bool is_identity() const;
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, in reduced echelon form.
  std::vector<Vec> nullspace() const;
  /// Throws DivisionByZero when singular.
  Matrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows);

/// A subspace of K^dim held as a reduced echelon basis.
///
/// reduce() maps a vector to its normal form modulo the subspace, which is zero
/// on every pivot column; the non-pivot columns coordinatize the quotient.
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Indices of non-pivot columns, ascending.
  std::vector<std::size_t> complement() const;

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns false when v was already in the span.
  bool insert(const Vec& v);

 private:
  std::size_t dim_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cherednik
