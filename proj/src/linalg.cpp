#include "cherednik/linalg.hpp"

#include <algorithm>

#include "cherednik/errors.hpp"

namespace cherednik {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim);
  for (const auto& [k, s] : v) out.at(k) = s;
  return out;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out.emplace(k, v[k]);
  }
  return out;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, s] : x) {
    auto [it, inserted] = y.try_emplace(k, a * s);
    if (!inserted) {
      it->second += a * s;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Scalar& b = other(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::operator<(const Matrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return std::lexicographical_compare(data_.begin(), data_.end(), other.data_.begin(), other.data_.end());
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::vector<std::size_t> rref(std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = rows[r][c].inv();
    for (std::size_t k = c; k < cols; ++k) {
      if (!rows[r][k].is_zero()) rows[r][k] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t Matrix::rank() const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
  return rref(rows).size();
}

std::vector<Vec> Matrix::nullspace() const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
  const auto pivots = rref(rows);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DivisionByZero("non-square matrix has no inverse");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rows_; ++r) {
    Vec v = row(r);
    v.resize(2 * cols_);
    v[cols_ + r] = Scalar(1);
    rows.push_back(std::move(v));
  }
  const auto pivots = rref(rows);
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw DivisionByZero("singular matrix");
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = rows[r][cols_ + c];
  }
  return out;
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = pivots_[i]; k < dim_; ++k) {
      if (!basis_[i][k].is_zero()) v[k] -= f * basis_[i][k];
    }
  }
  return v;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && r[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  const Scalar inv = r[pivot].inv();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  // Clear the new pivot column from existing rows to stay reduced.
  for (auto& row : basis_) {
    const Scalar f = row[pivot];
    if (f.is_zero()) continue;
    for (std::size_t k = pivot; k < dim_; ++k) {
      if (!r[k].is_zero()) row[k] -= f * r[k];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

}  // namespace cherednik
