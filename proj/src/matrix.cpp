#include "qalg/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace qalg {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto rw = row(r);
  return {rw.begin(), rw.end()};
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::submatrix_cols(std::span<const std::size_t> cols) const {
  Matrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = (*this)(r, cols[j]);
  }
  return s;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      axpy(dst, a, rhs.row(k));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Vector multiply(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vector-matrix shape mismatch");
  Vector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    axpy(out, v[k], m.row(k));
  }
  return out;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(std::span<Scalar> dst, const Scalar& c, std::span<const Scalar> src) {
  if (c.is_zero()) return;
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (!src[j].is_zero()) dst[j].add_product(c, src[j]);
  }
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(lead_row, j));
    }
    Scalar inv = m(lead_row, c).inverse();
    if (!inv.is_one()) {
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
      }
    }
    auto pivot_row = m.row(lead_row);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar f = -m(r, c);
      axpy(m.row(r).subspan(c), f, pivot_row.subspan(c));
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // eliminate along the shorter side
  if (m.rows() > m.cols()) return rref(m.transpose()).rank();
  return rref(m).rank();
}

Matrix kernel_basis(const Matrix& m) { return kernel_with_free_columns(m).basis; }

KernelResult kernel_with_free_columns(const Matrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix basis(free.size(), n);
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(k, free[k]) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Scalar& x = r.reduced(i, free[k]);
      if (!x.is_zero()) basis(k, r.pivots[i]) = -x;
    }
  }
  return {std::move(basis), std::move(free)};
}

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

std::optional<Vector> coefficients_in_span(std::span<const Vector> basis,
                                           std::span<const Scalar> target) {
  for (const auto& b : basis) {
    if (b.size() != target.size()) throw DimensionError("coefficients_in_span: ambient mismatch");
  }
  IncrementalSpan span(target.size());
  for (const auto& b : basis) {
    if (!span.insert(b)) throw std::invalid_argument("coefficients_in_span: dependent basis");
  }
  return span.express(target);
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionError("block_diagonal: non-square block");
    n += b.rows();
  }
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    }
    off += b.rows();
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

Scalar determinant(Matrix m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = -(m(r, c) * inv);
      axpy(m.row(r).subspan(c), f, m.row(c).subspan(c));
    }
  }
  return det;
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.cols());
  auto r = rref(generators);
  s.pivots_ = r.pivots;
  s.basis_ = Matrix(r.rank(), generators.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), s.basis_.row(i).begin());
  }
  return s;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: ambient mismatch");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    axpy(out, -c, basis_.row(i));
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!is_pivot[j]) out.push_back(j);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace sum: ambient mismatch");
  Matrix g(dim() + other.dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    std::copy(basis_.row(i).begin(), basis_.row(i).end(), g.row(i).begin());
  }
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::copy(other.basis_.row(i).begin(), other.basis_.row(i).end(), g.row(dim() + i).begin());
  }
  return span(g);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace intersection: ambient mismatch");
  // x*B1 = y*B2  <=>  (x, -y) in the left kernel of [B1; B2]
  const std::size_t a = dim(), b = other.dim();
  Matrix stacked(a + b, ambient_);
  for (std::size_t i = 0; i < a; ++i) {
    std::copy(basis_.row(i).begin(), basis_.row(i).end(), stacked.row(i).begin());
  }
  for (std::size_t i = 0; i < b; ++i) {
    std::copy(other.basis_.row(i).begin(), other.basis_.row(i).end(), stacked.row(a + i).begin());
  }
  Matrix k = left_kernel_basis(stacked);
  Matrix gens(k.rows(), ambient_);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    for (std::size_t i = 0; i < a; ++i) {
      if (!k(r, i).is_zero()) axpy(gens.row(r), k(r, i), basis_.row(i));
    }
  }
  return span(gens);
}

void IncrementalSpan::reduce(Vector& v, Vector& combination) const {
  for (const auto& row : rows_) {
    Scalar c = v[row.pivot];
    if (c.is_zero()) continue;
    axpy(v, -c, row.values);
    axpy(combination, -c, row.combination);
  }
}

std::optional<Vector> IncrementalSpan::express(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("span: ambient mismatch");
  Vector work(v.begin(), v.end());
  Vector combination(inserted_);
  reduce(work, combination);
  if (!is_zero(work)) return std::nullopt;
  // v - sum(...) = 0 was tracked with negated coefficients
  for (auto& c : combination) c = -c;
  return combination;
}

bool IncrementalSpan::insert(std::span<const Scalar> v) {
  if (v.size() != ambient_) throw DimensionError("span: ambient mismatch");
  Vector work(v.begin(), v.end());
  Vector combination(inserted_ + 1);
  combination[inserted_] = 1;
  for (auto& row : rows_) row.combination.resize(inserted_ + 1);
  reduce(work, combination);
  auto it = std::find_if(work.begin(), work.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == work.end()) {
    for (auto& row : rows_) row.combination.resize(inserted_);
    return false;
  }
  std::size_t pivot = static_cast<std::size_t>(it - work.begin());
  Scalar inv = it->inverse();
  for (auto& x : work) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& x : combination) {
    if (!x.is_zero()) x *= inv;
  }
  rows_.push_back({std::move(work), pivot, std::move(combination)});
  ++inserted_;
  return true;
}

}  // namespace qalg
