#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

using Scalar = Rational;
using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals.  Vectors are rows and
/// matrices act on the right, so a linear map V -> W with dim V = m and
/// dim W = n is an m x n matrix.  Zero-sized shapes are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] Vector row_vector(std::size_t r) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix submatrix_cols(std::span<const std::size_t> cols) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// v * m for a row vector v.
Vector multiply(std::span<const Scalar> v, const Matrix& m);
bool is_zero(std::span<const Scalar> v);
/// dst += c * src
void axpy(std::span<Scalar> dst, const Scalar& c, std::span<const Scalar> src);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form; pivots lists the pivot column of each nonzero row.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of the right null space {v : m * v^T = 0}.  Each basis
/// vector has a 1 in its own free column and 0 in every other free column.
Matrix kernel_basis(const Matrix& m);
struct KernelResult {
  Matrix basis;
  std::vector<std::size_t> free_columns;
};
/// kernel_basis together with its free columns.  The coordinates of a
/// null vector in the basis are its entries in the free columns.
KernelResult kernel_with_free_columns(const Matrix& m);

/// Rows form a basis of {x : x * m = 0}, the kernel of the map v -> v m.
Matrix left_kernel_basis(const Matrix& m);

/// Exact coefficients c with sum c_i basis_i = target, or nullopt when the
/// target is outside the span.  The basis must be linearly independent.
std::optional<Vector> coefficients_in_span(std::span<const Vector> basis,
                                           std::span<const Scalar> target);

Matrix block_diagonal(std::span<const Matrix> blocks);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/// A subspace of K^n held as a basis in reduced row echelon form.  Because
/// the basis is reduced, the coordinates of a member are just its entries in
/// the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  /// Span of the rows of `generators` (dependent rows are fine).
  static Subspace span(const Matrix& generators);

  [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return pivots_.size(); }
  [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] bool contains(std::span<const Scalar> v) const;
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// v minus its component along the pivot columns; zero iff v is a member.
  [[nodiscard]] Vector reduce(std::span<const Scalar> v) const;
  /// Unit vectors e_j for the non-pivot columns j, which complete the basis.
  [[nodiscard]] std::vector<std::size_t> complement_columns() const;

  [[nodiscard]] Subspace intersect(const Subspace& other) const;
  [[nodiscard]] Subspace sum(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown span that remembers how each of its echelon rows was
/// made from the vectors inserted so far, so membership queries also return
/// coefficients over the inserted vectors.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient) : ambient_(ambient) {}

  [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t size() const noexcept { return inserted_; }

  /// Coefficients over the inserted vectors, or nullopt if v is not in the span.
  [[nodiscard]] std::optional<Vector> express(std::span<const Scalar> v) const;
  /// Inserts v if it is independent of the current span; returns whether it was.
  bool insert(std::span<const Scalar> v);

 private:
  struct Row {
    Vector values;
    std::size_t pivot;
    Vector combination;
  };
  void reduce(Vector& v, Vector& combination) const;

  std::size_t ambient_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace qalg
