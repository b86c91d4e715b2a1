#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qalg/representation.hpp"

namespace qalg {

/// End(m) as an algebra.  Elements are coordinate vectors over the Hom basis;
/// the product x * y is "x, then y", i.e. the product of total matrices.
class EndStructure {
 public:
  explicit EndStructure(const Representation& m);

  [[nodiscard]] const Representation& module() const noexcept { return module_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return totals_.size(); }
  [[nodiscard]] const std::vector<ModuleHom>& basis() const noexcept { return homs_.basis(); }
  [[nodiscard]] const HomSpace& hom_space() const noexcept { return homs_; }
  /// Total (block-diagonal) matrix of each basis element.
  [[nodiscard]] const std::vector<Matrix>& totals() const noexcept { return totals_; }

  [[nodiscard]] Matrix total(std::span<const Scalar> x) const;
  /// Coordinates of an endomorphism given by its total matrix.
  [[nodiscard]] Vector coordinates(const Matrix& total) const;
  [[nodiscard]] Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  [[nodiscard]] Vector basis_product(std::size_t i, std::size_t j) const;
  [[nodiscard]] const Vector& one() const noexcept { return one_; }

  /// Radical, from the kernel of the trace form of the left-regular representation.
  [[nodiscard]] const Subspace& radical() const noexcept { return radical_; }
  [[nodiscard]] const Subspace& radical_squared() const noexcept { return radical_squared_; }
  /// Generators of the radical as a left ideal.
  [[nodiscard]] const std::vector<Vector>& radical_generators() const noexcept { return rad_gens_; }
  /// Smallest k with rad^k = 0.
  [[nodiscard]] std::size_t nilpotency_index() const noexcept { return nilpotency_; }
  /// Gram matrix of (x, y) -> trace of left multiplication by x y.
  [[nodiscard]] const Matrix& trace_form() const noexcept { return gram_; }

 private:
  Scalar product_coefficient(const Matrix& x, const Matrix& y, std::size_t f) const;
  Subspace left_ideal_products(const Matrix& left_rows, const std::vector<Vector>& right) const;

  Representation module_;
  HomSpace homs_;
  std::vector<Matrix> totals_;
  // coordinate f of an endomorphism is its entry (coord_row_[f], coord_col_[f])
  std::vector<std::size_t> coord_row_;
  std::vector<std::size_t> coord_col_;
  Vector one_;
  Matrix gram_;
  Subspace radical_;
  Subspace radical_squared_;
  std::vector<Vector> rad_gens_;
  std::size_t nilpotency_ = 0;
};

/// Radical of End(m) from the trace form of m itself (a faithful
/// representation), for cross-checking EndStructure::radical.
Subspace radical_by_module_trace(const EndStructure& e);

class DecompositionInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Summand {
  Representation module;
  Matrix idempotent;  ///< total matrix
  Vector coordinates;  ///< idempotent in End coordinates
  ModuleHom injection;
  ModuleHom projection;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  /// Random elements tried per corner after the basis elements fail to split it.
  std::size_t random_attempts = 32;
};

/// Splits m into indecomposable summands with a complete set of orthogonal
/// primitive idempotents of End(m).  A corner eEe is accepted as local when
/// eEe / e rad e is one-dimensional; a corner that no tried element splits
/// and that is not local raises DecompositionInconclusive.
std::vector<Summand> decompose(const EndStructure& e, const DecomposeOptions& options = {});
std::vector<Summand> decompose(const Representation& m, const DecomposeOptions& options = {});

}  // namespace qalg
