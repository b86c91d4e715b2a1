#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qalg/matrix.hpp"
#include "qalg/quiver.hpp"

namespace qalg {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quotient has a nonzero path of length >= the length cap, or the
/// Groebner basis computation ran past its guards.
class NotFiniteDimensional : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// The quotient is larger than the caller's dimension ceiling.
class DimensionLimitExceeded : public NotFiniteDimensional {
 public:
  using NotFiniteDimensional::NotFiniteDimensional;
};

/// The quotient is finite dimensional but the arrows are not nilpotent in
/// it (for example x^2 - x^3), so the relations are not admissible.
class NotAdmissible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class MalformedRelation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Sparse coefficient vector, sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

struct BuildOptions {
  std::size_t length_cap = 20;
  /// Abort with DimensionLimitExceeded once more standard paths are found.
  std::optional<std::size_t> dimension_ceiling;
  /// Guard against runaway enumeration for infinite-dimensional input.
  std::size_t path_budget = 4'000'000;
};

/// Finite-dimensional quotient KQ/I of a path algebra.
///
/// The basis consists of residue classes of paths (standard paths): those
/// that are not the leading path of any element of I, leading meaning
/// largest in the length-then-lexicographic order.  For admissible I this is
/// the same as the standard paths of I + J^N, J the arrow ideal and N the
/// nilpotency index of J modulo I.  Products of basis elements are
/// tabulated once at construction.
class PresentedAlgebra : public std::enable_shared_from_this<PresentedAlgebra> {
 public:
  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const std::vector<PathAlgElement>& relations() const noexcept { return relations_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  /// Smallest N with J^N contained in I: the first truncation length at
  /// which KQ/(I + J^N) stops growing.
  [[nodiscard]] std::size_t truncation_length() const noexcept { return truncation_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }

  /// Basis index of the idempotent e_v.
  [[nodiscard]] std::size_t vertex_idempotent(VertexId v) const { return v; }
  [[nodiscard]] std::optional<std::size_t> basis_index(const Path& p) const;
  /// Basis indices of standard paths from u to v, in basis order.
  [[nodiscard]] const std::vector<std::size_t>& basis_between(VertexId u, VertexId v) const;

  /// Product of two basis elements.
  [[nodiscard]] const SparseVector& product(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }
  [[nodiscard]] Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;

  [[nodiscard]] Vector normal_form(const PathAlgElement& x) const;
  [[nodiscard]] Vector normal_form(const Path& p) const;
  [[nodiscard]] PathAlgElement element(std::span<const Scalar> coords) const;

  /// Checks (b_i b_j) b_k = b_i (b_j b_k) over all basis triples.
  [[nodiscard]] bool is_associative() const;

  /// Opposite algebra, built on demand from the reversed quiver and
  /// relations.  The opposite of the opposite is this object again.
  [[nodiscard]] std::shared_ptr<const PresentedAlgebra> opposite() const;

  /// Same quiver and relation list (pointer-equal algebras trivially are).
  [[nodiscard]] bool same_presentation(const PresentedAlgebra& other) const;

 private:
  friend std::shared_ptr<const PresentedAlgebra> build_algebra(Quiver, std::vector<PathAlgElement>,
                                                               const BuildOptions&);
  PresentedAlgebra() = default;

  Quiver quiver_;
  std::vector<PathAlgElement> relations_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;  // (u * n + v) -> basis indices
  std::vector<SparseVector> table_;
  std::size_t truncation_ = 0;
  std::size_t length_cap_ = 20;

  mutable std::once_flag opposite_once_;
  mutable std::shared_ptr<const PresentedAlgebra> opposite_;
  std::weak_ptr<const PresentedAlgebra> opposite_of_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Builds KQ/I from a Groebner basis of I.  The result agrees with
/// truncating at the first N where KQ/(I + J^N) and KQ/(I + J^(N+1)) have
/// the same dimension; N + 1 must not exceed the length cap.  Relations must
/// be nonzero combinations of paths of length >= 2 sharing one source and
/// one target; zero relations are dropped.  Throws NotAdmissible when the
/// arrows are not nilpotent modulo I.
AlgebraPtr build_algebra(Quiver quiver, std::vector<PathAlgElement> relations,
                         const BuildOptions& options = {});

/// Dimension of KQ / (I + J^n), computed directly by linear algebra on the
/// paths of length < n.
std::size_t truncated_dimension(const Quiver& quiver, const std::vector<PathAlgElement>& relations,
                                std::size_t n);

/// Whether x lies in the ideal generated by `generators`, shown by reducing
/// x to zero against a Groebner basis computed through overlaps of length
/// <= word_limit.  The computation gives up once a coefficient needs more
/// than coefficient_bits bits.  True is always exact; false may also mean
/// "gave up".
bool ideal_contains(const std::vector<PathAlgElement>& generators, const PathAlgElement& x,
                    std::size_t word_limit, std::size_t coefficient_bits = 1024);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

}  // namespace qalg
