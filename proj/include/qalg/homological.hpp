#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qalg/representation.hpp"

namespace qalg {

/// Result of a search capped at a bound.
struct Bounded {
  enum class Kind {
    Exact,         ///< value is the answer
    ExceedsBound,  ///< the answer is larger than value (= the bound)
    AtLeastBound,  ///< the answer is at least value (= the bound)
  };
  Kind kind = Kind::Exact;
  std::size_t value = 0;

  [[nodiscard]] bool exact() const noexcept { return kind == Kind::Exact; }
  [[nodiscard]] bool is(std::size_t v) const noexcept { return exact() && value == v; }
  /// "3", "exceeds-bound", "at-least-bound"
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Bounded&, const Bounded&) = default;
};

/// k-th minimal syzygy; syzygy(m, 0) is m itself.
Representation syzygy(const Representation& m, std::size_t k = 1);

/// Minimal projective presentation P1 -> P0 -> m.
struct MinimalPresentation {
  ProjectiveCover p0;
  Subobject syzygy;  ///< kernel of p0.epi
  ProjectiveCover p1;
  ModuleHom map;     ///< P1 -> P0
};
MinimalPresentation minimal_presentation(const Representation& m);

/// Tr m: cokernel of Hom(P0, A) -> Hom(P1, A), a module over the opposite algebra.
Representation transpose(const Representation& m);
/// tau m = D Tr m, a module over the original algebra.
Representation ar_translate(const Representation& m);
/// tau of the first syzygy.
Representation tau2(const Representation& m);
/// m, tau2(m), ..., tau2^steps(m).
std::vector<Representation> tau2_orbit(const Representation& m, std::size_t steps);

/// dim Ext^i(m, n) for i >= 1, from the minimal projective resolution of m.
std::size_t ext_dimension(const Representation& m, const Representation& n, std::size_t i);
/// Same number computed as the homology of the complex Hom(P_*, n) by ranks.
std::size_t ext_dimension_by_complex(const Representation& m, const Representation& n,
                                     std::size_t i);

Bounded projective_dimension(const Representation& m, std::size_t bound);
Bounded injective_dimension(const Representation& m, std::size_t bound);
/// Largest projective dimension of a simple module.
Bounded global_dimension(const AlgebraPtr& a, std::size_t bound);
/// Index of the first non-projective term of the minimal injective
/// coresolution of the regular module, looking at terms 0 .. bound - 1.
Bounded dominant_dimension(const AlgebraPtr& a, std::size_t bound);

bool is_selfinjective(const AlgebraPtr& a);

/// Entry (i, j) = dim e_i A e_j.
Matrix cartan_matrix(const AlgebraPtr& a);
Scalar cartan_determinant(const AlgebraPtr& a);

}  // namespace qalg
