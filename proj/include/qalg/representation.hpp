#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/matrix.hpp"

namespace qalg {

class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Right module over a presented algebra, given as a quiver representation:
/// a vector space per vertex and, for each arrow a: u -> v, a dim(u) x dim(v)
/// matrix.  Vectors are rows, so a path acts by the product of its arrow
/// matrices in path order.  Copies share their data.
class Representation {
 public:
  Representation() = default;
  /// Checks shapes only; use validate() for the relations.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  static Representation zero(AlgebraPtr algebra);

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return data_->algebra; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return data_->dims; }
  [[nodiscard]] std::size_t dim(VertexId v) const { return data_->dims.at(v); }
  [[nodiscard]] std::size_t total_dimension() const noexcept { return data_->total; }
  [[nodiscard]] bool is_zero() const noexcept { return data_->total == 0; }
  [[nodiscard]] const Matrix& map(ArrowId a) const { return data_->maps.at(a); }
  [[nodiscard]] const std::vector<Matrix>& maps() const noexcept { return data_->maps; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return data_->dims.size(); }
  /// Offset of vertex v's block in the total space.
  [[nodiscard]] std::size_t offset(VertexId v) const { return data_->offsets.at(v); }

  /// Action of a path: dim(source) x dim(target).
  [[nodiscard]] Matrix action(const Path& p) const;
  /// Action of an element of e_u A e_v given by coordinates over the algebra basis.
  [[nodiscard]] Matrix action(VertexId u, VertexId v, std::span<const Scalar> coords) const;

  /// Modules over the same algebra (pointer-equal or identical presentation).
  [[nodiscard]] bool compatible(const Representation& other) const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> maps;
  };
  std::shared_ptr<const Data> data_;
};

/// Homomorphism of representations: for every vertex v a dim_M(v) x dim_N(v)
/// matrix with M(a) f_v' = f_v N(a) for each arrow a: v -> v'.  Composition
/// is written left to right, compose(f, g) = "f, then g".
class ModuleHom {
 public:
  ModuleHom() = default;
  ModuleHom(Representation source, Representation target, std::vector<Matrix> maps);
  static ModuleHom identity(const Representation& m);
  static ModuleHom zero(const Representation& m, const Representation& n);
  /// Hom whose total matrix is `total` (must be block diagonal by vertex).
  static ModuleHom from_total(const Representation& m, const Representation& n, const Matrix& total);

  [[nodiscard]] const Representation& source() const noexcept { return source_; }
  [[nodiscard]] const Representation& target() const noexcept { return target_; }
  [[nodiscard]] const Matrix& at(VertexId v) const { return maps_.at(v); }
  [[nodiscard]] const std::vector<Matrix>& maps() const noexcept { return maps_; }

  [[nodiscard]] bool commutes() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_isomorphism() const;
  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  /// Block-diagonal matrix of the vertex maps on the total spaces.
  [[nodiscard]] Matrix total_matrix() const;

  ModuleHom& operator+=(const ModuleHom& rhs);
  ModuleHom& operator*=(const Scalar& c);
  friend ModuleHom operator+(ModuleHom a, const ModuleHom& b) { return a += b; }
  friend ModuleHom operator*(ModuleHom a, const Scalar& c) { return a *= c; }

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

ModuleHom compose(const ModuleHom& first, const ModuleHom& second);

struct Violation {
  std::string message;
};

/// Shapes and relations; nullopt when the representation is a module.
std::optional<Violation> validate(const Representation& r);

Representation simple_module(const AlgebraPtr& a, VertexId v);
/// P(v) = e_v A.  At vertex w its basis is the standard paths from v to w in
/// algebra basis order.
Representation indec_projective(const AlgebraPtr& a, VertexId v);
std::vector<Representation> indec_projectives(const AlgebraPtr& a);
/// I(v) = D(A e_v), the dual of the projective of the opposite algebra.
Representation indec_injective(const AlgebraPtr& a, VertexId v);
std::vector<Representation> indec_injectives(const AlgebraPtr& a);
/// A as a right module over itself.
Representation regular_module(const AlgebraPtr& a);

/// Vector-space dual: a module over the opposite algebra, same dimensions,
/// transposed arrow matrices.  Applying it twice returns the same matrices
/// over the original algebra.
Representation dual(const Representation& r);
/// D f : D N -> D M for f : M -> N.
ModuleHom dual(const ModuleHom& f);

struct DirectSum {
  Representation module;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};
DirectSum direct_sum(std::span<const Representation> summands);

/// Basis of Hom(m, n), deterministic order.
std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dimension(const Representation& m, const Representation& n);
/// Same space, solved directly on all vertex-map entries at once; meant for
/// small modules and as an independent check of hom_basis.
std::vector<ModuleHom> hom_basis_stacked(const Representation& m, const Representation& n);

/// A homomorphism M -> N is determined by the images of the top generators
/// of M.  HomSpace keeps those images so that any hom can be written in the
/// basis by reading a few entries.
class HomSpace {
 public:
  HomSpace(const Representation& m, const Representation& n);

  [[nodiscard]] const std::vector<ModuleHom>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  /// Images of the generators: one row per basis element.
  [[nodiscard]] const Matrix& generator_images() const noexcept { return images_; }
  /// Image of the generators under f, concatenated.
  [[nodiscard]] Vector generator_vector(const ModuleHom& f) const;
  /// Coordinates of f in the basis (f must be a hom m -> n).
  [[nodiscard]] Vector coordinates(const ModuleHom& f) const;
  /// Coordinates from a generator vector.
  [[nodiscard]] Vector coordinates(std::span<const Scalar> generator_vector) const;
  /// Generators of m as (vertex, coordinate index) pairs.
  [[nodiscard]] const std::vector<std::pair<VertexId, std::size_t>>& generators() const noexcept {
    return generators_;
  }
  /// Generator-vector columns whose entries are the coordinates.
  [[nodiscard]] const std::vector<std::size_t>& coordinate_columns() const noexcept {
    return free_columns_;
  }
  /// Start of generator k in a generator vector.
  [[nodiscard]] const std::vector<std::size_t>& generator_offsets() const noexcept { return offsets_; }
  /// Hom with the given coordinates.
  [[nodiscard]] ModuleHom combination(std::span<const Scalar> coords) const;

 private:
  std::vector<std::pair<VertexId, std::size_t>> generators_;
  std::vector<std::size_t> offsets_;  // start of generator k in a generator vector
  std::vector<ModuleHom> basis_;
  Matrix images_;
  std::vector<std::size_t> free_columns_;
};

struct Subobject {
  Representation module;
  ModuleHom inclusion;
};
struct Quotient {
  Representation module;
  ModuleHom projection;
};

/// Submodule spanned at each vertex by the given subspace; throws ModuleError
/// if the subspaces are not closed under the arrows.
Subobject submodule(const Representation& m, const std::vector<Subspace>& spaces);
Quotient quotient(const Representation& m, const std::vector<Subspace>& spaces);

Subobject kernel(const ModuleHom& h);
Subobject image(const ModuleHom& h);
Quotient cokernel(const ModuleHom& h);

struct RadicalTopSocle {
  Subobject radical;
  Quotient top;
  Subobject socle;
};
Subobject radical(const Representation& m);
Quotient top(const Representation& m);
Subobject socle(const Representation& m);
RadicalTopSocle radical_top_socle(const Representation& m);
/// Multiplicity of each simple in the top.
std::vector<std::size_t> top_multiplicities(const Representation& m);

/// Direct sum of indecomposable projectives P(tops[0]) + P(tops[1]) + ...
Representation projective_sum(const AlgebraPtr& a, std::span<const VertexId> tops);
/// Hom out of projective_sum(tops) sending generator k (the idempotent of
/// copy k) to images[k], a vector of n at vertex tops[k].
ModuleHom hom_from_projective_sum(const AlgebraPtr& a, std::span<const VertexId> tops,
                                  std::span<const Vector> images, const Representation& n);
/// Splits a vector of projective_sum(tops) at vertex w into one algebra
/// element (coordinates over the algebra basis) per copy.
std::vector<Vector> split_projective_vector(const AlgebraPtr& a, std::span<const VertexId> tops,
                                            VertexId w, std::span<const Scalar> x);

struct ProjectiveCover {
  Representation module;
  ModuleHom epi;
  std::vector<VertexId> tops;  ///< vertex of each indecomposable summand, in order
};
struct InjectiveEnvelope {
  Representation module;
  ModuleHom mono;
  std::vector<VertexId> socles;  ///< vertex of each indecomposable summand, in order
};
ProjectiveCover projective_cover(const Representation& m);
InjectiveEnvelope injective_envelope(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

struct IsomorphismResult {
  std::optional<ModuleHom> witness;
  /// False when "not isomorphic" rests on failed random trials only.
  bool certain = true;
  explicit operator bool() const noexcept { return witness.has_value(); }
};

struct IsomorphismOptions {
  std::uint64_t seed = 0;
  std::size_t attempts = 8;
};
/// Looks for an invertible hom among seeded random combinations of a Hom
/// basis.  A witness is always checked; a negative answer is certain only
/// when dimensions or Hom dimensions rule isomorphism out.
IsomorphismResult is_isomorphic(const Representation& m, const Representation& n,
                                const IsomorphismOptions& options = {});

}  // namespace qalg
