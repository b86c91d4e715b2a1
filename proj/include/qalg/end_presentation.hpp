#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/end_structure.hpp"

namespace qalg {

/// The presented algebra does not have the dimension of End(m).  This means
/// a bug, so it is never swallowed.
class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// m has isomorphic indecomposable summands, so End(m) is not basic and has
/// no presentation by a quiver with one vertex per summand.
class NotBasic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Isomorphism class index of each summand (first occurrence numbering).
/// Summands i and j are isomorphic exactly when e_i End(m) e_j leaves the
/// radical, which makes the test exact.
std::vector<std::size_t> isomorphism_classes(const EndStructure& e,
                                             const std::vector<Summand>& summands);

/// A path of the End quiver together with the endomorphism it stands for.
struct DictionaryEntry {
  Path path;
  Matrix total;
};

/// End(m) presented by a quiver with relations.  Vertex i stands for the
/// summand summands[i]; an arrow i -> j for a map from summand i to summand
/// j, so that paths multiply like endomorphisms ("first, then").
struct EndPresentation {
  Quiver quiver;
  std::vector<PathAlgElement> relations;
  /// adjacency[i][j] = number of arrows i -> j
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<Summand> summands;
  /// Trivial paths, arrows and every path kept as a new basis element, in
  /// discovery order; these form a basis of End(m) when complete.
  std::vector<DictionaryEntry> dictionary;
  /// Total matrix of each arrow, by arrow id.
  std::vector<Matrix> arrow_elements;
  std::size_t raw_relation_count = 0;
  std::size_t end_dimension = 0;
  /// The search reached max_length with new basis elements still appearing;
  /// the relations may not be complete and `algebra` is null.
  bool incomplete = false;
  AlgebraPtr algebra;
};

struct PresentationOptions {
  std::size_t max_length = 20;
  DecomposeOptions decompose;
};

/// Throws NotBasic when two summands are isomorphic.
EndPresentation end_as_quiver_algebra(const EndStructure& e, const PresentationOptions& options = {});
EndPresentation end_as_quiver_algebra(const Representation& m, const PresentationOptions& options = {});

/// The endomorphism a path-algebra element stands for (total matrix).
Matrix evaluate(const EndPresentation& p, const PathAlgElement& x);

/// Drops relations one at a time, in list order, whenever the rest still
/// give an algebra of dimension reference_dim; repeats until nothing more
/// can go.  A relation is dropped only once it is shown to lie in the ideal
/// of the others (see ideal_contains), so the dimension never changes.
std::vector<PathAlgElement> minimize_relations(const Quiver& quiver,
                                               std::vector<PathAlgElement> relations,
                                               std::size_t reference_dim,
                                               std::size_t length_cap = 20);

/// Builds the algebra and compares its dimension.  Throws NotFiniteDimensional.
bool presentation_dimension_check(const Quiver& quiver,
                                  const std::vector<PathAlgElement>& relations,
                                  std::size_t expected, std::size_t length_cap = 20);

using Adjacency = std::vector<std::vector<std::size_t>>;

/// A vertex bijection p with a[i][j] == b[p[i]][p[j]] for all i, j, or
/// nullopt when the two quivers are not isomorphic.
std::optional<std::vector<std::size_t>> match_adjacency(const Adjacency& a, const Adjacency& b);

/// Algebra file for the presentation followed by a commented summary
/// (summand dimensions, adjacency matrix, relation count).
std::string write_presentation(const EndPresentation& p);

}  // namespace qalg
