#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/end_presentation.hpp"
#include "qalg/homological.hpp"

namespace qalg {

/// Connected quiver and nonzero radical.  With relations in the square of
/// the arrow ideal, a connected quiver gives a ring-indecomposable algebra.
bool is_ring_indecomposable(const PresentedAlgebra& a);
bool is_semisimple(const PresentedAlgebra& a);

struct GeneratorCogeneratorReport {
  bool holds = false;
  /// Summand index isomorphic to P(v) / I(v), per vertex v.
  std::vector<std::optional<std::size_t>> projective_match;
  std::vector<std::optional<std::size_t>> injective_match;
  std::vector<Summand> summands;
};

/// Every indecomposable projective and injective is isomorphic to a summand
/// of m, checked with isomorphism witnesses against decompose(m).
GeneratorCogeneratorReport generator_cogenerator_report(const Representation& m,
                                                        const DecomposeOptions& options = {});
/// Same, reusing a decomposition of m.
GeneratorCogeneratorReport generator_cogenerator_report(const Representation& m,
                                                        std::vector<Summand> summands,
                                                        std::uint64_t seed = 0);
bool is_generator_cogenerator(const Representation& m, const DecomposeOptions& options = {});

struct VerdictBounds {
  /// Bound for the global and dominant dimension of End(m).
  std::size_t dimension = 6;
  std::size_t max_length = 20;
  std::uint64_t seed = 0;
};

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

struct ClusterTiltingVerdict {
  std::size_t n = 0;
  bool ring_indecomposable = false;
  bool semisimple = false;
  bool generator_cogenerator = false;
  std::optional<EndPresentation> presentation;
  std::optional<Bounded> end_global_dimension;
  std::optional<Bounded> end_dominant_dimension;
  /// dim Ext^i(m, m) for i = 1 .. n-1
  std::vector<std::size_t> self_ext;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
};

/// Decides whether m is n-cluster tilting through the higher Auslander
/// correspondence: m must be a generator-cogenerator, and then it is n-cluster
/// tilting exactly when End(m) has global and dominant dimension n + 1.
/// Ext^i(m, m) for 0 < i < n is computed first as a cross-check, and a
/// nonzero group already means Fails.  Repeated summands are dropped before
/// presenting End, which changes it only up to Morita equivalence.  Bounds
/// below n + 1 leave the answer Inconclusive, with the data gathered so far.
ClusterTiltingVerdict cluster_tilting_verdict(const Representation& m, std::size_t n,
                                              const VerdictBounds& bounds = {});

}  // namespace qalg
