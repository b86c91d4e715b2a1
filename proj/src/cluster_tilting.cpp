#include "qalg/cluster_tilting.hpp"

namespace qalg {

bool is_ring_indecomposable(const PresentedAlgebra& a) { return a.quiver().is_connected(); }

bool is_semisimple(const PresentedAlgebra& a) { return a.dimension() == a.vertex_count(); }

namespace {

std::optional<std::size_t> matching_summand(const Representation& x,
                                            const std::vector<Summand>& summands,
                                            std::uint64_t seed) {
  IsomorphismOptions iso;
  iso.seed = seed;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (summands[k].module.dims() != x.dims()) continue;
    if (is_isomorphic(x, summands[k].module, iso)) return k;
  }
  return std::nullopt;
}

}  // namespace

GeneratorCogeneratorReport generator_cogenerator_report(const Representation& m,
                                                        const DecomposeOptions& options) {
  return generator_cogenerator_report(m, decompose(m, options), options.seed);
}

GeneratorCogeneratorReport generator_cogenerator_report(const Representation& m,
                                                        std::vector<Summand> summands,
                                                        std::uint64_t seed) {
  GeneratorCogeneratorReport out;
  out.summands = std::move(summands);
  out.holds = true;
  DecomposeOptions options;
  options.seed = seed;
  const auto& a = m.algebra();
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    out.projective_match.push_back(matching_summand(indec_projective(a, v), out.summands, options.seed));
    out.injective_match.push_back(matching_summand(indec_injective(a, v), out.summands, options.seed));
    out.holds = out.holds && out.projective_match.back() && out.injective_match.back();
  }
  return out;
}

bool is_generator_cogenerator(const Representation& m, const DecomposeOptions& options) {
  return generator_cogenerator_report(m, options).holds;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "true";
    case Verdict::Fails: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return {};
}

ClusterTiltingVerdict cluster_tilting_verdict(const Representation& m, std::size_t n,
                                              const VerdictBounds& bounds) {
  if (n < 2) throw std::invalid_argument("cluster tilting verdict needs n >= 2");
  ClusterTiltingVerdict out;
  out.n = n;
  const auto& a = *m.algebra();
  out.ring_indecomposable = is_ring_indecomposable(a);
  out.semisimple = is_semisimple(a);
  if (!out.ring_indecomposable || out.semisimple) {
    out.reason = out.semisimple ? "the algebra is semisimple" : "the algebra is not ring-indecomposable";
    return out;
  }

  DecomposeOptions dec;
  dec.seed = bounds.seed;
  const EndStructure end(m);
  auto summands = decompose(end, dec);
  const auto classes = isomorphism_classes(end, summands);
  std::vector<Representation> basic_parts;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (classes[i] == basic_parts.size()) basic_parts.push_back(summands[i].module);
  }
  out.generator_cogenerator = generator_cogenerator_report(m, std::move(summands), bounds.seed).holds;
  if (!out.generator_cogenerator) {
    out.verdict = Verdict::Fails;
    out.reason = "not a generator-cogenerator";
    return out;
  }

  for (std::size_t i = 1; i < n; ++i) out.self_ext.push_back(ext_dimension(m, m, i));
  for (std::size_t i = 0; i < out.self_ext.size(); ++i) {
    if (out.self_ext[i] != 0) {
      out.verdict = Verdict::Fails;
      out.reason = "Ext^" + std::to_string(i + 1) + "(m, m) has dimension " +
                   std::to_string(out.self_ext[i]);
      return out;
    }
  }

  PresentationOptions pres;
  pres.max_length = bounds.max_length;
  pres.decompose = dec;
  // End of the basic part is Morita equivalent to End(m)
  if (basic_parts.size() == classes.size()) {
    out.presentation = end_as_quiver_algebra(end, pres);
  } else {
    out.presentation = end_as_quiver_algebra(direct_sum(basic_parts).module, pres);
  }
  if (out.presentation->incomplete) {
    out.reason = "End presentation incomplete at path length " + std::to_string(bounds.max_length);
    return out;
  }
  const auto& b = out.presentation->algebra;
  const std::size_t target = n + 1;
  out.end_global_dimension = global_dimension(b, bounds.dimension);
  out.end_dominant_dimension = dominant_dimension(b, bounds.dimension);
  const Bounded& gl = *out.end_global_dimension;
  const Bounded& dom = *out.end_dominant_dimension;

  // ExceedsBound(k) means > k; AtLeastBound(k) means >= k
  const bool gl_unknown = !gl.exact() && gl.value < target;
  const bool dom_unknown = !dom.exact() && dom.value <= target;
  const bool gl_fits = gl.is(target);
  const bool dom_fits = dom.is(target);
  if ((!gl_fits && !gl_unknown) || (!dom_fits && !dom_unknown)) {
    out.verdict = Verdict::Fails;
    out.reason = "End has global dimension " + gl.to_string() + " and dominant dimension " +
                 dom.to_string() + ", not both " + std::to_string(target);
    return out;
  }
  if (gl_unknown || dom_unknown) {
    out.reason = "bound " + std::to_string(bounds.dimension) + " is too small to decide dimension " +
                 std::to_string(target);
    return out;
  }
  out.verdict = Verdict::Holds;
  out.reason = "End has global and dominant dimension " + std::to_string(target);
  return out;
}

}  // namespace qalg
