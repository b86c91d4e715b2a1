#include "qalg/verification.hpp"

#include <sstream>

#include "qalg/cluster_tilting.hpp"
#include "qalg/presets.hpp"

namespace qalg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return {};
}

void Report::value(std::string key, std::string value) {
  entries_.push_back({std::move(key), std::move(value), std::nullopt, CheckStatus::Pass});
}

CheckStatus Report::check(std::string key, std::string expected, std::string actual,
                          CheckStatus status) {
  entries_.push_back({std::move(key), std::move(actual), std::move(expected), status});
  return status;
}

CheckStatus Report::check(std::string key, const std::string& expected, const std::string& actual) {
  return check(std::move(key), expected, actual,
               actual == expected ? CheckStatus::Pass : CheckStatus::Fail);
}

CheckStatus Report::overall() const {
  CheckStatus out = CheckStatus::Pass;
  for (const auto& e : entries_) {
    if (!e.expected) continue;
    if (e.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (e.status == CheckStatus::Inconclusive) out = CheckStatus::Inconclusive;
  }
  return out;
}

std::string Report::first_divergence() const {
  for (auto wanted : {CheckStatus::Fail, CheckStatus::Inconclusive}) {
    for (const auto& e : entries_) {
      if (e.expected && e.status == wanted) {
        return e.key + ": expected " + *e.expected + ", got " + e.value;
      }
    }
  }
  return {};
}

int Report::exit_code() const {
  switch (overall()) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Inconclusive: return 2;
  }
  return 1;
}

std::string Report::structured() const {
  std::ostringstream os;
  for (const auto& e : entries_) os << e.key << " = " << e.value << '\n';
  for (const auto& e : entries_) {
    if (e.expected) os << "check." << e.key << " = " << to_string(e.status) << '\n';
  }
  os << "result = " << to_string(overall()) << '\n';
  if (overall() != CheckStatus::Pass) os << "first_divergence = " << first_divergence() << '\n';
  return os.str();
}

std::string Report::human() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    if (e.expected) {
      std::string tag = to_string(e.status);
      os << '[' << tag << ']' << std::string(13 - tag.size(), ' ') << e.key << " = " << e.value;
      if (e.status != CheckStatus::Pass) os << "  (expected " << *e.expected << ')';
    } else {
      os << std::string(15, ' ') << e.key << " = " << e.value;
    }
    os << '\n';
  }
  os << "result: " << to_string(overall()) << '\n';
  if (overall() != CheckStatus::Pass) os << "first divergence: " << first_divergence() << '\n';
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// "i->j:c" for every nonzero entry, 1-based
std::string adjacency_string(const Adjacency& adj) {
  std::string out;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = 0; j < adj.size(); ++j) {
      if (adj[i][j] == 0) continue;
      if (!out.empty()) out += ' ';
      out += std::to_string(i + 1) + "->" + std::to_string(j + 1) + ":" + std::to_string(adj[i][j]);
    }
  }
  return out;
}

CheckStatus check_bounded(Report& r, const std::string& key, const Bounded& b, std::size_t want) {
  CheckStatus status;
  if (b.exact()) {
    status = b.value == want ? CheckStatus::Pass : CheckStatus::Fail;
  } else if (b.kind == Bounded::Kind::ExceedsBound) {
    status = b.value >= want ? CheckStatus::Fail : CheckStatus::Inconclusive;
  } else {
    status = b.value > want ? CheckStatus::Fail : CheckStatus::Inconclusive;
  }
  return r.check(key, std::to_string(want), b.to_string(), status);
}

}  // namespace

Representation local_example_module(const AlgebraPtr& a) {
  return direct_sum(tau2_orbit(indec_injective(a, 0), 4)).module;
}

Report verify_local_example(const PipelineOptions& options) {
  Report r;
  auto failed = [](CheckStatus s) { return s == CheckStatus::Fail; };
  r.value("seed", std::to_string(options.seed));
  r.value("bound", std::to_string(options.bound));
  r.value("max_length", std::to_string(options.max_length));

  AlgebraPtr a;
  try {
    if (options.algebra) {
      a = build_algebra(options.algebra->quiver, options.algebra->relations);
    } else {
      a = preset_algebra("local6");
    }
  } catch (const AlgebraError& e) {
    r.check("A.dimension", "6", std::string("error: ") + e.what());
    return r;
  }
  if (failed(r.check("A.dimension", "6", std::to_string(a->dimension())))) return r;
  if (failed(r.check("A.vertices", "1", std::to_string(a->vertex_count())))) return r;
  if (failed(r.check("A.selfinjective", "false", yes_no(is_selfinjective(a))))) return r;

  // DA and its tau_2 iterates U1 .. U4
  auto orbit = tau2_orbit(indec_injective(a, 0), 4);
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    r.value("U" + std::to_string(k) + ".dimension", std::to_string(orbit[k].total_dimension()));
  }
  if (failed(r.check("U4.projective", "true", yes_no(is_projective(orbit[4]))))) return r;
  IsomorphismOptions iso;
  iso.seed = options.seed;
  auto witness = is_isomorphic(orbit[4], regular_module(a), iso);
  if (failed(r.check("U4.isomorphic_to_A", "true", yes_no(bool(witness)))))
    return r;
  r.value("U4.witness", witness.witness->is_isomorphism() ? "verified" : "invalid");

  const Representation m = direct_sum(orbit).module;
  r.value("M.dimension", std::to_string(m.total_dimension()));
  const EndStructure end(m);
  DecomposeOptions dec;
  dec.seed = options.seed;
  auto gc = generator_cogenerator_report(m, decompose(end, dec), options.seed);
  std::vector<std::size_t> summand_dims;
  for (const auto& s : gc.summands) summand_dims.push_back(s.module.total_dimension());
  r.value("M.summand_dimensions", join(summand_dims));
  if (failed(r.check("M.summands", "5", std::to_string(gc.summands.size())))) return r;
  if (failed(r.check("M.generator_cogenerator", "true", yes_no(gc.holds)))) return r;

  if (failed(r.check("end.dimension", "165", std::to_string(end.dimension())))) return r;
  PresentationOptions pres;
  pres.max_length = options.max_length;
  pres.decompose = dec;
  auto p = end_as_quiver_algebra(end, pres);
  if (failed(r.check("end.complete", "true", yes_no(!p.incomplete)))) return r;
  if (failed(r.check("end.vertices", "5", std::to_string(p.quiver.vertex_count())))) return r;
  if (failed(r.check("end.arrows", "10", std::to_string(p.quiver.arrow_count())))) return r;
  r.value("end.adjacency", adjacency_string(p.adjacency));
  const auto reference = preset_algebra("local6-end");
  const auto ref_adj = reference->quiver().adjacency();
  r.value("reference.adjacency", adjacency_string(ref_adj));
  auto matching = match_adjacency(p.adjacency, ref_adj);
  if (failed(r.check("end.adjacency_matches_reference", "true", yes_no(matching.has_value()))))
    return r;
  std::vector<std::size_t> one_based;
  for (auto v : *matching) one_based.push_back(v + 1);
  r.value("end.vertex_matching", join(one_based));
  bool vanish = true;
  const Matrix zero(m.total_dimension(), m.total_dimension());
  for (const auto& rel : p.relations) vanish = vanish && evaluate(p, rel) == zero;
  if (failed(r.check("end.relations_vanish", "true", yes_no(vanish)))) return r;
  if (failed(r.check("end.presented_dimension", "165", std::to_string(p.algebra->dimension()))))
    return r;

  const auto& b = p.algebra;
  if (failed(check_bounded(r, "B.global_dimension", global_dimension(b, options.bound), 3))) return r;
  if (failed(check_bounded(r, "B.dominant_dimension", dominant_dimension(b, options.bound), 3)))
    return r;
  if (failed(r.check("B.cartan_determinant", "1", cartan_determinant(b).to_string()))) return r;

  auto reduced = minimize_relations(p.quiver, p.relations, end.dimension(), options.max_length);
  r.value("end.raw_relations", std::to_string(p.raw_relation_count));
  r.value("end.minimized_relations", std::to_string(reduced.size()));
  if (failed(r.check("end.minimization_reduces", "true",
                     yes_no(reduced.size() < p.raw_relation_count))))
    return r;
  BuildOptions build;
  build.length_cap = options.max_length;
  const auto minimized = build_algebra(p.quiver, reduced, build);
  if (failed(r.check("end.minimized_dimension", "165", std::to_string(minimized->dimension()))))
    return r;
  r.value("reference.relations", std::to_string(reference->relations().size()));
  if (failed(r.check("reference.dimension", "165", std::to_string(reference->dimension()))))
    return r;

  const auto da = orbit[0];
  if (failed(r.check("ext1.DA_A", "0", std::to_string(ext_dimension(da, regular_module(a), 1)))))
    return r;
  if (failed(r.check("ext1.M_M", "0", std::to_string(ext_dimension(m, m, 1))))) return r;

  VerdictBounds vb;
  vb.dimension = options.bound;
  vb.max_length = options.max_length;
  vb.seed = options.seed;
  auto verdict = cluster_tilting_verdict(m, 2, vb);
  CheckStatus status = verdict.verdict == Verdict::Holds   ? CheckStatus::Pass
                       : verdict.verdict == Verdict::Fails ? CheckStatus::Fail
                                                           : CheckStatus::Inconclusive;
  r.check("verdict.cluster_tilting_2", "true", to_string(verdict.verdict), status);
  r.value("verdict.reason", verdict.reason);
  return r;
}

}  // namespace qalg
